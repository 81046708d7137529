#include "selfcomm/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace selfcomm {

namespace {
bool finite(cx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }
}  // namespace

Matrix::Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, cx{0.0, 0.0}) {
    if (n < 1) throw std::invalid_argument("Matrix: dimension must be >= 1");
}

Matrix::Matrix(int n, std::vector<cx> entries) : n_(n), a_(std::move(entries)) {
    if (n < 1) throw std::invalid_argument("Matrix: dimension must be >= 1");
    if (a_.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("Matrix: entry count does not match dimension");
    check_finite();
}

Matrix::Matrix(std::initializer_list<std::initializer_list<cx>> rows)
    : n_(static_cast<int>(rows.size())) {
    if (n_ < 1) throw std::invalid_argument("Matrix: dimension must be >= 1");
    a_.reserve(static_cast<size_t>(n_) * n_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("Matrix: ragged initializer (matrix must be square)");
        for (cx v : row) a_.push_back(v);
    }
    check_finite();
}

void Matrix::check_finite() const {
    for (cx v : a_)
        if (!finite(v)) throw std::invalid_argument("Matrix: non-finite entry");
}

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.a_[static_cast<size_t>(i) * n + i] = 1.0;
    return m;
}

Matrix Matrix::zero(int n) { return Matrix(n); }

Matrix Matrix::diagonal(const std::vector<cx>& d) {
    Matrix m(static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
    return m;
}

void Matrix::set(int i, int j, cx v) {
    if (!finite(v)) throw std::invalid_argument("Matrix: non-finite entry");
    a_[static_cast<size_t>(i) * n_ + j] = v;
}

cx Matrix::trace() const {
    cx t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (cx v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (cx v : a_) m = std::max(m, std::abs(v));
    return m;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("Matrix add: dimension mismatch");
    Matrix r(x.n_);
    for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
    return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("Matrix sub: dimension mismatch");
    Matrix r(x.n_);
    for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
    return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("Matrix mul: dimension mismatch");
    const int n = x.n_;
    Matrix r(n);
    // ikj order keeps the inner loop contiguous in both r and y.
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cx xik = x(i, k);
            if (xik == cx{0.0, 0.0}) continue;
            const cx* yrow = &y.a_[static_cast<size_t>(k) * n];
            cx* rrow = &r.a_[static_cast<size_t>(i) * n];
            for (int j = 0; j < n; ++j) rrow[j] += xik * yrow[j];
        }
    }
    return r;
}

Matrix operator*(cx c, const Matrix& x) {
    Matrix r(x.n_);
    for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = c * x.a_[k];
    return r;
}

Matrix adjoint(const Matrix& a) {
    const int n = a.dim();
    Matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.set(i, j, std::conj(a(j, i)));
    return r;
}

Matrix self_commutator(const Matrix& a) {
    const Matrix as = adjoint(a);
    return as * a - a * as;
}

std::pair<Matrix, Matrix> cartesian_parts(const Matrix& a, double t) {
    const cx phase = std::polar(1.0, t);
    const Matrix at = phase * a;
    const Matrix ats = adjoint(at);
    const int n = a.dim();
    Matrix h(n), j(n);
    const cx half{0.5, 0.0};
    const cx halfi{0.0, -0.5};  // 1/(2i)
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            h.set(r, c, half * (at(r, c) + ats(r, c)));
            j.set(r, c, halfi * (at(r, c) - ats(r, c)));
        }
    return {std::move(h), std::move(j)};
}

double entrywise_distance(const Matrix& x, const Matrix& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("entrywise_distance: dimension mismatch");
    double m = 0.0;
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) m = std::max(m, std::abs(x(i, j) - y(i, j)));
    return m;
}

bool is_hermitian(const Matrix& a, double rel_tol) {
    double off = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) off = std::max(off, std::abs(a(i, j) - std::conj(a(j, i))));
    return off <= rel_tol * std::max(1e-300, a.max_abs());
}

}  // namespace selfcomm
