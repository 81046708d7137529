#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

namespace selfcomm {

using cx = std::complex<double>;

/// Dense square complex matrix, row-major, immutable by convention:
/// every operation returns a fresh value. Entries must stay finite;
/// constructors and set() reject NaN/Inf.
class Matrix {
public:
    explicit Matrix(int n);
    Matrix(int n, std::vector<cx> entries);
    Matrix(std::initializer_list<std::initializer_list<cx>> rows);

    static Matrix identity(int n);
    static Matrix zero(int n);
    /// diag(d_1, ..., d_n)
    static Matrix diagonal(const std::vector<cx>& d);

    int dim() const { return n_; }
    const cx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, cx v);
    const std::vector<cx>& entries() const { return a_; }

    cx trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    friend Matrix operator+(const Matrix& x, const Matrix& y);
    friend Matrix operator-(const Matrix& x, const Matrix& y);
    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Matrix operator*(cx c, const Matrix& x);

private:
    int n_;
    std::vector<cx> a_;
    void check_finite() const;
};

/// Conjugate transpose.
Matrix adjoint(const Matrix& a);

/// A*A - AA*. Hermitian and traceless for any square A.
Matrix self_commutator(const Matrix& a);

/// Rotated Cartesian decomposition of A_t = A e^{it}:
/// returns (H_t, J_t) with H_t = (A_t + A_t*)/2, J_t = (A_t - A_t*)/(2i),
/// both Hermitian, H_t + i J_t = A_t.
std::pair<Matrix, Matrix> cartesian_parts(const Matrix& a, double t);

/// Max |entry| of X - Y, a cheap entrywise distance for tests and guards.
double entrywise_distance(const Matrix& x, const Matrix& y);

bool is_hermitian(const Matrix& a, double rel_tol = 1e-10);

}  // namespace selfcomm
