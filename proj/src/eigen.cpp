#include "selfcomm/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace selfcomm {

namespace {

constexpr double kHermTol = 1e-10;
constexpr int kJacobiMaxSweeps = 100;
constexpr int kQlMaxIter = 60;
constexpr int kJacobiCutoff = 48;  // above this, Householder + QL is much faster

double off_diagonal_mass(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

void sort_ascending(std::vector<double>& values, Matrix* vectors) {
    const int n = static_cast<int>(values.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return values[a] < values[b]; });
    std::vector<double> vs(n);
    for (int k = 0; k < n; ++k) vs[k] = values[idx[k]];
    if (vectors) {
        Matrix sorted(n);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) sorted.set(i, k, (*vectors)(i, idx[k]));
        *vectors = sorted;
    }
    values = vs;
}

// Cyclic complex Jacobi. Each rotation annihilates one off-diagonal pair;
// sweeps run until the off-diagonal Frobenius mass is <= 1e-14 ||H||_F.
HermitianEigen jacobi_eigen(Matrix a, bool want_vectors) {
    const int n = a.dim();
    Matrix v = Matrix::identity(n);
    const double scale = std::max(a.frobenius_norm(), 1e-300);

    int sweep = 0;
    while (off_diagonal_mass(a) > 1e-14 * scale) {
        if (sweep++ >= kJacobiMaxSweeps)
            throw std::runtime_error("hermitian_eigen: Jacobi sweeps did not converge");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cx apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= 1e-300) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const cx phase = apq / r;

                // tan(2 theta) = 2r / (app - aqq), smaller root for stability
                const double tau = (app - aqq) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(tau, 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const cx sp = s * phase;
                const cx spc = s * std::conj(phase);

                for (int k = 0; k < n; ++k) {  // A <- A J on columns p, q
                    const cx akp = a(k, p), akq = a(k, q);
                    a.set(k, p, c * akp + spc * akq);
                    a.set(k, q, -sp * akp + c * akq);
                }
                for (int k = 0; k < n; ++k) {  // A <- J* A on rows p, q
                    const cx apk = a(p, k), aqk = a(q, k);
                    a.set(p, k, c * apk + sp * aqk);
                    a.set(q, k, -spc * apk + c * aqk);
                }
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);
                a.set(p, p, cx{a(p, p).real(), 0.0});
                a.set(q, q, cx{a(q, q).real(), 0.0});
                if (want_vectors) {
                    for (int k = 0; k < n; ++k) {  // V <- V J
                        const cx vkp = v(k, p), vkq = v(k, q);
                        v.set(k, p, c * vkp + spc * vkq);
                        v.set(k, q, -sp * vkp + c * vkq);
                    }
                }
            }
        }
    }

    HermitianEigen out{std::vector<double>(n), std::move(v)};
    for (int i = 0; i < n; ++i) out.values[i] = a(i, i).real();
    sort_ascending(out.values, want_vectors ? &out.vectors : nullptr);
    return out;
}

// Householder reduction of a Hermitian matrix to real symmetric tridiagonal
// form, accumulating the unitary Q with Q* H Q = T. A trailing diagonal
// phase similarity makes the subdiagonal real.
void householder_tridiag(Matrix& a, Matrix& q, std::vector<double>& d, std::vector<double>& e) {
    const int n = a.dim();
    q = Matrix::identity(n);
    std::vector<cx> vvec(n), p(n), w(n);

    for (int k = 0; k < n - 2; ++k) {
        double sigma2 = 0.0;
        for (int i = k + 1; i < n; ++i) sigma2 += std::norm(a(i, k));
        const double sigma = std::sqrt(sigma2);
        if (sigma <= 1e-300) continue;
        const cx x0 = a(k + 1, k);
        const cx phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : cx{1.0, 0.0};

        // v = x + phase*sigma*e1 reflects the pivot column onto -phase*sigma*e1
        for (int i = k + 1; i < n; ++i) vvec[i] = a(i, k);
        vvec[k + 1] += phase * sigma;
        double vnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) vnorm2 += std::norm(vvec[i]);
        if (vnorm2 <= 1e-300) continue;
        const double tau = 2.0 / vnorm2;

        // Hermitian rank-2 update of the trailing block: A -= v w* + w v*
        for (int i = k + 1; i < n; ++i) {
            cx acc = 0.0;
            for (int j = k + 1; j < n; ++j) acc += a(i, j) * vvec[j];
            p[i] = tau * acc;
        }
        cx kappa = 0.0;
        for (int i = k + 1; i < n; ++i) kappa += std::conj(vvec[i]) * p[i];
        kappa *= 0.5 * tau;
        for (int i = k + 1; i < n; ++i) w[i] = p[i] - kappa * vvec[i];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.set(i, j, a(i, j) - vvec[i] * std::conj(w[j]) - w[i] * std::conj(vvec[j]));

        a.set(k + 1, k, -phase * sigma);
        a.set(k, k + 1, -std::conj(phase) * sigma);
        for (int i = k + 2; i < n; ++i) {
            a.set(i, k, 0.0);
            a.set(k, i, 0.0);
        }

        // Q <- Q (I - tau v v*)
        for (int i = 0; i < n; ++i) {
            cx acc = 0.0;
            for (int j = k + 1; j < n; ++j) acc += q(i, j) * vvec[j];
            acc *= tau;
            for (int j = k + 1; j < n; ++j) q.set(i, j, q(i, j) - acc * std::conj(vvec[j]));
        }
    }

    d.assign(n, 0.0);
    e.assign(n > 0 ? n - 1 : 0, 0.0);
    for (int k = 0; k < n; ++k) d[k] = a(k, k).real();
    cx dk{1.0, 0.0};
    for (int k = 0; k + 1 < n; ++k) {
        const cx sub = a(k + 1, k);
        const double m = std::abs(sub);
        e[k] = m;
        const cx dnext = (m > 0.0) ? dk * (sub / m) : dk;  // conj(dnext) sub dk = |sub|
        for (int i = 0; i < n; ++i) q.set(i, k + 1, q(i, k + 1) * dnext);
        dk = dnext;
    }
}

// Implicit-shift QL on a real symmetric tridiagonal (d, e), rotating the
// complex columns of z along. Classic tql2 recurrence.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Matrix* z) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return;
    e.push_back(0.0);  // sentinel e[n-1]

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == kQlMaxIter)
                    throw std::runtime_error("hermitian_eigen: QL iteration did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        for (int k = 0; k < n; ++k) {
                            const cx zi = (*z)(k, i);
                            const cx zi1 = (*z)(k, i + 1);
                            z->set(k, i + 1, s * zi + c * zi1);
                            z->set(k, i, c * zi - s * zi1);
                        }
                    }
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    e.pop_back();
}

HermitianEigen householder_ql_eigen(Matrix a, bool want_vectors) {
    const int n = a.dim();
    Matrix q(n);
    std::vector<double> d, e;
    householder_tridiag(a, q, d, e);
    ql_implicit(d, e, want_vectors ? &q : nullptr);
    HermitianEigen out{std::move(d), std::move(q)};
    sort_ascending(out.values, want_vectors ? &out.vectors : nullptr);
    return out;
}

Matrix hermitian_part_checked(const Matrix& h, const char* who) {
    if (!is_hermitian(h, kHermTol))
        throw std::invalid_argument(std::string(who) + ": input is not Hermitian within tolerance");
    const int n = h.dim();
    Matrix sym(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sym.set(i, j, 0.5 * (h(i, j) + std::conj(h(j, i))));
    return sym;
}

HermitianEigen eigen_dispatch(const Matrix& h, bool want_vectors) {
    Matrix sym = hermitian_part_checked(h, "hermitian_eigen");
    if (sym.dim() <= kJacobiCutoff) return jacobi_eigen(std::move(sym), want_vectors);
    return householder_ql_eigen(std::move(sym), want_vectors);
}

}  // namespace

HermitianEigen hermitian_eigen(const Matrix& h) { return eigen_dispatch(h, true); }

std::vector<double> hermitian_eigenvalues(const Matrix& h) {
    return eigen_dispatch(h, false).values;
}

double operator_norm(const Matrix& a) {
    const Matrix gram = adjoint(a) * a;
    const std::vector<double> ev = hermitian_eigenvalues(gram);
    return std::sqrt(std::max(0.0, ev.back()));
}

double hermitian_min_shift(const Matrix& h) {
    if (!is_hermitian(h, kHermTol))
        throw std::invalid_argument("hermitian_min_shift: input is not Hermitian within tolerance");
    const std::vector<double> ev = hermitian_eigenvalues(h);
    return 0.5 * (ev.back() - ev.front());
}

}  // namespace selfcomm
