#pragma once

#include "selfcomm/matrix.hpp"

#include <vector>

namespace selfcomm {

/// Spectral decomposition of a Hermitian matrix: H = V diag(values) V*,
/// values ascending, columns of V orthonormal.
struct HermitianEigen {
    std::vector<double> values;
    Matrix vectors;

    double min() const { return values.front(); }
    double max() const { return values.back(); }
    /// lambda_max - lambda_min.
    double spread() const { return values.back() - values.front(); }
};

/// Full spectral decomposition. Rejects inputs with ||H - H*|| > 1e-10 ||H||.
/// Small matrices go through cyclic complex Jacobi sweeps; larger ones
/// through Householder tridiagonalization + implicit-shift QL. Both meet
/// the same reconstruction contract: ||H - V Lambda V*|| <= 1e-12 n ||H||.
HermitianEigen hermitian_eigen(const Matrix& h);

/// Eigenvalues only (same solver, skips accumulating vectors where possible).
std::vector<double> hermitian_eigenvalues(const Matrix& h);

/// Spectral norm sqrt(lambda_max(A*A)).
double operator_norm(const Matrix& a);

/// inf over complex lambda of ||H - lambda I|| for Hermitian H.
/// The optimum sits at the real midpoint of the spectrum, so this is
/// (lambda_max - lambda_min)/2 exactly.
double hermitian_min_shift(const Matrix& h);

}  // namespace selfcomm
