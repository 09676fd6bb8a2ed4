#pragma once

#include <stdexcept>
#include <vector>

#include "dicke/matrix.hpp"

namespace dicke {

// Iteration cap exceeded, or an inverse-iteration vector failed its residual
// certificate. Thrown instead of ever returning unverified eigenpairs.
class NonConvergenceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Result of a symmetric eigendecomposition. Eigenvalues are ascending;
// eigenvectors[j] is the unit vector paired with eigenvalues[j] (sign fixed
// so the largest-magnitude component is positive). residual_bound is the
// maximum of ||H v - E v||_2 over the computed pairs.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors;
    double residual_bound = 0.0;
};

// Full decomposition (all pairs). Requires h.symmetric.
EigenDecomposition eigh(const OperatorMatrix& h);

// The k_lowest smallest eigenpairs (1 <= k_lowest <= dim). Eigenvalues of the
// whole spectrum are computed; eigenvectors only for the requested pairs,
// via tridiagonal inverse iteration plus Householder back-transform, which
// is much cheaper than accumulating the full transform.
EigenDecomposition eigh(const OperatorMatrix& h, int k_lowest);

// All eigenvalues, no eigenvectors: the cheap path used by parameter sweeps.
std::vector<double> symmetric_eigenvalues(const OperatorMatrix& h);

namespace detail {

// Eigenvalues of a symmetric tridiagonal matrix, ascending. d is the
// diagonal; e[i] couples i-1 and i (e[0] unused).
std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e);

// Unit eigenvector of a symmetric tridiagonal matrix for one known
// eigenvalue, by shifted inverse iteration.
std::vector<double> tridiagonal_eigenvector(const std::vector<double>& d,
                                            const std::vector<double>& e, double eigenvalue);

}  // namespace detail

}  // namespace dicke
