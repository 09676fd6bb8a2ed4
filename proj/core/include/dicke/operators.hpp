#pragma once

#include <utility>

#include "dicke/basis.hpp"
#include "dicke/matrix.hpp"

namespace dicke {

// Photon annihilation operator a on the truncated Fock basis:
// <n-1|a|n> = sqrt(n). Its transpose acts as the creation operator a^dag.
OperatorMatrix annihilation(const FockBasis& fock);

// Squared quadratures X1^2 = (1/4)(a+a^dag)^2 and X2^2 = -(1/4)(a-a^dag)^2,
// both formed as products of the truncated factors (so the highest-n corner
// row carries the usual truncation deficit). The i^2 sign of X2 is absorbed,
// making both matrices real symmetric.
std::pair<OperatorMatrix, OperatorMatrix> quadrature_square_matrices(const FockBasis& fock);

// Collective spin matrices on the maximal sector j = N/2: Jz diagonal with
// entries m, and Jx = (J+ + J-)/2 with the standard ladder elements
// <j,m+-1|J+-|j,m> = sqrt(j(j+1) - m(m+-1)).
std::pair<OperatorMatrix, OperatorMatrix> collective_spin(const SpinBasis& spin);

// Kronecker product with the LEFT factor's index slowest. Throughout this
// library the photon factor is placed on the left, so a product-space index
// I decomposes as I = n * dim(spin) + mi.
OperatorMatrix tensor(const OperatorMatrix& a, const OperatorMatrix& b);

}  // namespace dicke
