#include "dicke/operators.hpp"

#include <cmath>

namespace dicke {

OperatorMatrix annihilation(const FockBasis& fock) {
    OperatorMatrix a(fock.dim(), fock.tag(), false);
    for (int n = 1; n <= fock.cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

std::pair<OperatorMatrix, OperatorMatrix> quadrature_square_matrices(const FockBasis& fock) {
    const OperatorMatrix a = annihilation(fock);
    const OperatorMatrix adag = transpose(a);
    const OperatorMatrix plus = linear_combination(1.0, a, 1.0, adag);   // a + a^dag
    const OperatorMatrix minus = linear_combination(1.0, a, -1.0, adag); // a - a^dag
    OperatorMatrix x1sq = multiply(plus, plus);
    OperatorMatrix x2sq = multiply(minus, minus);
    for (double& v : x1sq.entries) v *= 0.25;
    // X2 = (a - a^dag)/(2i), so X2^2 = -(a - a^dag)^2/4: real and symmetric.
    for (double& v : x2sq.entries) v *= -0.25;
    x1sq.symmetric = true;
    x2sq.symmetric = true;
    return {std::move(x1sq), std::move(x2sq)};
}

std::pair<OperatorMatrix, OperatorMatrix> collective_spin(const SpinBasis& spin) {
    const double j = spin.j();
    const int d = spin.dim();
    OperatorMatrix jz(d, spin.tag(), true);
    OperatorMatrix jx(d, spin.tag(), true);
    for (int mi = 0; mi < d; ++mi) jz(mi, mi) = mi - j;
    for (int mi = 0; mi + 1 < d; ++mi) {
        const double m = mi - j;
        // <j,m+1|J+|j,m> = sqrt(j(j+1) - m(m+1)); Jx = (J+ + J-)/2.
        const double half_ladder = 0.5 * std::sqrt(j * (j + 1.0) - m * (m + 1.0));
        jx(mi + 1, mi) = half_ladder;
        jx(mi, mi + 1) = half_ladder;
    }
    return {std::move(jz), std::move(jx)};
}

OperatorMatrix tensor(const OperatorMatrix& a, const OperatorMatrix& b) {
    const int da = a.dim;
    const int db = b.dim;
    OperatorMatrix out(da * db, a.basis_tag + "(x)" + b.basis_tag, a.symmetric && b.symmetric);
    for (int i = 0; i < da; ++i)
        for (int k = 0; k < da; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < db; ++j)
                for (int l = 0; l < db; ++l) {
                    const double v = aik * b(j, l);
                    if (v != 0.0) out(i * db + j, k * db + l) = v;
                }
        }
    return out;
}

}  // namespace dicke
