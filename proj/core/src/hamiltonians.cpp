#include "dicke/hamiltonians.hpp"

#include <cmath>

#include "dicke/basis.hpp"
#include "dicke/operators.hpp"

namespace dicke {

EffectiveCoefficients effective_coefficients(double lambda, double epsilon, double beta) {
    ModelParams check;
    check.lambda = lambda;
    check.epsilon = epsilon;
    check.beta = beta;
    check.validate();
    const double t = std::isinf(beta) ? 1.0 : std::tanh(0.5 * beta * epsilon);
    const double gamma2 = -(lambda * lambda / epsilon) * t;
    return {1.0 + 2.0 * gamma2, gamma2, 4.0 * gamma2};
}

OperatorMatrix effective_photon_hamiltonian(const ModelParams& params) {
    params.validate();
    const EffectiveCoefficients c =
        effective_coefficients(params.lambda, params.epsilon, params.beta);
    const FockBasis fock(params.cutoff);
    OperatorMatrix h(fock.dim(), fock.tag(), true);
    for (int n = 0; n <= params.cutoff; ++n) {
        h(n, n) = c.omega * (n + 0.5) - 0.5;
        if (n + 2 <= params.cutoff) {
            // (a^dag^2 + a^2) couples n and n+2 with sqrt((n+1)(n+2)).
            const double v = c.gamma2 * std::sqrt(static_cast<double>(n + 1) * (n + 2));
            h(n, n + 2) = v;
            h(n + 2, n) = v;
        }
    }
    return h;
}

OperatorMatrix dicke_hamiltonian(const ModelParams& params) {
    params.validate();
    const FockBasis fock(params.cutoff);
    const SpinBasis spin(params.n_atoms);

    const OperatorMatrix a = annihilation(fock);
    const OperatorMatrix adag = transpose(a);
    OperatorMatrix number = multiply(adag, a);
    number.symmetric = true;  // a^dag a is diagonal on the truncated basis
    OperatorMatrix field = linear_combination(1.0, a, 1.0, adag);
    field.symmetric = true;  // a + a^dag: mirrored entries come from the same sqrt
    const auto [jz, jx] = collective_spin(spin);

    const OperatorMatrix photon_part = tensor(number, OperatorMatrix::identity(spin.dim(), spin.tag()));
    const OperatorMatrix atom_part = tensor(OperatorMatrix::identity(fock.dim(), fock.tag()), jz);
    const OperatorMatrix coupling_part = tensor(field, jx);

    const double g = 2.0 * params.lambda / std::sqrt(static_cast<double>(params.n_atoms));
    OperatorMatrix h = linear_combination(1.0, photon_part, params.epsilon, atom_part);
    h = linear_combination(1.0, h, g, coupling_part);
    return h;
}

}  // namespace dicke
