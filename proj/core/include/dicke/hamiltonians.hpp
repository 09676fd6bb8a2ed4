#pragma once

#include "dicke/matrix.hpp"
#include "dicke/params.hpp"

namespace dicke {

// Coefficients of the effective photon Hamiltonian
//   H_eff = omega (a^dag a + 1/2) + gamma2 (a^dag^2 + a^2) - 1/2.
// Two conventions for the quadratic-form coefficient circulate: gamma2
// multiplies (a^dag^2 + a^2) in H_eff, while the SU(1,1) phase-space
// equations use gamma_k = 4*gamma2. Both are carried explicitly so that no
// silent factor-of-four slips in.
struct EffectiveCoefficients {
    double omega;
    double gamma2;
    double gamma_k;  // always 4 * gamma2
};

// Thermal coefficients: with t = tanh(beta*epsilon/2) (t = 1 at zero
// temperature), omega = 1 - (2 lambda^2/epsilon) t and
// gamma2 = -(lambda^2/epsilon) t.
EffectiveCoefficients effective_coefficients(double lambda, double epsilon, double beta);

// H_eff on FockBasis(params.cutoff), real symmetric.
OperatorMatrix effective_photon_hamiltonian(const ModelParams& params);

// Full Dicke Hamiltonian on FockBasis x SpinBasis (photon index slowest):
//   H = a^dag a + epsilon Jz + (2 lambda / sqrt(N)) (a + a^dag) Jx.
// The coupling is normalized so that, at epsilon = 1, the mean-field
// critical point sits at lambda_c = 1/2 and the effective-Hamiltonian
// coefficients above follow from second-order elimination of the atoms.
// Equivalently the interaction is (lambda/sqrt(N))(a+a^dag) sum_i sigma_x^i,
// since Jx = (1/2) sum_i sigma_x^i.
OperatorMatrix dicke_hamiltonian(const ModelParams& params);

}  // namespace dicke
