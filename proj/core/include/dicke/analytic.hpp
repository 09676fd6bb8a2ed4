#pragma once

#include <optional>

namespace dicke {

// SU(1,1) coherent-state label: squeezing magnitude theta, phase phi
// (normalized into [0, 2pi) on construction), Bargmann index k. Only
// k = 1/4 (squeezed vacuum) and k = 3/4 (squeezed one-photon state) occur.
struct PhaseState {
    double theta;
    double phi;
    double k;

    PhaseState(double theta_, double phi_, double k_);
};

// Roots alpha of gamma2 * alpha^2 - omega * alpha + gamma2 = 0, the
// condition that the Bogoliubov-rotated Hamiltonian has no (b^dag^2 + b^2)
// term. alpha_minus is the physical root (|alpha| < 1 below the critical
// coupling); the roots multiply to 1. b_frequency is the excitation energy
// sqrt(1 - 4 lambda^2) of the rotated oscillator.
struct BogoliubovSolution {
    double alpha_minus;
    double alpha_plus;
    double b_frequency;
};

// Valid for 0 < lambda <= 0.5 (at 0.5 the two roots merge at -1). lambda = 0
// is rejected explicitly: the quadratic degenerates to a linear equation and
// the second root escapes to infinity. lambda > 0.5 is rejected: no real
// roots (super-radiant regime).
BogoliubovSolution bogoliubov_alpha(double lambda);

// Excitation gap and ground energy of the effective photon Hamiltonian at
// epsilon = 1, zero temperature:
//   gap = sqrt(1 - 4 lambda^2),  e0 = (sqrt(1 - 4 lambda^2) - 1) / 2.
// Valid for 0 <= lambda <= 0.5; above that the spectrum is unbounded below
// and a domain error is thrown.
struct GapEnergy {
    double gap;
    double e0;
};
GapEnergy gap_and_energy(double lambda);

// Stationary squeezing theta* = arccoth((1 - 2 lambda^2)/(2 lambda^2)) of
// the phase-space flow (paired with phi = pi), evaluated in the
// cancellation-free form -log1p(-4 lambda^2)/2. Returns 0 at lambda = 0 (the
// continuous limit); throws for lambda >= 0.5 where no real solution exists.
double fixed_point_theta(double lambda);

// Closed-form photon statistics of an SU(1,1) coherent state:
//   N        = 2k cosh(theta) - 1/2
//   (DX1)^2  = k (cosh(theta) - cos(phi) sinh(theta))
//   (DX2)^2  = k (cosh(theta) + cos(phi) sinh(theta))
//   Q        = [k((1+2k)cosh(2 theta) + 2k - 1) - 4k^2 cosh^2(theta)] / N - 1
// with Q undefined (nullopt) when N <= 1e-8.
struct Su11Moments {
    double n_photon;
    double var_x1;
    double var_x2;
    std::optional<double> q;
};
Su11Moments su11_observables(const PhaseState& state);

// Coefficients of the position/momentum form of the effective Hamiltonian,
//   H = a_x x^2 + a_p p^2 + const,   a_x = m_bar omega_bar^2 / 2,
//   a_p = 1/(2 m_bar),
// with m_bar = 1/(1 - 2 gamma2/omega) and
// omega_bar^2 = omega^2 (1 + 2 gamma2/omega)(1 - 2 gamma2/omega) at zero
// temperature. At epsilon = 1 these reduce to
// a_x = (1 - 2 lambda^2)(1 - 4 lambda^2)/2 and a_p = 1/(2(1 - 2 lambda^2)):
// a_x flips sign at the critical point, a_p has a pole at lambda = 1/sqrt2.
// Throws when omega is exactly 0 (the pole itself).
struct XpCoefficients {
    double a_x;
    double a_p;
    double m_bar;
    double omega_bar_sq;
};
XpCoefficients xp_coefficients(double lambda, double epsilon);

}  // namespace dicke
