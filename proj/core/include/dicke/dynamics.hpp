#pragma once

#include <vector>

#include "dicke/analytic.hpp"

namespace dicke {

// Below this |theta| the coth(theta) in phi_dot is treated as singular; the
// theta = 0 pole is an artifact of the (theta, phi) chart, not of the flow.
inline constexpr double kThetaMin = 1e-8;

// Divergence guard: cosh(theta) overflows near |theta| ~ 710, so unbounded
// super-radiant trajectories are truncated a little before that.
inline constexpr double kThetaMax = 700.0;

// Classical energy surface of the SU(1,1) coherent-state ansatz,
//   H(theta, phi) = 2 omega k cosh(theta) - gamma_k k sinh(theta) cos(phi) - 1/2,
// with the zero-temperature coefficients at the given lambda, epsilon.
double su11_energy(const PhaseState& state, double lambda, double epsilon);

// Equations of motion theta_dot = -gamma_k sin(phi),
// phi_dot = 2 omega - gamma_k coth(theta) cos(phi). Within kThetaMin of the
// coordinate singularity, phi_dot is reported as NaN with singular = true;
// theta_dot is always valid.
struct EomRates {
    double theta_dot;
    double phi_dot;
    bool singular;
};
EomRates eom(const PhaseState& state, double lambda, double epsilon);

enum class Termination {
    completed,    // all requested steps taken
    singularity,  // |theta| fell below kThetaMin mid-run
    divergence,   // |theta| exceeded kThetaMax (unbounded energy surface)
};

// One integration sample. phi is recorded unwrapped (not reduced mod 2pi) so
// that the flow is continuous in the output.
struct TrajectorySample {
    double t;
    double theta;
    double phi;
    double energy;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;  // uniform spacing dt, starts at t = 0
    double dt;
    double lambda;
    double epsilon;
    double k;
    Termination termination;

    double max_energy_drift() const;  // max |H(t) - H(0)| over the samples
};

// Classical fixed-step 4th-order Runge-Kutta integration of the (theta, phi)
// flow. The step is fixed (no adaptivity) so trajectories are reproducible
// bit for bit. A run that reaches the coordinate singularity or the
// divergence guard is truncated at the last valid sample with the reason
// recorded in the termination field.
Trajectory integrate(const PhaseState& initial, double lambda, double epsilon, double dt,
                     int steps);

// Stationary points of the flow and their linear stability. Below the
// critical coupling there is one family point (theta*, phi = pi) whose
// Jacobian eigenvalues are the purely imaginary pair +-i |gamma_k|/sinh(theta*)
// (a center). At and above the critical coupling no real stationary point
// exists and the scan comes back empty with real_solution = false.
enum class StabilityClass { center };
const char* to_string(StabilityClass c);

struct FixedPoint {
    double theta;
    double phi;
    double eig_real;  // real part of the Jacobian eigenvalue pair (0 for a center)
    double eig_imag;  // imaginary magnitude |gamma_k|/sinh(theta*)
    StabilityClass classification;
};

struct FixedPointScan {
    std::vector<FixedPoint> points;
    bool real_solution;
};
FixedPointScan classify_fixed_points(double lambda, double epsilon);

}  // namespace dicke
