#include "dicke/dynamics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dicke/hamiltonians.hpp"

namespace dicke {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct FlowCoefficients {
    double omega;
    double gamma_k;
};

FlowCoefficients flow_coefficients(double lambda, double epsilon) {
    const EffectiveCoefficients c =
        effective_coefficients(lambda, epsilon, std::numeric_limits<double>::infinity());
    return {c.omega, c.gamma_k};
}

double energy_raw(double theta, double phi, double k, const FlowCoefficients& c) {
    return 2.0 * c.omega * k * std::cosh(theta) - c.gamma_k * k * std::sinh(theta) * std::cos(phi) -
           0.5;
}

// Right-hand side on raw coordinates; callers guarantee |theta| >= kThetaMin.
void rhs(double theta, double phi, const FlowCoefficients& c, double& theta_dot,
         double& phi_dot) {
    theta_dot = -c.gamma_k * std::sin(phi);
    phi_dot = 2.0 * c.omega - c.gamma_k * (std::cosh(theta) / std::sinh(theta)) * std::cos(phi);
}

}  // namespace

double su11_energy(const PhaseState& state, double lambda, double epsilon) {
    return energy_raw(state.theta, state.phi, state.k, flow_coefficients(lambda, epsilon));
}

EomRates eom(const PhaseState& state, double lambda, double epsilon) {
    const FlowCoefficients c = flow_coefficients(lambda, epsilon);
    EomRates r;
    r.theta_dot = -c.gamma_k * std::sin(state.phi);
    if (std::fabs(state.theta) < kThetaMin) {
        r.phi_dot = std::numeric_limits<double>::quiet_NaN();
        r.singular = true;
    } else {
        r.phi_dot = 2.0 * c.omega -
                    c.gamma_k * (std::cosh(state.theta) / std::sinh(state.theta)) *
                        std::cos(state.phi);
        r.singular = false;
    }
    return r;
}

double Trajectory::max_energy_drift() const {
    if (samples.empty()) return 0.0;
    const double h0 = samples.front().energy;
    double drift = 0.0;
    for (const TrajectorySample& s : samples) drift = std::max(drift, std::fabs(s.energy - h0));
    return drift;
}

Trajectory integrate(const PhaseState& initial, double lambda, double epsilon, double dt,
                     int steps) {
    if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be > 0");
    if (steps < 1) throw std::invalid_argument("integrate: steps must be >= 1");
    if (std::fabs(initial.theta) < kThetaMin)
        throw std::invalid_argument("integrate: initial state sits on the theta = 0 singularity");

    const FlowCoefficients c = flow_coefficients(lambda, epsilon);
    Trajectory traj;
    traj.dt = dt;
    traj.lambda = lambda;
    traj.epsilon = epsilon;
    traj.k = initial.k;
    traj.termination = Termination::completed;
    traj.samples.reserve(static_cast<std::size_t>(steps) + 1);

    double theta = initial.theta;
    double phi = initial.phi;
    traj.samples.push_back({0.0, theta, phi, energy_raw(theta, phi, initial.k, c)});

    // Classic fixed-step RK4. A stage or step that lands inside the
    // coordinate singularity (or past the divergence guard) ends the run at
    // the last completed sample, with the reason recorded.
    auto singular = [](double th) { return std::fabs(th) < kThetaMin; };
    double k1t, k1p, k2t, k2p, k3t, k3p, k4t, k4p;
    for (int s = 1; s <= steps; ++s) {
        rhs(theta, phi, c, k1t, k1p);
        const double th2 = theta + 0.5 * dt * k1t;
        if (singular(th2)) {
            traj.termination = Termination::singularity;
            break;
        }
        rhs(th2, phi + 0.5 * dt * k1p, c, k2t, k2p);
        const double th3 = theta + 0.5 * dt * k2t;
        if (singular(th3)) {
            traj.termination = Termination::singularity;
            break;
        }
        rhs(th3, phi + 0.5 * dt * k2p, c, k3t, k3p);
        const double th4 = theta + dt * k3t;
        if (singular(th4)) {
            traj.termination = Termination::singularity;
            break;
        }
        rhs(th4, phi + dt * k3p, c, k4t, k4p);

        theta += dt / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
        phi += dt / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        if (singular(theta)) {
            traj.termination = Termination::singularity;
            break;
        }
        if (std::fabs(theta) > kThetaMax) {
            traj.termination = Termination::divergence;
            break;
        }
        traj.samples.push_back({s * dt, theta, phi, energy_raw(theta, phi, initial.k, c)});
    }
    return traj;
}

const char* to_string(StabilityClass c) {
    switch (c) {
        case StabilityClass::center:
            return "center";
    }
    return "unknown";
}

FixedPointScan classify_fixed_points(double lambda, double epsilon) {
    if (!(lambda > 0.0)) throw std::invalid_argument("classify_fixed_points: lambda must be > 0");
    if (!(epsilon > 0.0)) throw std::invalid_argument("classify_fixed_points: epsilon must be > 0");

    FixedPointScan scan;
    // Stationarity requires phi = n*pi and coth(theta) = (eps - 2l^2)/(2l^2);
    // a real theta exists only below lambda = sqrt(epsilon)/2.
    const double lam2 = lambda * lambda;
    if (4.0 * lam2 >= epsilon) {
        scan.real_solution = false;
        return scan;
    }
    scan.real_solution = true;
    const double theta_star = -0.5 * std::log1p(-4.0 * lam2 / epsilon);
    const FlowCoefficients c = flow_coefficients(lambda, epsilon);
    // Jacobian at (theta*, pi): [[0, gamma_k], [-gamma_k/sinh^2, 0]], a
    // purely imaginary pair +-i |gamma_k| / sinh(theta*): a center.
    const double mu = std::fabs(c.gamma_k) / std::sinh(theta_star);
    scan.points.push_back({theta_star, kPi, 0.0, mu, StabilityClass::center});
    return scan;
}

}  // namespace dicke
