#include "dicke/analytic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dicke/hamiltonians.hpp"

namespace dicke {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kCritical = 0.5;  // critical coupling at epsilon = 1
}  // namespace

PhaseState::PhaseState(double theta_, double phi_, double k_) : theta(theta_), phi(phi_), k(k_) {
    if (!(k_ == 0.25 || k_ == 0.75))
        throw std::invalid_argument("PhaseState: Bargmann index must be 1/4 or 3/4");
    if (!std::isfinite(theta_) || !std::isfinite(phi_))
        throw std::invalid_argument("PhaseState: non-finite coordinate");
    phi = std::fmod(phi_, 2.0 * kPi);
    if (phi < 0.0) phi += 2.0 * kPi;
}

BogoliubovSolution bogoliubov_alpha(double lambda) {
    if (lambda == 0.0)
        throw std::domain_error(
            "bogoliubov_alpha: at lambda = 0 the root condition degenerates to a linear "
            "equation (alpha = 0, the second root escapes to infinity)");
    if (!(lambda > 0.0 && lambda <= kCritical))
        throw std::domain_error(
            "bogoliubov_alpha: no real roots above the critical coupling 0.5");
    const double lam2 = lambda * lambda;
    const double disc = std::sqrt(1.0 - 4.0 * lam2);  // 0 at the critical point
    const double one_minus = 1.0 - 2.0 * lam2;
    // alpha = -(1 - 2 lambda^2 +- sqrt(1 - 4 lambda^2)) / (2 lambda^2); the
    // small (physical) root is computed in rationalized form so it stays
    // accurate as lambda -> 0, using alpha_minus * alpha_plus = 1.
    const double alpha_plus = -(one_minus + disc) / (2.0 * lam2);
    const double alpha_minus = -(2.0 * lam2) / (one_minus + disc);
    return {alpha_minus, alpha_plus, disc};
}

GapEnergy gap_and_energy(double lambda) {
    if (!(lambda >= 0.0 && lambda <= kCritical))
        throw std::domain_error(
            "gap_and_energy: spectrum unbounded below above the critical coupling 0.5");
    const double gap = std::sqrt(1.0 - 4.0 * lambda * lambda);
    return {gap, 0.5 * (gap - 1.0)};
}

double fixed_point_theta(double lambda) {
    if (lambda == 0.0) return 0.0;  // continuous limit of arccoth(inf)
    if (!(lambda > 0.0 && lambda < kCritical))
        throw std::domain_error(
            "fixed_point_theta: no real stationary point at or above the critical coupling");
    // arccoth((1-2l^2)/(2l^2)) = ln((x+1)/(x-1))/2 with x+1 = 1/(2l^2) and
    // x-1 = (1-4l^2)/(2l^2), i.e. -ln(1-4l^2)/2, kept accurate via log1p.
    return -0.5 * std::log1p(-4.0 * lambda * lambda);
}

Su11Moments su11_observables(const PhaseState& state) {
    const double k = state.k;
    const double ch = std::cosh(state.theta);
    const double sh = std::sinh(state.theta);
    const double cp = std::cos(state.phi);
    Su11Moments m;
    m.n_photon = 2.0 * k * ch - 0.5;
    m.var_x1 = k * (ch - cp * sh);
    m.var_x2 = k * (ch + cp * sh);
    if (m.n_photon > 1e-8) {
        const double ch2 = std::cosh(2.0 * state.theta);
        const double numer = k * ((1.0 + 2.0 * k) * ch2 + 2.0 * k - 1.0) - 4.0 * k * k * ch * ch;
        m.q = numer / m.n_photon - 1.0;
    }
    return m;
}

XpCoefficients xp_coefficients(double lambda, double epsilon) {
    const double beta_inf = std::numeric_limits<double>::infinity();
    const EffectiveCoefficients c = effective_coefficients(lambda, epsilon, beta_inf);
    if (c.omega == 0.0)
        throw std::domain_error(
            "xp_coefficients: omega = 0 (lambda = sqrt(epsilon/2)); the effective mass "
            "diverges at this pole");
    XpCoefficients out;
    out.m_bar = 1.0 / (1.0 - 2.0 * c.gamma2 / c.omega);
    out.omega_bar_sq =
        c.omega * c.omega * (1.0 + 2.0 * c.gamma2 / c.omega) * (1.0 - 2.0 * c.gamma2 / c.omega);
    out.a_x = 0.5 * c.omega * (c.omega + 2.0 * c.gamma2);
    out.a_p = 0.5 * (c.omega - 2.0 * c.gamma2) / c.omega;
    return out;
}

}  // namespace dicke
