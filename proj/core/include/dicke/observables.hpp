#pragma once

#include <optional>
#include <vector>

#include "dicke/basis.hpp"
#include "dicke/matrix.hpp"
#include "dicke/params.hpp"

namespace dicke {

// Below this photon number the Mandel Q parameter is a 0/0 limit (vacuum),
// so it is reported as undefined rather than as a number.
inline constexpr double kQThreshold = 1e-8;

// Optical observables of one parameter point. q is nullopt when
// n_photon <= kQThreshold. converged records whether an auto-cutoff search
// certified the statistics; cutoff is the Fock cutoff actually used.
struct ObservableRecord {
    double e0 = 0.0;        // ground energy
    double gap = 0.0;       // E1 - E0
    double n_photon = 0.0;  // <a^dag a>
    double var_n = 0.0;     // <(a^dag a)^2> - <a^dag a>^2
    std::optional<double> q;
    double var_x1 = 0.0;    // (Delta X1)^2
    double var_x2 = 0.0;    // (Delta X2)^2
    bool converged = false;
    int cutoff = 0;
};

// <state|op|state>. Requires matching dimensions and ||state|| = 1 within
// 1e-10.
double expectation(const OperatorMatrix& op, const std::vector<double>& state);

// Photon statistics of a normalized Fock-space state: fills n_photon, var_n,
// q, var_x1, var_x2 (variances subtract the quadrature means). e0 and gap
// are not meaningful for a bare state and are left NaN; cutoff is taken from
// the basis.
ObservableRecord photon_statistics(const std::vector<double>& state, const FockBasis& fock);

// Ground-state observables of the effective photon Hamiltonian at the fixed
// cutoff params.cutoff. converged is false: a single-cutoff evaluation
// certifies nothing about truncation error.
ObservableRecord ground_observables(const ModelParams& params);

// Auto-cutoff version: doubles the cutoff (starting from params.cutoff,
// floored at 8) until every statistics field moves by less than tol between
// successive cutoffs, up to cutoff_ceiling. The energy participates in the
// test only below the critical coupling; above it the truncated spectrum is
// unbounded from below and e0 is reported as-is at the final cutoff. If the
// ceiling is reached without convergence the record is returned with
// converged = false (the super-radiant statistics of the truncated
// Hamiltonian scale with the cutoff and never settle).
ObservableRecord converged_ground_observables(const ModelParams& params, double tol,
                                              int cutoff_ceiling = 512);

// One parity block of the Dicke Hamiltonian, assembled directly in the
// sector basis {(n, mi) : (n + mi) mod 2 == parity} without ever forming the
// full product matrix. The two blocks together partition the full spectrum.
OperatorMatrix dicke_parity_block(const ModelParams& params, int parity);

// Ground energy and excitation gap of the Dicke Hamiltonian, both taken
// within the ground state's parity sector. The Hamiltonian conserves the
// parity grading (n + mi) mod 2, and above the critical coupling the raw
// E1 - E0 collapses to an exponentially small inter-sector doublet
// splitting; the intra-sector gap is the quantity whose minimum tracks the
// phase transition. Solved on the directly assembled parity block, never on
// the full product matrix.
struct DickeSpectrum {
    double e0;
    double sector_gap;
};
DickeSpectrum dicke_spectrum(const ModelParams& params);

// Auto-cutoff Dicke spectrum: grows the cutoff by ~3/2 steps from
// params.cutoff until e0 and sector_gap both move by less than tol, up to
// cutoff_ceiling.
struct ConvergedDickeSpectrum {
    double e0;
    double sector_gap;
    bool converged;
    int cutoff;
};
ConvergedDickeSpectrum converged_dicke_spectrum(const ModelParams& params, double tol,
                                                int cutoff_ceiling = 512);

}  // namespace dicke
