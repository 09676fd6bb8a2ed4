#pragma once

#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace dicke {

// A deterministic (seedless) lambda sweep. When cutoff is set the sweep runs
// in fixed-cutoff mode and every row is flagged "fixed_cutoff"; otherwise
// cutoffs are found automatically per point to auto_cutoff_tol, warm-started
// from the previous point.
struct SweepSpec {
    double lambda_min = 0.0;
    double lambda_max = 1.0;
    int steps = 200;  // >= 2, endpoints inclusive
    double epsilon = 1.0;
    double beta = std::numeric_limits<double>::infinity();
    int n_atoms = 32;
    std::optional<int> cutoff;     // fixed-cutoff mode when set
    double auto_cutoff_tol = 1e-6;
    std::string out_dir = "out";
    bool no_timestamp = false;     // suppress the "# generated:" metadata line
    bool force_critical = false;   // keep a grid point that lands exactly on 0.5
    bool emit_plot_script = false; // also write a gnuplot script per figure
};

// The lambda grid: steps points spaced evenly over [lambda_min, lambda_max]
// inclusive. A point exactly equal to the critical coupling 0.5 is dropped
// (the Mandel Q diverges there) unless force_critical is set.
std::vector<double> lambda_grid(const SweepSpec& spec);

enum class FigureId { energy, photon_number, statistics, xp_coeffs };
const char* to_string(FigureId id);

// Emits the dataset(s) for one figure into spec.out_dir and returns the
// written paths. Analytic and numeric columns sit side by side; analytic
// columns print NA outside their domain (lambda > 0.5); non-converged points
// are flagged in the status column, never dropped.
//
//   energy:        energy.csv (+ energy_records.csv)
//   photon_number: photon_number.csv (+ photon_number_records.csv)
//   statistics:    statistics_var_x1.csv, statistics_var_x2.csv,
//                  statistics_mandel_q.csv (+ statistics_records.csv)
//   xp_coeffs:     xp_coefficients.csv
std::vector<std::filesystem::path> run_figure(FigureId id, const SweepSpec& spec);

// A single trajectory emission: trajectory.csv with columns
// t,theta,phi,energy,drift and the termination reason in the metadata.
struct DynamicsSpec {
    double theta0 = 0.6;
    double phi0 = 3.14159265358979323846;
    double k = 0.25;
    double lambda = 0.4;
    double epsilon = 1.0;
    double dt = 1e-3;
    int steps = 100000;
    std::string out_dir = "out";
    bool no_timestamp = false;
};
std::filesystem::path run_dynamics(const DynamicsSpec& spec);

}  // namespace dicke
