#include "dicke/sweep.hpp"

#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "dicke/analytic.hpp"
#include "dicke/csv.hpp"
#include "dicke/dynamics.hpp"
#include "dicke/hamiltonians.hpp"
#include "dicke/observables.hpp"
#include "dicke/params.hpp"
#include "dicke/version.hpp"

namespace dicke {

namespace {

constexpr double kCritical = 0.5;
constexpr double kPi = 3.14159265358979323846;
constexpr int kCutoffCeiling = 512;

void validate(const SweepSpec& spec) {
    if (spec.steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
    if (!(spec.lambda_min >= 0.0) || !(spec.lambda_max > spec.lambda_min))
        throw std::invalid_argument("sweep requires 0 <= lambda_min < lambda_max");
    if (!(spec.auto_cutoff_tol > 0.0))
        throw std::invalid_argument("auto_cutoff_tol must be > 0");
    if (spec.cutoff && *spec.cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
    ModelParams probe;
    probe.lambda = spec.lambda_min;
    probe.epsilon = spec.epsilon;
    probe.beta = spec.beta;
    probe.n_atoms = spec.n_atoms;
    probe.validate();
}

// The closed forms assume the resonant zero-temperature model.
bool analytic_domain(const SweepSpec& spec) {
    return spec.epsilon == 1.0 && std::isinf(spec.beta);
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

void write_preamble(std::ostream& out, const SweepSpec& spec, FigureId id,
                    const std::vector<std::string>& notes) {
    out << "# " << kProgramName << ' ' << kVersion << '\n';
    out << "# figure: " << to_string(id) << '\n';
    out << "# params: lambda_min=" << format_value(spec.lambda_min)
        << " lambda_max=" << format_value(spec.lambda_max) << " steps=" << spec.steps
        << " epsilon=" << format_value(spec.epsilon) << " beta=" << format_value(spec.beta)
        << " n_atoms=" << spec.n_atoms << " cutoff="
        << (spec.cutoff ? std::to_string(*spec.cutoff) : std::string("auto"))
        << " auto_cutoff_tol=" << format_value(spec.auto_cutoff_tol) << '\n';
    if (!spec.no_timestamp) out << "# generated: " << utc_timestamp() << '\n';
    for (const std::string& note : notes) out << "# note: " << note << '\n';
}

// One sweep point of the effective photon model, with its emission status.
struct EffectivePoint {
    double lambda = 0.0;
    ObservableRecord record;
    std::string status;
};

std::vector<EffectivePoint> effective_sweep(const SweepSpec& spec,
                                            const std::vector<double>& grid) {
    std::vector<EffectivePoint> points;
    points.reserve(grid.size());
    ModelParams p;
    p.epsilon = spec.epsilon;
    p.beta = spec.beta;
    p.n_atoms = spec.n_atoms;
    int hint = 8;  // warm-started from the previous point's certified cutoff
    for (const double lambda : grid) {
        p.lambda = lambda;
        EffectivePoint pt;
        pt.lambda = lambda;
        if (spec.cutoff) {
            p.cutoff = *spec.cutoff;
            pt.record = ground_observables(p);
            pt.status = "fixed_cutoff";
        } else {
            p.cutoff = hint;
            pt.record = converged_ground_observables(p, spec.auto_cutoff_tol, kCutoffCeiling);
            pt.status = pt.record.converged ? "ok" : "not_converged";
            hint = std::max(8, pt.record.cutoff / 2);
        }
        points.push_back(std::move(pt));
    }
    return points;
}

struct DickePoint {
    ConvergedDickeSpectrum spectrum;
    std::string status;
};

std::vector<DickePoint> dicke_sweep(const SweepSpec& spec, const std::vector<double>& grid) {
    std::vector<DickePoint> points;
    points.reserve(grid.size());
    ModelParams p;
    p.epsilon = spec.epsilon;
    p.beta = spec.beta;
    p.n_atoms = spec.n_atoms;
    int hint = 8;
    for (const double lambda : grid) {
        p.lambda = lambda;
        DickePoint pt;
        if (spec.cutoff) {
            p.cutoff = *spec.cutoff;
            const DickeSpectrum s = dicke_spectrum(p);
            pt.spectrum = {s.e0, s.sector_gap, false, *spec.cutoff};
            pt.status = "fixed_cutoff";
        } else {
            p.cutoff = hint;
            pt.spectrum = converged_dicke_spectrum(p, spec.auto_cutoff_tol, kCutoffCeiling);
            pt.status = pt.spectrum.converged ? "ok" : "not_converged";
            hint = std::max(8, (2 * pt.spectrum.cutoff) / 3);
        }
        points.push_back(std::move(pt));
    }
    return points;
}

// Closed-form columns for one grid point; disengaged outside their domain.
struct AnalyticColumns {
    std::optional<double> e0, gap, n, var_x1, var_x2, q;
};

AnalyticColumns analytic_columns(double lambda, bool domain_ok) {
    AnalyticColumns a;
    if (!domain_ok) return a;
    if (lambda <= kCritical) {
        const GapEnergy ge = gap_and_energy(lambda);
        a.e0 = ge.e0;
        a.gap = ge.gap;
    }
    if (lambda < kCritical) {
        const Su11Moments m = su11_observables(PhaseState(fixed_point_theta(lambda), kPi, 0.25));
        a.n = m.n_photon;
        a.var_x1 = m.var_x1;
        a.var_x2 = m.var_x2;
        a.q = m.q;
    }
    return a;
}

void write_records(const std::filesystem::path& path, const SweepSpec& spec, FigureId id,
                   const std::vector<std::string>& notes,
                   const std::vector<EffectivePoint>& points) {
    std::ofstream out = open_out(path);
    write_preamble(out, spec, id, notes);
    out << kRecordHeader << '\n';
    for (const EffectivePoint& pt : points)
        out << format_record_row({pt.lambda, pt.record, pt.status}) << '\n';
}

void write_plot_script(const std::filesystem::path& path, FigureId id) {
    std::ofstream out = open_out(path);
    out << "# " << kProgramName << ' ' << kVersion << " plot script\n";
    out << "set datafile separator \",\"\n";
    out << "set datafile missing \"NA\"\n";
    out << "set datafile commentschars \"#\"\n";
    out << "set xlabel \"lambda\"\n";
    out << "set key left\n";
    switch (id) {
        case FigureId::energy:
            out << "plot \"energy.csv\" using 1:2 with lines title \"e0 analytic\", \\\n"
                << "     \"energy.csv\" using 1:4 with points title \"e0 effective\", \\\n"
                << "     \"energy.csv\" using 1:6 with points title \"e0 Dicke (shifted)\"\n";
            break;
        case FigureId::photon_number:
            out << "plot \"photon_number.csv\" using 1:3 with lines title \"numeric\", \\\n"
                << "     \"photon_number.csv\" using 1:2 with points title \"analytic\"\n";
            break;
        case FigureId::statistics:
            out << "plot \"statistics_var_x1.csv\" using 1:3 with lines title \"var X1\", \\\n"
                << "     \"statistics_var_x2.csv\" using 1:3 with lines title \"var X2\", \\\n"
                << "     \"statistics_mandel_q.csv\" using 1:3 with lines title \"Mandel Q\"\n";
            break;
        case FigureId::xp_coeffs:
            out << "plot \"xp_coefficients.csv\" using 1:2 with lines title \"x^2 coefficient\", "
                   "\\\n"
                << "     \"xp_coefficients.csv\" using 1:3 with lines dashtype 2 title \"p^2 "
                   "coefficient\"\n";
            break;
    }
}

}  // namespace

std::vector<double> lambda_grid(const SweepSpec& spec) {
    validate(spec);
    std::vector<double> grid;
    grid.reserve(spec.steps);
    const double step = (spec.lambda_max - spec.lambda_min) / (spec.steps - 1);
    for (int i = 0; i < spec.steps; ++i) {
        const double x =
            i + 1 == spec.steps ? spec.lambda_max : spec.lambda_min + i * step;
        if (x == kCritical && !spec.force_critical) continue;  // Q diverges there
        grid.push_back(x);
    }
    return grid;
}

const char* to_string(FigureId id) {
    switch (id) {
        case FigureId::energy: return "energy";
        case FigureId::photon_number: return "photon_number";
        case FigureId::statistics: return "statistics";
        case FigureId::xp_coeffs: return "xp_coeffs";
    }
    return "unknown";
}

std::vector<std::filesystem::path> run_figure(FigureId id, const SweepSpec& spec) {
    validate(spec);
    const std::filesystem::path dir(spec.out_dir);
    std::filesystem::create_directories(dir);

    const std::vector<double> grid = lambda_grid(spec);
    if (grid.empty()) throw std::invalid_argument("lambda grid is empty");

    std::vector<std::string> notes;
    if (grid.size() < static_cast<std::size_t>(spec.steps))
        notes.push_back(
            "grid point at lambda=0.5 dropped (critical point; pass --force-critical to keep "
            "it)");
    const bool domain_ok = analytic_domain(spec);
    if (!domain_ok && id != FigureId::xp_coeffs)
        notes.push_back(
            "analytic columns assume the resonant zero-temperature model and print NA here");

    std::vector<std::filesystem::path> written;

    switch (id) {
        case FigureId::energy: {
            const std::vector<EffectivePoint> eff = effective_sweep(spec, grid);
            const std::vector<DickePoint> dicke = dicke_sweep(spec, grid);
            const std::filesystem::path fig = dir / "energy.csv";
            std::ofstream out = open_out(fig);
            write_preamble(out, spec, id, notes);
            out << "lambda,e0_analytic,gap_analytic,e0_effective,gap_effective,"
                   "e0_dicke_shifted,gap_dicke,dicke_converged,dicke_cutoff\n";
            const double shift = 0.5 * spec.epsilon * spec.n_atoms;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const AnalyticColumns a = analytic_columns(grid[i], domain_ok);
                out << format_value(grid[i]) << ',' << format_optional(a.e0) << ','
                    << format_optional(a.gap) << ',' << format_value(eff[i].record.e0) << ','
                    << format_value(eff[i].record.gap) << ','
                    << format_value(dicke[i].spectrum.e0 + shift) << ','
                    << format_value(dicke[i].spectrum.sector_gap) << ','
                    << (dicke[i].spectrum.converged ? '1' : '0') << ','
                    << dicke[i].spectrum.cutoff << '\n';
            }
            written.push_back(fig);
            const std::filesystem::path rec = dir / "energy_records.csv";
            write_records(rec, spec, id, notes, eff);
            written.push_back(rec);
            break;
        }
        case FigureId::photon_number: {
            const std::vector<EffectivePoint> eff = effective_sweep(spec, grid);
            const std::filesystem::path fig = dir / "photon_number.csv";
            std::ofstream out = open_out(fig);
            write_preamble(out, spec, id, notes);
            out << "lambda,n_analytic,n_numeric\n";
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const AnalyticColumns a = analytic_columns(grid[i], domain_ok);
                out << format_value(grid[i]) << ',' << format_optional(a.n) << ','
                    << format_value(eff[i].record.n_photon) << '\n';
            }
            written.push_back(fig);
            const std::filesystem::path rec = dir / "photon_number_records.csv";
            write_records(rec, spec, id, notes, eff);
            written.push_back(rec);
            break;
        }
        case FigureId::statistics: {
            const std::vector<EffectivePoint> eff = effective_sweep(spec, grid);
            const struct {
                const char* file;
                const char* header;
            } panels[3] = {{"statistics_var_x1.csv", "lambda,var_x1_analytic,var_x1_numeric"},
                           {"statistics_var_x2.csv", "lambda,var_x2_analytic,var_x2_numeric"},
                           {"statistics_mandel_q.csv", "lambda,q_analytic,q_numeric"}};
            for (int panel = 0; panel < 3; ++panel) {
                const std::filesystem::path fig = dir / panels[panel].file;
                std::ofstream out = open_out(fig);
                write_preamble(out, spec, id, notes);
                out << panels[panel].header << '\n';
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    const AnalyticColumns a = analytic_columns(grid[i], domain_ok);
                    const ObservableRecord& r = eff[i].record;
                    std::optional<double> an, num;
                    if (panel == 0) {
                        an = a.var_x1;
                        num = r.var_x1;
                    } else if (panel == 1) {
                        an = a.var_x2;
                        num = r.var_x2;
                    } else {
                        an = a.q;
                        num = r.q;
                    }
                    out << format_value(grid[i]) << ',' << format_optional(an) << ','
                        << format_optional(num) << '\n';
                }
                written.push_back(fig);
            }
            const std::filesystem::path rec = dir / "statistics_records.csv";
            write_records(rec, spec, id, notes, eff);
            written.push_back(rec);
            break;
        }
        case FigureId::xp_coeffs: {
            const std::filesystem::path fig = dir / "xp_coefficients.csv";
            std::ofstream out = open_out(fig);
            write_preamble(out, spec, id, notes);
            out << "lambda,a_x,a_p,status\n";
            for (const double lambda : grid) {
                try {
                    const XpCoefficients c = xp_coefficients(lambda, spec.epsilon);
                    out << format_value(lambda) << ',' << format_value(c.a_x) << ','
                        << format_value(c.a_p) << ",ok\n";
                } catch (const std::domain_error&) {
                    // Exactly at the momentum-coefficient pole the p^2 column
                    // is undefined; the x^2 coefficient is still emitted.
                    const EffectiveCoefficients c =
                        effective_coefficients(lambda, spec.epsilon,
                                               std::numeric_limits<double>::infinity());
                    out << format_value(lambda) << ','
                        << format_value(0.5 * c.omega * (c.omega + 2.0 * c.gamma2)) << ','
                        << kNaToken << ",pole\n";
                }
            }
            written.push_back(fig);
            break;
        }
    }

    if (spec.emit_plot_script) {
        const std::filesystem::path script = dir / (std::string(to_string(id)) + ".gp");
        write_plot_script(script, id);
        written.push_back(script);
    }
    return written;
}

std::filesystem::path run_dynamics(const DynamicsSpec& spec) {
    const std::filesystem::path dir(spec.out_dir);
    std::filesystem::create_directories(dir);

    const PhaseState initial(spec.theta0, spec.phi0, spec.k);
    const Trajectory traj = integrate(initial, spec.lambda, spec.epsilon, spec.dt, spec.steps);

    const char* reason = "completed";
    if (traj.termination == Termination::singularity) reason = "singularity";
    if (traj.termination == Termination::divergence) reason = "divergence";

    const std::filesystem::path path = dir / "trajectory.csv";
    std::ofstream out = open_out(path);
    out << "# " << kProgramName << ' ' << kVersion << '\n';
    out << "# dynamics: theta0=" << format_value(spec.theta0)
        << " phi0=" << format_value(spec.phi0) << " k=" << format_value(spec.k)
        << " lambda=" << format_value(spec.lambda) << " epsilon=" << format_value(spec.epsilon)
        << " dt=" << format_value(spec.dt) << " steps=" << spec.steps << '\n';
    if (!spec.no_timestamp) out << "# generated: " << utc_timestamp() << '\n';
    out << "# termination: " << reason << '\n';
    out << "t,theta,phi,energy,drift\n";
    const double e0 = traj.samples.front().energy;
    for (const TrajectorySample& s : traj.samples)
        out << format_value(s.t) << ',' << format_value(s.theta) << ',' << format_value(s.phi)
            << ',' << format_value(s.energy) << ',' << format_value(s.energy - e0) << '\n';
    return path;
}

}  // namespace dicke
