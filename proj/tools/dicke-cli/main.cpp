#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dicke/sweep.hpp"
#include "dicke/version.hpp"

namespace {

dicke::FigureId figure_id_from_name(const std::string& name) {
    if (name == "energy") return dicke::FigureId::energy;
    if (name == "photon_number") return dicke::FigureId::photon_number;
    if (name == "statistics") return dicke::FigureId::statistics;
    return dicke::FigureId::xp_coeffs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optical signatures of the Dicke-model quantum phase transition"};
    app.set_version_flag("--version",
                         std::string(dicke::kProgramName) + " " + dicke::kVersion);
    app.require_subcommand(1);

    dicke::SweepSpec sweep;
    std::string figure_name;
    CLI::App* figure =
        app.add_subcommand("figure", "Sweep the coupling and emit one figure's dataset(s)");
    figure->add_option("id", figure_name, "Which figure to reproduce")
        ->required()
        ->check(CLI::IsMember({"energy", "photon_number", "statistics", "xp_coeffs"}));
    figure->add_option("--lambda-min", sweep.lambda_min, "Lower end of the coupling grid")
        ->capture_default_str();
    figure->add_option("--lambda-max", sweep.lambda_max, "Upper end of the coupling grid")
        ->capture_default_str();
    figure->add_option("--steps", sweep.steps, "Grid points, endpoints inclusive (>= 2)")
        ->capture_default_str();
    figure->add_option("--epsilon", sweep.epsilon, "Atomic level splitting")
        ->capture_default_str();
    figure->add_option("--beta", sweep.beta, "Inverse temperature (default: zero temperature)");
    figure->add_option("--atoms", sweep.n_atoms, "Number of two-level atoms")
        ->capture_default_str();
    figure->add_option("--cutoff", sweep.cutoff,
                       "Fixed photon-number cutoff; omit for automatic convergence");
    figure
        ->add_option("--auto-cutoff-tol", sweep.auto_cutoff_tol,
                     "Settling tolerance of the automatic cutoff search")
        ->capture_default_str();
    figure->add_option("--out", sweep.out_dir, "Output directory")
        ->capture_default_str()
        ->envname("DICKE_OUT");
    figure->add_flag("--no-timestamp", sweep.no_timestamp,
                     "Suppress the generated-at metadata line");
    figure->add_flag("--force-critical", sweep.force_critical,
                     "Keep a grid point that lands exactly on the critical coupling 0.5");
    figure->add_flag("--emit-plot-script", sweep.emit_plot_script,
                     "Also write a gnuplot script next to the data");

    dicke::DynamicsSpec dyn;
    CLI::App* dynamics =
        app.add_subcommand("dynamics", "Integrate the phase-space equations of motion");
    dynamics->add_option("--theta0", dyn.theta0, "Initial theta")->capture_default_str();
    dynamics->add_option("--phi0", dyn.phi0, "Initial phi")->capture_default_str();
    dynamics->add_option("--k", dyn.k, "Bargmann index (0.25 or 0.75)")->capture_default_str();
    dynamics->add_option("--lambda", dyn.lambda, "Light-matter coupling")->capture_default_str();
    dynamics->add_option("--epsilon", dyn.epsilon, "Atomic level splitting")
        ->capture_default_str();
    dynamics->add_option("--dt", dyn.dt, "Integration step")->capture_default_str();
    dynamics->add_option("--steps", dyn.steps, "Number of steps")->capture_default_str();
    dynamics->add_option("--out", dyn.out_dir, "Output directory")
        ->capture_default_str()
        ->envname("DICKE_OUT");
    dynamics->add_flag("--no-timestamp", dyn.no_timestamp,
                       "Suppress the generated-at metadata line");

    CLI11_PARSE(app, argc, argv);

    try {
        if (figure->parsed()) {
            for (const auto& path : dicke::run_figure(figure_id_from_name(figure_name), sweep))
                std::cout << "wrote " << path.string() << '\n';
        } else {
            std::cout << "wrote " << dicke::run_dynamics(dyn).string() << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
