// Command-line driver: simulate one rotation, sweep a parameter, or run the
// acceptance checks.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "stirap/acceptance.hpp"
#include "stirap/config.hpp"
#include "stirap/output.hpp"

namespace fs = std::filesystem;
using namespace stirap;

namespace {

std::ofstream open_output(const fs::path &path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec) throw std::runtime_error("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

int cmd_simulate(const std::string &config_path, const std::string &out_dir_override) {
    const auto config = load_config(config_path);
    const fs::path out_dir = out_dir_override.empty() ? fs::path(config.output.dir) : fs::path(out_dir_override);
    const auto q = config.qubit.state();
    const auto cfg = config.propagator();

    const auto run = run_rotation(q, config.pulses, cfg, config.rotation_options());
    const auto window = simulation_window(config.pulses);

    SimulationSummary summary;
    summary.report = run.report;
    summary.adiabaticity = adiabaticity_metric(config.pulses, config.numerics.adiabatic_threshold);
    summary.convergence = convergence_certificate(embed(q), config.pulses, cfg, window.start, window.end);
    summary.initial = q;
    summary.predicted = predicted_final(q, config.pulses.rotation());
    summary.final_qubit = project_qubit(run.final_state).qubit;
    summary.global_phase = config.pulses.rotation().global_phase();

    {
        auto csv = open_output(out_dir / "trajectory.csv");
        write_trajectory_csv(csv, run.trajectory, config.output.stride);
    }
    {
        auto json = open_output(out_dir / "summary.json");
        json << format_summary_json(summary);
    }

    const auto &r = run.report;
    std::cout << "fidelity          " << format_double(r.fidelity) << '\n'
              << "overlap           " << format_double(r.overlap.real()) << (r.overlap.imag() < 0 ? " - " : " + ")
              << format_double(std::abs(r.overlap.imag())) << "i\n"
              << "max P4            " << format_double(r.max_excited_population) << '\n'
              << "leakage           " << format_double(r.final_leakage) << '\n'
              << "pulse area        " << format_double(summary.adiabaticity.pulse_area)
              << (summary.adiabaticity.adiabatic ? " (adiabatic)" : " (non-adiabatic)") << '\n'
              << "step halving      " << format_double(summary.convergence) << '\n'
              << "wrote " << (out_dir / "trajectory.csv").string() << ", " << (out_dir / "summary.json").string()
              << '\n';
    if (r.adiabaticity_warning) {
        std::cerr << "warning: fidelity below " << format_double(config.numerics.fidelity_threshold)
                  << "; schedule may not be adiabatic\n";
    }
    return 0;
}

int cmd_sweep(const std::string &config_path, const std::string &axis_name, const std::string &from_text,
              const std::string &to_text, int points, const std::string &out_path) {
    const auto config = load_config(config_path);
    const auto axis = parse_sweep_axis(axis_name);
    const double from = evaluate_expression(from_text);
    const double to = evaluate_expression(to_text);
    if (points < 1) throw std::invalid_argument("--points must be at least 1");
    const std::vector<double> values = points == 1 ? std::vector<double>{from} : uniform_grid(from, to, points);

    SweepOptions options;
    options.rotation = config.rotation_options();
    const auto result = sweep(config.pulses, config.qubit.state(), axis, values, config.propagator(), options);

    const fs::path path =
        out_path.empty() ? fs::path(config.output.dir) / ("sweep_" + std::string(to_string(axis)) + ".csv") : fs::path(out_path);
    {
        auto csv = open_output(path);
        write_sweep_csv(csv, result);
    }
    for (std::size_t i = 0; i < result.size(); ++i) {
        if (!result.errors[i].empty()) {
            std::cerr << "point " << format_double(result.values[i]) << " failed: " << result.errors[i] << '\n';
        }
    }
    std::cout << "wrote " << path.string() << " (" << result.size() << " points)\n";
    return result.all_succeeded() ? 0 : 3;
}

int cmd_verify(bool quick) {
    AcceptanceOptions options;
    options.quick = quick;
    options.on_result = [](const CriterionResult &r) { std::cout << format_acceptance_line(r) << std::endl; };
    const auto results = run_acceptance(options);
    const auto failed = std::count_if(results.begin(), results.end(), [](const auto &r) { return !r.passed; });
    std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Qubit rotation by two sequential STIRAP processes"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    auto *simulate = app.add_subcommand("simulate", "Propagate one rotation and write trajectory.csv and summary.json");
    simulate->add_option("--config", config_path, "Configuration file")->required()->check(CLI::ExistingFile);
    simulate->add_option("--out-dir", out_dir, "Output directory (overrides [output] dir)");

    std::string sweep_config;
    std::string axis;
    std::string from;
    std::string to;
    int points = 9;
    std::string sweep_out;
    auto *sweep_cmd = app.add_subcommand("sweep", "Run one rotation per parameter value and write a sweep CSV");
    sweep_cmd->add_option("--config", sweep_config, "Configuration file")->required()->check(CLI::ExistingFile);
    sweep_cmd->add_option("--axis", axis, "omega0, tau, t0, delta, chi, eta, detuning or shape")->required();
    sweep_cmd->add_option("--from", from, "First value (expressions such as -pi/12 allowed)")->required();
    sweep_cmd->add_option("--to", to, "Last value")->required();
    sweep_cmd->add_option("--points", points, "Number of evenly spaced values")->required();
    sweep_cmd->add_option("--out", sweep_out, "CSV path (default <output dir>/sweep_<axis>.csv)");

    bool quick = false;
    auto *verify = app.add_subcommand("verify", "Run the acceptance checks and print a pass/fail table");
    verify->add_flag("--quick", quick, "Fewer random samples");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return cmd_simulate(config_path, out_dir);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_config, axis, from, to, points, sweep_out);
        if (verify->parsed()) return cmd_verify(quick);
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
