// Simulation configuration: a sectioned key = value text format.
//
//   # comment
//   [qubit]
//   alpha = cos(pi/5)
//   beta = sin(pi/5)
//   [rotation]
//   chi = -pi/12
//
// Numeric values are arithmetic expressions over numbers, pi, + - * / ^,
// parentheses and the functions sin, cos, tan, sqrt, exp.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stirap/analysis.hpp"

namespace stirap {

class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, const std::string &field, const std::string &message);
    int line() const { return line_; }
    const std::string &field() const { return field_; }

private:
    int line_;
    std::string field_;
};

/// Evaluates a numeric expression such as "-pi/12" or "cos(pi/5)".
/// Throws std::invalid_argument on malformed input.
double evaluate_expression(std::string_view text);

struct QubitConfig {
    double alpha = 1.0;  ///< magnitude (sign allowed)
    double alpha_phase = 0.0;
    double beta = 0.0;
    double beta_phase = 0.0;

    QubitState state() const;
};

struct NumericsConfig {
    double step = 0.0;  ///< 0 selects the default step
    double norm_tolerance = 1e-6;
    double fidelity_threshold = 0.999;
    double sample_interval = 0.01;
    double adiabatic_threshold = kDefaultAdiabaticThreshold;
};

struct OutputConfig {
    std::string dir = "out";
    /// Every n-th trajectory sample goes to the CSV.
    int stride = 10;
};

struct SimulationConfig {
    QubitConfig qubit;
    PulseSchedule pulses;  ///< includes chi, eta, delta from [rotation]
    NumericsConfig numerics;
    OutputConfig output;

    PropagatorConfig propagator() const { return {numerics.step, numerics.norm_tolerance}; }
    RotationOptions rotation_options() const { return {numerics.sample_interval, numerics.fidelity_threshold}; }
};

/// Values of the published numerical example (rotation through pi).
SimulationConfig default_config();

/// Throws ConfigError carrying the line number and section.key of the offending entry.
SimulationConfig parse_config(std::string_view text);
SimulationConfig load_config(const std::filesystem::path &path);

/// Re-emits the configuration with shortest round-trip numbers.
std::string format_config(const SimulationConfig &config);

}  // namespace stirap
