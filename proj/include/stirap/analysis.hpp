// Fidelity metrics, trajectory diagnostics and parameter sweeps.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stirap/protocol.hpp"

namespace stirap {

struct FidelityResult {
    double value = 0.0;     ///< |<predicted|simulated_12>|^2, in [0, 1]
    double leakage = 0.0;   ///< population outside the qubit subspace
    bool high_leakage = false;  ///< leakage >= 0.5, value not meaningful
};

FidelityResult fidelity(const QubitState &predicted, const StateVector &simulated);

using Populations = std::array<double, 4>;

std::vector<Populations> populations(const Trajectory &traj);

enum class SweepAxis { Omega0, Tau, T0, Delta, Chi, Eta, Detuning, Shape };

std::string_view to_string(SweepAxis axis);
SweepAxis parse_sweep_axis(std::string_view name);

/// True for chi, eta and delta: the prediction follows the swept value.
bool tracks_prediction(SweepAxis axis);

/// Copy of `base` with `axis` set to `value`. For Shape, 0 selects the
/// Gaussian and 1 the sin^2 envelope.
PulseSchedule with_parameter(const PulseSchedule &base, SweepAxis axis, double value);

struct SweepResult {
    std::vector<double> values;
    std::vector<double> fidelities;
    std::vector<double> max_p4;
    std::vector<double> leakage;
    /// Failure message per point; empty when the point succeeded. Failed
    /// points carry NaN metrics.
    std::vector<std::string> errors;

    std::size_t size() const { return values.size(); }
    bool all_succeeded() const;
};

struct SweepOptions {
    RotationOptions rotation{};
    /// 0 uses std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// One rotation run per value, executed concurrently. Results come back in
/// the order of `values`. Robustness axes (omega0, tau, t0, detuning, shape)
/// are scored against the prediction of the base schedule; chi, eta and
/// delta against the prediction for the swept value.
SweepResult sweep(const PulseSchedule &base, const QubitState &q, SweepAxis axis, const std::vector<double> &values,
                  const PropagatorConfig &cfg, const SweepOptions &options = {});

inline constexpr double kDefaultAdiabaticThreshold = 10.0;

struct AdiabaticityMetric {
    /// omega0 * tau * sqrt(2 pi), the area of one pulse
    double pulse_area = 0.0;
    /// min over each process of (dark-to-bright splitting) / |d theta/dt|,
    /// taken where the transfer is under way (sin 2theta >= 0.1). Infinity
    /// if the mixing angle never moves.
    double min_gap_to_rate_first = 0.0;
    double min_gap_to_rate_second = 0.0;
    bool adiabatic = false;
};

AdiabaticityMetric adiabaticity_metric(const PulseSchedule &sched,
                                       double threshold = kDefaultAdiabaticThreshold);

}  // namespace stirap
