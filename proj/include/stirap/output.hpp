// CSV and summary emission. All floating-point values are written as the
// shortest decimal that round-trips to the same double.

#pragma once

#include <ostream>
#include <string>

#include "stirap/analysis.hpp"

namespace stirap {

std::string format_double(double value);

/// Header `t,P1,P2,P3,P4,absOmega1,absOmega2,absOmega3`, then every
/// `stride`-th sample. The final sample is always written.
void write_trajectory_csv(std::ostream &out, const Trajectory &traj, int stride = 1);

/// Header `param_value,fidelity,max_P4,leakage`, one row per sweep point.
void write_sweep_csv(std::ostream &out, const SweepResult &result);

struct SimulationSummary {
    RotationReport report;
    AdiabaticityMetric adiabaticity;
    double convergence = 0.0;  ///< step-halving certificate
    QubitState initial;
    QubitState predicted;
    QubitState final_qubit;
    double global_phase = 0.0;  ///< -delta/2
};

/// Flat JSON object, one key per quantity.
std::string format_summary_json(const SimulationSummary &summary);

}  // namespace stirap
