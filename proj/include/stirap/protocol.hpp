// The two-STIRAP rotation protocol and the dark/bright decomposition of the qubit.

#pragma once

#include "stirap/dynamics.hpp"

namespace stirap {

struct BasisPair {
    QubitState noncoupled;  ///< -sin(chi)|1> + e^{i eta} cos(chi)|2>
    QubitState coupled;     ///<  cos(chi)|1> + e^{i eta} sin(chi)|2>
};

BasisPair basis_states(double chi, double eta);

struct DecompositionResult {
    Complex nc_coeff;  ///< <NC|q>
    Complex c_coeff;   ///< <C|q>
};

DecompositionResult decompose(const QubitState &q, double chi, double eta);

struct RotationOptions {
    /// Spacing of recorded trajectory samples.
    double sample_interval = 0.01;
    /// Fidelity below this sets RotationReport::adiabaticity_warning.
    double fidelity_threshold = 0.999;
};

struct RotationReport {
    double fidelity = 0.0;             ///< |<psi_f|psi_final>|^2
    Complex overlap;                   ///< <psi_f|psi_final>, phase sensitive
    double max_excited_population = 0.0;
    double final_leakage = 0.0;
    double final_norm_drift = 0.0;

    /// State at the mid-gap time t = 0.
    double midgap_time = 0.0;
    double midgap_p3 = 0.0;
    double midgap_p4 = 0.0;
    double expected_midgap_p3 = 0.0;   ///< |<C|q>|^2
    /// |<NC|psi_12>| / |psi_12| for the qubit part at mid-gap; 1 if the
    /// qubit part is zero.
    double midgap_nc_alignment = 0.0;

    /// arg of the bright-component phase relative to the dark component,
    /// ideally -delta. NaN when either input coefficient vanishes.
    double realized_phase_shift = 0.0;

    bool adiabaticity_warning = false;
};

struct RotationRun {
    StateVector final_state;
    Trajectory trajectory;
    RotationReport report;
};

/// Propagates embed(q) through both processes in one continuous run over
/// simulation_window(sched) and compares against predicted_final.
RotationRun run_rotation(const QubitState &q, const PulseSchedule &sched, const PropagatorConfig &cfg,
                         const RotationOptions &options = {});

/// Realized 2x2 map on the qubit subspace, columns from the inputs |1> and |2>.
QubitMatrix extract_qubit_map(const PulseSchedule &sched, const PropagatorConfig &cfg);

}  // namespace stirap
