#include "stirap/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stirap {

BasisPair basis_states(double chi, double eta) {
    const Complex phase = std::polar(1.0, eta);
    return {
        QubitState(-std::sin(chi), phase * std::cos(chi)),
        QubitState(std::cos(chi), phase * std::sin(chi)),
    };
}

DecompositionResult decompose(const QubitState &q, double chi, double eta) {
    const Complex conj_phase = std::polar(1.0, -eta);
    return {
        -q.alpha() * std::sin(chi) + q.beta() * conj_phase * std::cos(chi),
        q.alpha() * std::cos(chi) + q.beta() * conj_phase * std::sin(chi),
    };
}

namespace {

std::vector<double> protocol_samples(const TimeWindow &window, double interval) {
    const auto intervals = static_cast<std::size_t>(std::ceil((window.end - window.start) / interval));
    auto grid = uniform_grid(window.start, window.end, std::max<std::size_t>(intervals, 1) + 1);
    if (window.start < 0.0 && window.end > 0.0) {
        auto it = std::lower_bound(grid.begin(), grid.end(), 0.0);
        if (it == grid.end() || *it != 0.0) grid.insert(it, 0.0);
    }
    return grid;
}

Complex qubit_overlap(const QubitState &predicted, const StateVector &simulated) {
    return std::conj(predicted.alpha()) * simulated(0) + std::conj(predicted.beta()) * simulated(1);
}

}  // namespace

RotationRun run_rotation(const QubitState &q, const PulseSchedule &sched, const PropagatorConfig &cfg,
                         const RotationOptions &options) {
    sched.validate();
    if (!(options.sample_interval > 0.0)) throw std::invalid_argument("sample interval must be positive");

    const auto window = simulation_window(sched);
    const auto samples = protocol_samples(window, options.sample_interval);
    auto traj = propagate(embed(q), sched, cfg, window.start, window.end, samples);
    const StateVector final_state = traj.final_state();

    RotationReport report;
    const auto predicted = predicted_final(q, sched.rotation());
    report.overlap = qubit_overlap(predicted, final_state);
    report.fidelity = std::min(1.0, std::norm(report.overlap));
    report.final_leakage = std::norm(final_state(2)) + std::norm(final_state(3));
    report.final_norm_drift = std::abs(final_state.squaredNorm() - 1.0);
    for (const auto &psi : traj.states) {
        report.max_excited_population = std::max(report.max_excited_population, std::norm(psi(3)));
    }

    const auto [nc, c] = basis_states(sched.chi, sched.eta);
    const auto coeffs = decompose(q, sched.chi, sched.eta);
    report.expected_midgap_p3 = std::norm(coeffs.c_coeff);
    const auto mid = std::find(traj.times.begin(), traj.times.end(), report.midgap_time);
    if (mid != traj.times.end()) {
        const StateVector &psi = traj.states[static_cast<std::size_t>(mid - traj.times.begin())];
        report.midgap_p3 = std::norm(psi(2));
        report.midgap_p4 = std::norm(psi(3));
        const double qubit_norm = std::hypot(std::abs(psi(0)), std::abs(psi(1)));
        report.midgap_nc_alignment = qubit_norm > 0.0 ? std::abs(qubit_overlap(nc, psi)) / qubit_norm : 1.0;
    } else {
        report.midgap_time = std::numeric_limits<double>::quiet_NaN();
    }

    const double tiny = 1e-9;
    const Complex nc_out = qubit_overlap(nc, final_state);
    const Complex c_out = qubit_overlap(c, final_state);
    if (std::abs(coeffs.nc_coeff) > tiny && std::abs(coeffs.c_coeff) > tiny && std::abs(nc_out) > tiny) {
        report.realized_phase_shift = std::arg((c_out / coeffs.c_coeff) / (nc_out / coeffs.nc_coeff));
    } else {
        report.realized_phase_shift = std::numeric_limits<double>::quiet_NaN();
    }

    report.adiabaticity_warning = report.fidelity < options.fidelity_threshold;
    return {final_state, std::move(traj), report};
}

QubitMatrix extract_qubit_map(const PulseSchedule &sched, const PropagatorConfig &cfg) {
    sched.validate();
    const auto window = simulation_window(sched);
    QubitMatrix map;
    for (int col = 0; col < 2; ++col) {
        StateVector psi0 = StateVector::Zero();
        psi0(col) = 1.0;
        const auto out = propagate(psi0, sched, cfg, window.start, window.end, {}).final_state();
        map(0, col) = out(0);
        map(1, col) = out(1);
    }
    return map;
}

}  // namespace stirap
