#include "stirap/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

namespace stirap {

FidelityResult fidelity(const QubitState &predicted, const StateVector &simulated) {
    const Complex overlap = std::conj(predicted.alpha()) * simulated(0) + std::conj(predicted.beta()) * simulated(1);
    FidelityResult result;
    result.value = std::clamp(std::norm(overlap), 0.0, 1.0);
    result.leakage = std::norm(simulated(2)) + std::norm(simulated(3));
    result.high_leakage = result.leakage >= 0.5;
    return result;
}

std::vector<Populations> populations(const Trajectory &traj) {
    std::vector<Populations> rows;
    rows.reserve(traj.size());
    for (const auto &psi : traj.states) {
        rows.push_back({std::norm(psi(0)), std::norm(psi(1)), std::norm(psi(2)), std::norm(psi(3))});
    }
    return rows;
}

namespace {

struct AxisName {
    SweepAxis axis;
    std::string_view name;
};

constexpr std::array kAxisNames{
    AxisName{SweepAxis::Omega0, "omega0"}, AxisName{SweepAxis::Tau, "tau"},
    AxisName{SweepAxis::T0, "t0"},         AxisName{SweepAxis::Delta, "delta"},
    AxisName{SweepAxis::Chi, "chi"},       AxisName{SweepAxis::Eta, "eta"},
    AxisName{SweepAxis::Detuning, "detuning"}, AxisName{SweepAxis::Shape, "shape"},
};

}  // namespace

std::string_view to_string(SweepAxis axis) {
    for (const auto &entry : kAxisNames) {
        if (entry.axis == axis) return entry.name;
    }
    return "unknown";
}

SweepAxis parse_sweep_axis(std::string_view name) {
    for (const auto &entry : kAxisNames) {
        if (entry.name == name) return entry.axis;
    }
    throw std::invalid_argument("unknown sweep axis '" + std::string(name) +
                                "' (expected omega0, tau, t0, delta, chi, eta, detuning or shape)");
}

bool tracks_prediction(SweepAxis axis) {
    return axis == SweepAxis::Chi || axis == SweepAxis::Eta || axis == SweepAxis::Delta;
}

PulseSchedule with_parameter(const PulseSchedule &base, SweepAxis axis, double value) {
    PulseSchedule s = base;
    switch (axis) {
    case SweepAxis::Omega0: s.omega0 = value; break;
    case SweepAxis::Tau: s.tau = value; break;
    case SweepAxis::T0: s.t0 = value; break;
    case SweepAxis::Delta: s.delta = value; break;
    case SweepAxis::Chi: s.chi = value; break;
    case SweepAxis::Eta: s.eta = value; break;
    case SweepAxis::Detuning: s.detuning = value; break;
    case SweepAxis::Shape:
        if (value == 0.0) s.shape = PulseShape::Gaussian;
        else if (value == 1.0) s.shape = PulseShape::SineSquared;
        else throw std::invalid_argument("shape axis values must be 0 (gaussian) or 1 (sin2)");
        break;
    }
    return s;
}

bool SweepResult::all_succeeded() const {
    return std::all_of(errors.begin(), errors.end(), [](const std::string &e) { return e.empty(); });
}

SweepResult sweep(const PulseSchedule &base, const QubitState &q, SweepAxis axis, const std::vector<double> &values,
                  const PropagatorConfig &cfg, const SweepOptions &options) {
    const std::size_t n = values.size();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    SweepResult result{values, std::vector<double>(n, nan), std::vector<double>(n, nan),
                       std::vector<double>(n, nan), std::vector<std::string>(n)};
    const auto fixed_prediction = predicted_final(q, base.rotation());

    const auto run_point = [&](std::size_t i) {
        try {
            const auto sched = with_parameter(base, axis, values[i]);
            const auto run = run_rotation(q, sched, cfg, options.rotation);
            const auto target = tracks_prediction(axis) ? predicted_final(q, sched.rotation()) : fixed_prediction;
            const auto f = fidelity(target, run.final_state);
            result.fidelities[i] = f.value;
            result.max_p4[i] = run.report.max_excited_population;
            result.leakage[i] = f.leakage;
        } catch (const std::exception &e) {
            result.errors[i] = e.what();
        }
    };

    unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(n, 1)));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) run_point(i);
        return result;
    }

    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) run_point(i);
            });
        }
    }
    return result;
}

namespace {

struct ProcessDiagnostics {
    double theta;
    double gap;
};

ProcessDiagnostics diagnostics_at(double t, const PulseSchedule &sched) {
    const auto env = coupling_envelopes(t, sched);
    const double aux = std::abs(env.aux);
    const double rms = std::hypot(env.pump, aux);
    const double root = std::sqrt(sched.detuning * sched.detuning + rms * rms);
    const double gap = 0.5 * std::min(std::abs(sched.detuning + root), std::abs(sched.detuning - root));
    return {std::atan2(env.pump, aux), gap};
}

double min_ratio_on(double start, double end, const PulseSchedule &sched) {
    const double dt = sched.tau / 200.0;
    double best = std::numeric_limits<double>::infinity();
    for (double t = start + dt; t < end - dt; t += dt) {
        const auto here = diagnostics_at(t, sched);
        if (std::sin(2.0 * here.theta) < 0.1) continue;
        const double rate =
            std::abs(diagnostics_at(t + dt, sched).theta - diagnostics_at(t - dt, sched).theta) / (2.0 * dt);
        if (rate > 0.0) best = std::min(best, here.gap / rate);
    }
    return best;
}

}  // namespace

AdiabaticityMetric adiabaticity_metric(const PulseSchedule &sched, double threshold) {
    AdiabaticityMetric m;
    m.pulse_area = sched.omega0 * sched.tau * std::sqrt(2.0 * std::numbers::pi);
    const auto window = simulation_window(sched);
    if (sched.omega0 > 0.0) {
        m.min_gap_to_rate_first = min_ratio_on(window.start, 0.0, sched);
        m.min_gap_to_rate_second = min_ratio_on(0.0, window.end, sched);
    }
    m.adiabatic = m.pulse_area > threshold;
    return m;
}

}  // namespace stirap
