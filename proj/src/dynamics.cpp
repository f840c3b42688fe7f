#include "stirap/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace stirap {

Hamiltonian hamiltonian_at(double t, const PulseSchedule &sched) {
    const auto rabi = rabi_frequencies(t, sched);
    const std::array<Complex, 3> omega{rabi.omega1, rabi.omega2, rabi.omega3};
    Hamiltonian h = Hamiltonian::Zero();
    for (int i = 0; i < 3; ++i) {
        h(i, 3) = 0.5 * omega[i];
        h(3, i) = std::conj(h(i, 3));
    }
    h(3, 3) = sched.detuning;
    return h;
}

double default_step(const PulseSchedule &sched) {
    const double scale = sched.omega0 > 0.0 ? std::min(sched.tau, 1.0 / sched.omega0) : sched.tau;
    return scale / 50.0;
}

double resolve_step(const PropagatorConfig &cfg, const PulseSchedule &sched) {
    return cfg.step > 0.0 ? cfg.step : default_step(sched);
}

namespace {

StateVector rk4_step(const HamiltonianFn &hamiltonian, double t, double h, const StateVector &psi) {
    const auto rhs = [&](double time, const StateVector &y) -> StateVector {
        return -kI * (hamiltonian(time) * y);
    };
    const Hamiltonian mid = hamiltonian(t + 0.5 * h);
    const StateVector k1 = rhs(t, psi);
    const StateVector k2 = -kI * (mid * (psi + 0.5 * h * k1));
    const StateVector k3 = -kI * (mid * (psi + 0.5 * h * k2));
    const StateVector k4 = rhs(t + h, psi + h * k3);
    return psi + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void check_state(const StateVector &psi, double t, double norm0, double tolerance) {
    if (!psi.allFinite()) {
        std::ostringstream msg;
        msg << "non-finite amplitude at t=" << t;
        throw NumericalBlowupError(msg.str());
    }
    const double drift = std::abs(psi.squaredNorm() - norm0);
    if (drift > tolerance) {
        std::ostringstream msg;
        msg << "norm drift " << drift << " at t=" << t << " exceeds " << tolerance << " (step too large)";
        throw IntegrationError(msg.str());
    }
}

}  // namespace

Trajectory propagate(const StateVector &psi0, const HamiltonianFn &hamiltonian, double step,
                     double norm_tolerance, double start, double end, std::span<const double> samples) {
    if (!(end > start)) throw std::invalid_argument("propagation end must be after start");
    if (!(step > 0.0)) throw std::invalid_argument("propagation step must be positive");
    if (std::adjacent_find(samples.begin(), samples.end(), std::greater_equal<>()) != samples.end()) {
        throw std::invalid_argument("sample times must be strictly increasing");
    }
    if (!samples.empty() && (samples.front() < start || samples.back() > end)) {
        throw std::invalid_argument("sample times must lie inside the propagation interval");
    }

    Trajectory traj;
    traj.times.reserve(samples.size() + 1);
    traj.states.reserve(samples.size() + 1);
    traj.rabi.reserve(samples.size() + 1);
    const auto record = [&](double t, const StateVector &psi) {
        const Hamiltonian h = hamiltonian(t);
        traj.times.push_back(t);
        traj.states.push_back(psi);
        traj.rabi.push_back({2.0 * std::abs(h(0, 3)), 2.0 * std::abs(h(1, 3)), 2.0 * std::abs(h(2, 3))});
    };

    const double norm0 = psi0.squaredNorm();
    StateVector psi = psi0;
    double t = start;

    // Advances psi from t to target in equal sub-steps no longer than `step`.
    const auto advance_to = [&](double target) {
        const double span = target - t;
        if (span <= 0.0) return;
        const auto n = static_cast<long>(std::ceil(span / step * (1.0 - 1e-12)));
        const double h = span / static_cast<double>(std::max(n, 1L));
        for (long k = 0; k < n; ++k) {
            psi = rk4_step(hamiltonian, t + static_cast<double>(k) * h, h, psi);
            if (!psi.allFinite()) check_state(psi, t + static_cast<double>(k + 1) * h, norm0, norm_tolerance);
        }
        t = target;
        check_state(psi, t, norm0, norm_tolerance);
    };

    for (double sample : samples) {
        advance_to(sample);
        record(sample, psi);
    }
    if (traj.times.empty() || traj.times.back() < end) {
        advance_to(end);
        record(end, psi);
    }
    return traj;
}

Trajectory propagate(const StateVector &psi0, const PulseSchedule &sched, const PropagatorConfig &cfg,
                     double start, double end, std::span<const double> samples) {
    const HamiltonianFn h = [&sched](double t) { return hamiltonian_at(t, sched); };
    return propagate(psi0, h, resolve_step(cfg, sched), cfg.norm_tolerance, start, end, samples);
}

std::vector<double> uniform_grid(double start, double end, std::size_t count) {
    if (count < 2) throw std::invalid_argument("a grid needs at least two points");
    std::vector<double> grid(count);
    const double dt = (end - start) / static_cast<double>(count - 1);
    for (std::size_t k = 0; k < count; ++k) {
        grid[k] = start + static_cast<double>(k) * dt;
    }
    grid.back() = end;
    return grid;
}

double convergence_certificate(const StateVector &psi0, const PulseSchedule &sched, const PropagatorConfig &cfg,
                               double start, double end) {
    PropagatorConfig fine = cfg;
    fine.step = 0.5 * resolve_step(cfg, sched);
    const auto coarse_final = propagate(psi0, sched, cfg, start, end, {}).final_state();
    const auto fine_final = propagate(psi0, sched, fine, start, end, {}).final_state();
    return (coarse_final - fine_final).cwiseAbs().maxCoeff();
}

StateVector dark_state_at(double t, const PulseSchedule &sched) {
    const auto env = coupling_envelopes(t, sched);
    const double weight = env.pump * env.pump + std::norm(env.aux);
    if (!(weight > 0.0)) {
        throw UndefinedDarkStateError("both pump and Stokes envelopes vanish; dark state undefined");
    }
    const double norm = std::sqrt(weight);
    const Complex bright_amp = std::conj(env.aux) / norm;
    StateVector dark;
    dark << bright_amp * std::cos(sched.chi),
            bright_amp * std::polar(1.0, sched.eta) * std::sin(sched.chi),
            -env.pump / norm,
            0.0;
    return dark;
}

}  // namespace stirap
