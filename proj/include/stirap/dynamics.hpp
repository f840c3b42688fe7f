// Time-dependent RWA Hamiltonian and the Schroedinger-equation propagator.
//
// hbar = 1; times and frequencies share the same arbitrary unit.

#pragma once

#include <array>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "stirap/pulses.hpp"
#include "stirap/states.hpp"

namespace stirap {

using Hamiltonian = Eigen::Matrix4cd;
using HamiltonianFn = std::function<Hamiltonian(double)>;

/// H = Delta |4><4| + 1/2 sum_i (Omega_i |i><4| + h.c.)
Hamiltonian hamiltonian_at(double t, const PulseSchedule &sched);

/// Propagation failed because the norm drifted past the configured limit.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// NaN or Inf showed up in the state.
class NumericalBlowupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UndefinedDarkStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PropagatorConfig {
    /// Fixed RK4 step. Non-positive selects default_step() for the schedule.
    double step = 0.0;
    /// Norm drift beyond this aborts the propagation.
    double norm_tolerance = 1e-6;
};

/// min(tau, 1/omega0) / 50
double default_step(const PulseSchedule &sched);

double resolve_step(const PropagatorConfig &cfg, const PulseSchedule &sched);

struct Trajectory {
    std::vector<double> times;
    std::vector<StateVector> states;
    /// |Omega_1|, |Omega_2|, |Omega_3| at each sample
    std::vector<std::array<double, 3>> rabi;

    std::size_t size() const { return times.size(); }
    const StateVector &final_state() const { return states.back(); }
};

/// Integrates d/dt psi = -i H(t) psi from `start` to `end` with classical RK4
/// at fixed step. The state is recorded at every time in `samples` (which
/// must be strictly increasing and lie inside [start, end]); the integrator lands
/// exactly on each sample, shortening the local step as needed. The final
/// state at `end` is always the last entry of the trajectory.
///
/// No renormalization is applied. Throws IntegrationError when the norm
/// drifts by more than cfg.norm_tolerance and NumericalBlowupError on
/// non-finite amplitudes.
Trajectory propagate(const StateVector &psi0, const HamiltonianFn &hamiltonian, double step,
                     double norm_tolerance, double start, double end, std::span<const double> samples);

Trajectory propagate(const StateVector &psi0, const PulseSchedule &sched, const PropagatorConfig &cfg,
                     double start, double end, std::span<const double> samples);

/// `count` evenly spaced points on [start, end], endpoints included.
std::vector<double> uniform_grid(double start, double end, std::size_t count);

/// Maximum amplitude difference at `end` between runs at step h and h/2.
double convergence_certificate(const StateVector &psi0, const PulseSchedule &sched, const PropagatorConfig &cfg,
                               double start, double end);

/// Normalized null vector of H(t) inside the span of |C> and |3>:
/// conj(Omega_3)|C> - Omega|3>, which reduces to Omega_3|C> - Omega|3> for a
/// real Stokes field. Throws UndefinedDarkStateError when both couplings vanish.
StateVector dark_state_at(double t, const PulseSchedule &sched);

}  // namespace stirap
