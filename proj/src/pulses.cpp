#include "stirap/pulses.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace stirap {

std::string_view to_string(PulseShape shape) {
    switch (shape) {
    case PulseShape::Gaussian: return "gaussian";
    case PulseShape::SineSquared: return "sin2";
    }
    return "unknown";
}

PulseShape parse_pulse_shape(std::string_view name) {
    if (name == "gaussian") return PulseShape::Gaussian;
    if (name == "sin2") return PulseShape::SineSquared;
    throw std::invalid_argument("unknown pulse shape '" + std::string(name) + "' (expected gaussian or sin2)");
}

void PulseSchedule::validate() const {
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
    if (!(t0 > 0.0)) throw std::invalid_argument("t0 must be positive");
    if (!(big_t > 2.0 * t0)) throw std::invalid_argument("T must exceed 2*t0 so the two processes are resolved");
    if (!(omega0 >= 0.0) || !std::isfinite(omega0)) throw std::invalid_argument("omega0 must be finite and non-negative");
    if (!std::isfinite(detuning)) throw std::invalid_argument("detuning must be finite");
    if (!std::isfinite(chi) || !std::isfinite(eta) || !std::isfinite(delta)) {
        throw std::invalid_argument("chi, eta and delta must be finite");
    }
    if (envelope_overlap(*this) <= kMinEnvelopeOverlap) {
        throw std::invalid_argument("pump and Stokes pulses do not overlap enough (increase tau or decrease t0)");
    }
}

double envelope_overlap(const PulseSchedule &sched) {
    const double separation = 2.0 * sched.t0;
    return std::exp(-separation * separation / (4.0 * sched.tau * sched.tau));
}

double envelope(double t, double center, double tau) {
    const double x = (t - center) / tau;
    return std::exp(-0.5 * x * x);
}

double sine_squared_envelope(double t, double center, double tau) {
    const double width = 2.0 * std::sqrt(2.0 * std::numbers::pi) * tau;
    const double x = t - center;
    if (std::abs(x) >= 0.5 * width) {
        return 0.0;
    }
    const double c = std::cos(std::numbers::pi * x / width);
    return c * c;
}

double shaped_envelope(PulseShape shape, double t, double center, double tau) {
    switch (shape) {
    case PulseShape::Gaussian: return envelope(t, center, tau);
    case PulseShape::SineSquared: return sine_squared_envelope(t, center, tau);
    }
    return 0.0;
}

CouplingEnvelopes coupling_envelopes(double t, const PulseSchedule &s) {
    const auto g = [&](double center) { return shaped_envelope(s.shape, t, center, s.tau); };
    const double pump = s.omega0 * (g(s.pump_center_first()) + g(s.stokes_center_second()));
    const Complex shift = std::polar(1.0, kSecondProcessPhaseSign * s.delta);
    const Complex aux = s.omega0 * (g(s.stokes_center_first()) + shift * g(s.pump_center_second()));
    return {pump, aux};
}

RabiFrequencies rabi_frequencies(double t, const PulseSchedule &sched) {
    const auto env = coupling_envelopes(t, sched);
    return {
        env.pump * std::cos(sched.chi),
        env.pump * std::polar(1.0, sched.eta) * std::sin(sched.chi),
        env.aux,
    };
}

TimeWindow simulation_window(const PulseSchedule &sched) {
    const double half = 0.5 * sched.big_t + sched.t0 + 5.0 * sched.tau;
    return {-half, half};
}

}  // namespace stirap
