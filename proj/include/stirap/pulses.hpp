// Pulse envelopes and the two-process counterintuitive schedule.
//
// Process 1 is centred at -T/2: field 3 (Stokes) peaks at -T/2 - t0, fields
// 1 and 2 (pump) at -T/2 + t0. Process 2 is centred at +T/2 with the roles
// reversed: fields 1 and 2 peak at +T/2 - t0, field 3 at +T/2 + t0 and carries
// the extra phase factor e^{+i delta}.

#pragma once

#include <string_view>

#include "stirap/states.hpp"

namespace stirap {

enum class PulseShape {
    Gaussian,
    /// cos^2 window with the same area as the Gaussian of width tau.
    SineSquared,
};

std::string_view to_string(PulseShape shape);
/// Accepts "gaussian" and "sin2". Throws std::invalid_argument otherwise.
PulseShape parse_pulse_shape(std::string_view name);

/// Sign of the phase factor applied to field 3 in the second process. With
/// +1 the bright component acquires e^{-i delta}, matching the predicted
/// rotation e^{-i delta/2} R_n(delta).
inline constexpr double kSecondProcessPhaseSign = +1.0;

struct PulseSchedule {
    double omega0 = 20.0;  ///< peak Rabi frequency
    double tau = 2.0;      ///< Gaussian width
    double t0 = 1.6;       ///< half the pump/Stokes delay inside a process
    double big_t = 20.0;   ///< separation of the two processes
    double chi = 0.0;
    double eta = 0.0;
    double delta = 0.0;
    double detuning = 0.0;
    PulseShape shape = PulseShape::Gaussian;

    /// Throws std::invalid_argument unless tau > 0, t0 > 0, T > 2 t0,
    /// omega0 >= 0 and the in-process pulses overlap.
    void validate() const;

    RotationSpec rotation() const { return {chi, eta, delta}; }

    double stokes_center_first() const { return -0.5 * big_t - t0; }
    double pump_center_first() const { return -0.5 * big_t + t0; }
    double stokes_center_second() const { return 0.5 * big_t - t0; }
    double pump_center_second() const { return 0.5 * big_t + t0; }
};

/// Minimum normalized overlap of the pump and Stokes envelopes of one process.
inline constexpr double kMinEnvelopeOverlap = 0.3;

/// Normalized overlap integral of the two envelopes of one process,
/// int g_p g_s / int g^2 = exp(-(2 t0)^2 / (4 tau^2)).
double envelope_overlap(const PulseSchedule &sched);

/// exp(-(t - center)^2 / (2 tau^2))
double envelope(double t, double center, double tau);

/// cos^2(pi (t - center) / w) on |t - center| < w/2, zero outside, with
/// w = 2 sqrt(2 pi) tau so that its area equals that of the Gaussian.
double sine_squared_envelope(double t, double center, double tau);

double shaped_envelope(PulseShape shape, double t, double center, double tau);

struct RabiFrequencies {
    Complex omega1;
    Complex omega2;
    Complex omega3;
};

/// Real envelope shared by fields 1 and 2 and the full field 3, i.e. the
/// couplings of the bright state |C> and of |3> to |4>.
struct CouplingEnvelopes {
    double pump;   ///< Omega(t), real
    Complex aux;   ///< Omega_3(t)
};

CouplingEnvelopes coupling_envelopes(double t, const PulseSchedule &sched);

RabiFrequencies rabi_frequencies(double t, const PulseSchedule &sched);

struct TimeWindow {
    double start;
    double end;
};

/// [-T/2 - t0 - 5 tau, T/2 + t0 + 5 tau]
TimeWindow simulation_window(const PulseSchedule &sched);

}  // namespace stirap
