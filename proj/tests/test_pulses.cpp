#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "stirap/pulses.hpp"

using namespace stirap;
using std::numbers::pi;

namespace {

PulseSchedule reference_schedule(double delta = pi) {
    PulseSchedule s;
    s.chi = -pi / 12;
    s.delta = delta;
    return s;
}

// Trapezoid rule over a generous interval.
double integrate(const auto &f, double a, double b, int n = 200000) {
    const double h = (b - a) / n;
    double sum = 0.5 * (f(a) + f(b));
    for (int k = 1; k < n; ++k) sum += f(a + k * h);
    return sum * h;
}

}  // namespace

TEST_CASE("Gaussian envelope") {
    CHECK(envelope(3.0, 3.0, 2.0) == 1.0);
    CHECK(envelope(5.0, 3.0, 2.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
    CHECK(envelope(1.0, 3.0, 2.0) == doctest::Approx(0.60653065971263342).epsilon(1e-15));
    CHECK(envelope(9.0, 3.0, 2.0) == doctest::Approx(std::exp(-4.5)).epsilon(1e-15));
}

TEST_CASE("sin^2 envelope matches the Gaussian area") {
    const double tau = 2.0;
    const double gaussian = integrate([&](double t) { return envelope(t, 0.0, tau); }, -40, 40);
    const double sine = integrate([&](double t) { return sine_squared_envelope(t, 0.0, tau); }, -40, 40);
    CHECK(gaussian == doctest::Approx(tau * std::sqrt(2 * pi)).epsilon(1e-9));
    CHECK(sine == doctest::Approx(gaussian).epsilon(1e-6));
    CHECK(sine_squared_envelope(0.0, 0.0, tau) == 1.0);
    CHECK(sine_squared_envelope(6.0, 0.0, tau) == 0.0);
}

TEST_CASE("schedule validation") {
    CHECK_NOTHROW(reference_schedule().validate());
    auto s = reference_schedule();
    SUBCASE("tau") { s.tau = 0.0; CHECK_THROWS_AS(s.validate(), std::invalid_argument); }
    SUBCASE("t0") { s.t0 = -1.0; CHECK_THROWS_AS(s.validate(), std::invalid_argument); }
    SUBCASE("unresolved processes") { s.big_t = 3.0; CHECK_THROWS_AS(s.validate(), std::invalid_argument); }
    SUBCASE("pulses too far apart") { s.t0 = 4.0; CHECK_THROWS_AS(s.validate(), std::invalid_argument); }
    SUBCASE("negative omega0") { s.omega0 = -1.0; CHECK_THROWS_AS(s.validate(), std::invalid_argument); }
}

TEST_CASE("envelope overlap of the reference schedule") {
    // exp(-(3.2)^2 / 16)
    CHECK(envelope_overlap(reference_schedule()) == doctest::Approx(0.5272924240430485).epsilon(1e-14));
    CHECK(envelope_overlap(reference_schedule()) > kMinEnvelopeOverlap);
}

TEST_CASE("Stokes field peaks first in the first process") {
    const auto s = reference_schedule();
    const auto rf = rabi_frequencies(s.stokes_center_first(), s);
    // Cross term from the second process is exp(-(T + 2 t0)^2 / 8) ~ 1e-27.
    CHECK(std::abs(rf.omega3) == doctest::Approx(s.omega0).epsilon(1e-12));
    CHECK(std::abs(rf.omega3) - s.omega0 < 1e-10);
}

TEST_CASE("pulse ordering is counterintuitive in both processes") {
    const auto s = reference_schedule();
    CHECK(s.stokes_center_first() < s.pump_center_first());
    CHECK(s.stokes_center_second() < s.pump_center_second());
    // In the second process fields 1,2 come first.
    const auto early = rabi_frequencies(s.stokes_center_second(), s);
    CHECK(std::abs(early.omega1) > std::abs(early.omega3));
    const auto late = rabi_frequencies(s.pump_center_second(), s);
    CHECK(std::abs(late.omega3) > std::abs(late.omega1));
}

TEST_CASE("fields 1 and 2 keep the ratio cos(chi) : e^{i eta} sin(chi)") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> angle(-1.5, 1.5);
    std::uniform_real_distribution<double> time(-25.0, 25.0);
    for (int i = 0; i < 200; ++i) {
        auto s = reference_schedule();
        s.chi = angle(rng);
        s.eta = 2 * angle(rng);
        const auto rf = rabi_frequencies(time(rng), s);
        if (std::abs(rf.omega1) <= 1e-300) continue;
        const Complex ratio = rf.omega2 / rf.omega1;
        CHECK(std::abs(ratio) == doctest::Approx(std::abs(std::tan(s.chi))).epsilon(1e-12));
        if (std::abs(ratio) > 1e-12) {
            CHECK(std::remainder(std::arg(ratio) - (s.chi > 0 ? s.eta : s.eta + pi), 2 * pi) ==
                  doctest::Approx(0.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("delta only rotates the second-process field 3") {
    const auto s = reference_schedule(0.7);
    const auto rf = rabi_frequencies(s.pump_center_second(), s);
    CHECK(std::arg(rf.omega3) == doctest::Approx(kSecondProcessPhaseSign * 0.7).epsilon(1e-12));
    const auto first = rabi_frequencies(s.stokes_center_first(), s);
    CHECK(std::abs(first.omega3.imag()) < 1e-20);
}

TEST_CASE("with delta = 0 the schedule mirrors about t = 0") {
    const auto s = reference_schedule(0.0);
    for (double t = 0.0; t < 25.0; t += 0.37) {
        const auto a = rabi_frequencies(t, s);
        const auto b = rabi_frequencies(-t, s);
        CHECK(a.omega3.imag() == 0.0);
        CHECK(std::abs(a.omega1 - b.omega1) <= 1e-14 * s.omega0);
        CHECK(std::abs(a.omega2 - b.omega2) <= 1e-14 * s.omega0);
        CHECK(std::abs(a.omega3 - b.omega3) <= 1e-14 * s.omega0);
    }
}

TEST_CASE("fields vanish far from the pulses") {
    const auto s = reference_schedule();
    for (double t : {-200.0, 200.0}) {
        const auto rf = rabi_frequencies(t, s);
        CHECK(std::abs(rf.omega1) == 0.0);
        CHECK(std::abs(rf.omega3) == 0.0);
    }
    const auto w = simulation_window(s);
    CHECK(w.start == doctest::Approx(-21.6));
    CHECK(w.end == doctest::Approx(21.6));
    CHECK(std::abs(rabi_frequencies(w.start, s).omega3) / s.omega0 < 4e-6);
}

TEST_CASE("pulse shape names") {
    CHECK(parse_pulse_shape("gaussian") == PulseShape::Gaussian);
    CHECK(parse_pulse_shape(to_string(PulseShape::SineSquared)) == PulseShape::SineSquared);
    CHECK_THROWS_AS(parse_pulse_shape("square"), std::invalid_argument);
}
