#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "stirap/config.hpp"
#include "stirap/output.hpp"

using namespace stirap;
using std::numbers::pi;

TEST_CASE("expressions") {
    CHECK(evaluate_expression("-pi/12") == -pi / 12);
    CHECK(evaluate_expression("cos(pi/5)") == std::cos(pi / 5));
    CHECK(evaluate_expression(" 2 * (1 + 3) - 1e-1 ") == doctest::Approx(7.9));
    CHECK(evaluate_expression("2^3^2") == 512.0);
    CHECK(evaluate_expression("-2^2") == -4.0);
    CHECK(evaluate_expression("2^-1") == 0.5);
    CHECK(evaluate_expression("sqrt(2)/2") == doctest::Approx(std::sqrt(0.5)));
    CHECK_THROWS_AS(evaluate_expression(""), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_expression("pi pi"), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_expression("(1 + 2"), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_expression("foo(1)"), std::invalid_argument);
}

TEST_CASE("shortest round-trip formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(20.0) == "20");
    CHECK(format_double(-0.2617993877991494) == "-0.2617993877991494");
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 1000; ++i) {
        const double v = u(rng) * std::pow(10.0, static_cast<int>(u(rng)) % 20);
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("parse the reference config") {
    const auto c = parse_config(R"(
# reference example
[qubit]
alpha = cos(pi/5)
beta  = sin(pi/5)   # trailing comment

[rotation]
chi = -pi/12
eta = 0
delta = pi

[pulses]
omega0 = 20
tau = 2
t0 = 1.6
T = 20
detuning = 0
shape = gaussian
)");
    const auto d = default_config();
    CHECK(c.qubit.alpha == d.qubit.alpha);
    CHECK(c.qubit.beta == d.qubit.beta);
    CHECK(c.pulses.chi == d.pulses.chi);
    CHECK(c.pulses.delta == d.pulses.delta);
    CHECK(c.pulses.omega0 == 20.0);
    CHECK(c.pulses.t0 == 1.6);
    CHECK(c.pulses.big_t == 20.0);
    CHECK(c.pulses.shape == PulseShape::Gaussian);
}

TEST_CASE("complex amplitudes via magnitude and phase") {
    const auto c = parse_config("[qubit]\nalpha = 1\nbeta = 1\nbeta_phase = pi/2\n");
    const auto q = c.qubit.state();
    CHECK(q.alpha().real() == doctest::Approx(std::sqrt(0.5)));
    CHECK(q.beta().imag() == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("errors point at the offending line and field") {
    const auto error_of = [](std::string_view text) -> ConfigError {
        try {
            parse_config(text);
        } catch (const ConfigError &e) {
            return e;
        }
        FAIL("expected a ConfigError");
        return ConfigError(0, "", "");
    };
    SUBCASE("bad expression") {
        const auto e = error_of("[pulses]\nomega0 = 20\ntau = two\n");
        CHECK(e.line() == 3);
        CHECK(e.field() == "pulses.tau");
    }
    SUBCASE("non-positive width") {
        const auto e = error_of("[pulses]\ntau = -1\n");
        CHECK(e.line() == 2);
        CHECK(e.field() == "pulses.tau");
    }
    SUBCASE("unknown key") {
        const auto e = error_of("[pulses]\nwidth = 2\n");
        CHECK(e.field() == "pulses.width");
    }
    SUBCASE("unknown section") {
        CHECK(error_of("[laser]\n").line() == 1);
    }
    SUBCASE("key outside a section") {
        CHECK(error_of("tau = 2\n").line() == 1);
    }
    SUBCASE("missing value") {
        CHECK(error_of("[rotation]\nchi =\n").field() == "rotation.chi");
    }
    SUBCASE("bad shape") {
        CHECK(error_of("[pulses]\nshape = square\n").field() == "pulses.shape");
    }
    SUBCASE("zero qubit") {
        CHECK(error_of("[qubit]\nalpha = 0\nbeta = 0\n").field() == "qubit");
    }
    SUBCASE("schedule invariants") {
        CHECK(error_of("[pulses]\nt0 = 15\n").field() == "pulses");
    }
    SUBCASE("fractional stride") {
        CHECK(error_of("[output]\nstride = 2.5\n").field() == "output.stride");
    }
}

TEST_CASE("format then parse reproduces every value") {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        SimulationConfig c = default_config();
        c.qubit.alpha = u(rng) - 0.5;
        c.qubit.alpha_phase = 6 * u(rng);
        c.qubit.beta = u(rng) + 0.1;
        c.qubit.beta_phase = 6 * u(rng);
        c.pulses.chi = 3 * u(rng) - 1.5;
        c.pulses.eta = 6 * u(rng);
        c.pulses.delta = 6 * u(rng);
        c.pulses.omega0 = 40 * u(rng);
        c.pulses.tau = 1.5 + u(rng);
        c.pulses.t0 = 0.5 + u(rng);
        c.pulses.big_t = 15 + 10 * u(rng);
        c.pulses.detuning = u(rng) - 0.5;
        c.pulses.shape = u(rng) < 0.5 ? PulseShape::Gaussian : PulseShape::SineSquared;
        c.numerics.step = 1e-3 * u(rng);
        c.numerics.sample_interval = 0.001 + u(rng);
        c.output.stride = 1 + static_cast<int>(10 * u(rng));
        c.output.dir = "out/run" + std::to_string(i);

        const auto text = format_config(c);
        const auto back = parse_config(text);
        CHECK(back.qubit.alpha == c.qubit.alpha);
        CHECK(back.qubit.alpha_phase == c.qubit.alpha_phase);
        CHECK(back.qubit.beta == c.qubit.beta);
        CHECK(back.qubit.beta_phase == c.qubit.beta_phase);
        CHECK(back.pulses.chi == c.pulses.chi);
        CHECK(back.pulses.eta == c.pulses.eta);
        CHECK(back.pulses.delta == c.pulses.delta);
        CHECK(back.pulses.omega0 == c.pulses.omega0);
        CHECK(back.pulses.tau == c.pulses.tau);
        CHECK(back.pulses.t0 == c.pulses.t0);
        CHECK(back.pulses.big_t == c.pulses.big_t);
        CHECK(back.pulses.detuning == c.pulses.detuning);
        CHECK(back.pulses.shape == c.pulses.shape);
        CHECK(back.numerics.step == c.numerics.step);
        CHECK(back.numerics.sample_interval == c.numerics.sample_interval);
        CHECK(back.output.stride == c.output.stride);
        CHECK(back.output.dir == c.output.dir);
        CHECK(format_config(back) == text);
    }
}

TEST_CASE("trajectory CSV layout") {
    Trajectory traj;
    traj.times = {-1.0, 0.0, 0.5};
    traj.states = {StateVector(1, 0, 0, 0), StateVector(0, 1, 0, 0), StateVector(0, 0, 0, 1)};
    traj.rabi = {{0.1, 0.2, 0.3}, {0, 0, 0}, {1, 2, 3}};
    std::ostringstream out;
    write_trajectory_csv(out, traj, 2);
    CHECK(out.str() ==
          "t,P1,P2,P3,P4,absOmega1,absOmega2,absOmega3\n"
          "-1,1,0,0,0,0.1,0.2,0.3\n"
          "0.5,0,0,0,1,1,2,3\n");
}

TEST_CASE("sweep CSV layout") {
    SweepResult r{{16.0, 20.0}, {0.9995, std::numeric_limits<double>::quiet_NaN()}, {1e-4, 2e-4}, {0.0, 1e-5}, {"", "x"}};
    std::ostringstream out;
    write_sweep_csv(out, r);
    CHECK(out.str() == "param_value,fidelity,max_P4,leakage\n16,0.9995,1e-04,0\n20,nan,2e-04,1e-05\n");
}
