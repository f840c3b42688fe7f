#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "stirap/protocol.hpp"

using namespace stirap;
using std::numbers::pi;

namespace {

const QubitState kReferenceQubit(std::cos(pi / 5), std::sin(pi / 5));

PulseSchedule reference_schedule(double delta = pi) {
    PulseSchedule s;
    s.chi = -pi / 12;
    s.delta = delta;
    return s;
}

double distance(const QubitState &a, const QubitState &b) {
    return (a.vector() - b.vector()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("basis_states") {
    SUBCASE("chi = 0") {
        const auto [nc, c] = basis_states(0.0, 0.0);
        CHECK(distance(nc, QubitState(0.0, 1.0)) < 1e-15);
        CHECK(distance(c, QubitState(1.0, 0.0)) < 1e-15);
    }
    SUBCASE("equal mixing") {
        const auto [nc, c] = basis_states(pi / 4, 0.0);
        const double h = 1.0 / std::sqrt(2.0);
        CHECK(distance(nc, QubitState(-h, h)) < 1e-15);
        CHECK(distance(c, QubitState(h, h)) < 1e-15);
    }
    SUBCASE("chi = -pi/12") {
        const auto [nc, c] = basis_states(-pi / 12, 0.0);
        // sin(pi/12), cos(pi/12)
        CHECK(nc.alpha().real() == doctest::Approx(0.25881904510252074).epsilon(1e-15));
        CHECK(nc.beta().real() == doctest::Approx(0.96592582628906831).epsilon(1e-15));
        CHECK(c.alpha().real() == doctest::Approx(0.96592582628906831).epsilon(1e-15));
        CHECK(c.beta().real() == doctest::Approx(-0.25881904510252074).epsilon(1e-15));
    }
    SUBCASE("orthonormal for random angles") {
        std::mt19937_64 rng(47);
        std::uniform_real_distribution<double> angle(-pi, pi);
        for (int i = 0; i < 100; ++i) {
            const auto [nc, c] = basis_states(angle(rng), angle(rng));
            CHECK(std::abs(inner(nc, c)) < 1e-14);
        }
    }
}

TEST_CASE("decompose") {
    SUBCASE("self projections") {
        const auto [nc, c] = basis_states(0.37, 1.2);
        const auto dn = decompose(nc, 0.37, 1.2);
        CHECK(std::abs(dn.nc_coeff - 1.0) < 1e-15);
        CHECK(std::abs(dn.c_coeff) < 1e-15);
        const auto dc = decompose(c, 0.37, 1.2);
        CHECK(std::abs(dc.nc_coeff) < 1e-15);
        CHECK(std::abs(dc.c_coeff - 1.0) < 1e-15);
    }
    SUBCASE("reference qubit") {
        const auto d = decompose(kReferenceQubit, -pi / 12, 0.0);
        // -alpha sin(chi) + beta cos(chi), alpha cos(chi) + beta sin(chi)
        CHECK(d.nc_coeff.real() == doctest::Approx(0.7771459614569709).epsilon(1e-15));
        CHECK(d.c_coeff.real() == doctest::Approx(0.6293203910498375).epsilon(1e-15));
    }
    SUBCASE("reconstruction and normalization") {
        std::mt19937_64 rng(53);
        std::normal_distribution<double> g;
        std::uniform_real_distribution<double> angle(-pi, pi);
        for (int i = 0; i < 100; ++i) {
            const QubitState q(Complex(g(rng), g(rng)), Complex(g(rng), g(rng)));
            const double chi = angle(rng);
            const double eta = angle(rng);
            const auto d = decompose(q, chi, eta);
            const auto [nc, c] = basis_states(chi, eta);
            CHECK(std::abs(std::norm(d.nc_coeff) + std::norm(d.c_coeff) - 1.0) < 1e-12);
            CHECK(std::abs(d.nc_coeff - inner(nc, q)) < 1e-14);
            const Eigen::Vector2cd rebuilt = d.nc_coeff * nc.vector() + d.c_coeff * c.vector();
            CHECK((rebuilt - q.vector()).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("run_rotation on the reference schedule") {
    const auto run = run_rotation(kReferenceQubit, reference_schedule(), {});
    const auto &r = run.report;
    CHECK(r.fidelity >= 0.999);
    CHECK_FALSE(r.adiabaticity_warning);
    CHECK(r.final_norm_drift < 1e-9);
    CHECK(r.midgap_time == 0.0);
    CHECK(std::abs(r.midgap_p3 - r.expected_midgap_p3) < 1e-3);
    CHECK(r.expected_midgap_p3 == doctest::Approx(0.6293203910498375 * 0.6293203910498375));
    CHECK(r.midgap_p4 < 1e-3);
    CHECK(r.midgap_nc_alignment >= 0.999);
    CHECK(std::remainder(r.realized_phase_shift + pi, 2 * pi) == doctest::Approx(0.0).epsilon(0.05));
    // Final state sits in the qubit subspace.
    CHECK(r.final_leakage < 1e-3);
    CHECK(run.trajectory.times.front() == doctest::Approx(-21.6));
    CHECK(run.trajectory.times.back() == doctest::Approx(21.6));
}

TEST_CASE("identical phases return the qubit to its initial state") {
    const auto run = run_rotation(kReferenceQubit, reference_schedule(0.0), {});
    CHECK(run.report.fidelity >= 0.999);
    CHECK(std::abs(run.report.overlap - Complex(1.0, 0.0)) < 2e-3);
}

TEST_CASE("noncoupled input is never transferred") {
    for (double delta : {0.5, pi, 4.0}) {
        const auto s = reference_schedule(delta);
        const auto nc = basis_states(s.chi, s.eta).noncoupled;
        const auto run = run_rotation(nc, s, {});
        CHECK(run.report.fidelity >= 0.999);
        double max_p3 = 0.0;
        for (const auto &psi : run.trajectory.states) max_p3 = std::max(max_p3, std::norm(psi(2)));
        CHECK(max_p3 < 1e-12);
        CHECK(run.report.max_excited_population < 1e-12);
    }
}

TEST_CASE("realized qubit map matches e^{-i delta/2} R_n(delta)") {
    auto s = reference_schedule(2.1);
    s.eta = 0.8;
    s.chi = 0.4;
    const auto map = extract_qubit_map(s, {});
    CHECK((map.adjoint() * map - QubitMatrix::Identity()).cwiseAbs().maxCoeff() < 1e-3);
    CHECK((map - predicted_map(s.rotation())).cwiseAbs().maxCoeff() < 1e-3);
}

TEST_CASE("no fields means no dynamics") {
    auto s = reference_schedule();
    s.omega0 = 0.0;
    const auto run = run_rotation(kReferenceQubit, s, {});
    for (const auto &psi : run.trajectory.states) {
        CHECK((psi - embed(kReferenceQubit)).cwiseAbs().maxCoeff() == 0.0);
    }
    const auto predicted = predicted_final(kReferenceQubit, s.rotation());
    CHECK(run.report.fidelity == doctest::Approx(std::norm(inner(predicted, kReferenceQubit))).epsilon(1e-14));
    CHECK(run.report.adiabaticity_warning);
}

TEST_CASE("invalid schedules are rejected before propagation") {
    auto s = reference_schedule();
    s.tau = -1.0;
    CHECK_THROWS_AS(run_rotation(kReferenceQubit, s, {}), std::invalid_argument);
}
