#include "stirap/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "stirap/analysis.hpp"
#include "stirap/config.hpp"

namespace stirap {

namespace {

using namespace acceptance;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(std::initializer_list<std::pair<const char *, double>> values) {
    std::ostringstream out;
    out.precision(6);
    bool first = true;
    for (const auto &[key, value] : values) {
        out << (first ? "" : ", ") << key << '=' << value;
        first = false;
    }
    return out.str();
}

QubitState random_qubit(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    return {Complex(normal(rng), normal(rng)), Complex(normal(rng), normal(rng))};
}

RotationSpec random_spec(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> chi(-0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    return {chi(rng), angle(rng), angle(rng)};
}

PulseSchedule reference_schedule(double delta) {
    auto sched = default_config().pulses;
    sched.delta = delta;
    return sched;
}

class Runner {
public:
    explicit Runner(const AcceptanceOptions &options) : options_(options), rng_(options.seed) {}

    std::vector<CriterionResult> run() {
        const auto q = default_config().qubit.state();

        const auto t_start = Clock::now();
        const auto rotation = run_rotation(q, reference_schedule(std::numbers::pi), cfg_);
        const double rotation_seconds = seconds_since(t_start);
        const auto identity = run_rotation(q, reference_schedule(0.0), cfg_);

        report(1, "reference rotation fidelity",
               rotation.report.fidelity >= kFidelityThreshold && rotation_seconds < kReferenceRuntimeSeconds,
               describe({{"fidelity", rotation.report.fidelity}, {"runtime_s", rotation_seconds}}));

        report(2, "reference return fidelity", identity.report.fidelity >= kFidelityThreshold,
               describe({{"fidelity", identity.report.fidelity}}));

        const double max_p4 =
            std::max(rotation.report.max_excited_population, identity.report.max_excited_population);
        report(3, "excited-state suppression", max_p4 < kMaxExcitedPopulation,
               describe({{"max_P4_rotation", rotation.report.max_excited_population},
                         {"max_P4_return", identity.report.max_excited_population},
                         {"bound", kMaxExcitedPopulation}}));

        const auto &r = rotation.report;
        const double p3_error = std::abs(r.midgap_p3 - r.expected_midgap_p3);
        report(4, "intermediate state at mid-gap",
               p3_error <= kMidgapTolerance && r.midgap_nc_alignment >= kMidgapAlignment,
               describe({{"P3", r.midgap_p3}, {"|<C|i>|^2", r.expected_midgap_p3}, {"nc_alignment", r.midgap_nc_alignment}}));

        oracle_equivalence();
        map_extraction();
        robustness();
        sensitivity(q);
        numerics(q, rotation, identity);
        adiabatic_convergence(q);
        return std::move(results_);
    }

private:
    AcceptanceOptions options_;
    std::mt19937_64 rng_;
    PropagatorConfig cfg_{};
    std::vector<CriterionResult> results_;

    void report(int id, std::string name, bool passed, std::string detail) {
        results_.push_back({id, std::move(name), passed, std::move(detail)});
        if (options_.on_result) options_.on_result(results_.back());
    }

    void oracle_equivalence() {
        const int samples = options_.quick ? 20 : kOracleSamples;
        const auto start = Clock::now();
        double worst = 1.0;
        for (int i = 0; i < samples; ++i) {
            const auto q = random_qubit(rng_);
            const auto spec = random_spec(rng_);
            auto sched = reference_schedule(spec.delta);
            sched.chi = spec.chi;
            sched.eta = spec.eta;
            const auto run = run_rotation(q, sched, cfg_);
            worst = std::min(worst, run.report.fidelity);
        }
        const double elapsed = seconds_since(start);
        const auto base = reference_schedule(0.0);
        report(5, "random oracle equivalence", worst >= kFidelityThreshold && elapsed < kOracleRuntimeSeconds,
               describe({{"samples", static_cast<double>(samples)}, {"omega0_tau", base.omega0 * base.tau}, {"min_fidelity", worst},
                         {"runtime_s", elapsed}}));
    }

    void map_extraction() {
        const int samples = options_.quick ? 3 : kMapSamples;
        double worst_entry = 0.0;
        double worst_unitarity = 0.0;
        for (int i = 0; i < samples; ++i) {
            const auto spec = random_spec(rng_);
            auto sched = reference_schedule(spec.delta);
            sched.chi = spec.chi;
            sched.eta = spec.eta;
            const auto realized = extract_qubit_map(sched, cfg_);
            worst_entry = std::max(worst_entry, (realized - predicted_map(spec)).cwiseAbs().maxCoeff());
            const QubitMatrix gram = realized.adjoint() * realized - QubitMatrix::Identity();
            worst_unitarity = std::max(worst_unitarity, gram.cwiseAbs().maxCoeff());
        }
        report(6, "unitary map extraction", worst_entry <= kMapTolerance,
               describe({{"specs", static_cast<double>(samples)}, {"max_entry_error", worst_entry}, {"max_unitarity_error", worst_unitarity}}));
    }

    void robustness() {
        const auto q = default_config().qubit.state();
        const auto base = reference_schedule(std::numbers::pi);
        std::vector<double> omegas;
        for (int k = 0; k < 9; ++k) omegas.push_back(16.0 + static_cast<double>(k));
        const auto area = sweep(base, q, SweepAxis::Omega0, omegas, cfg_);
        double worst_area = 1.0;
        for (double f : area.fidelities) worst_area = std::min(worst_area, std::isnan(f) ? 0.0 : f);
        const auto shape = sweep(base, q, SweepAxis::Shape, {1.0}, cfg_);
        const double shape_fidelity = std::isnan(shape.fidelities[0]) ? 0.0 : shape.fidelities[0];
        report(7, "robustness to pulse area and shape",
               worst_area >= kFidelityThreshold && shape_fidelity >= kFidelityThreshold,
               describe({{"min_fidelity_omega0_16_24", worst_area}, {"sin2_fidelity", shape_fidelity}}));
    }

    void sensitivity(const QubitState &q) {
        const auto base = reference_schedule(std::numbers::pi);
        const double shifted = base.chi + kChiPerturbation;
        const auto result = sweep(base, q, SweepAxis::Chi, {shifted}, cfg_);
        const auto sim = run_rotation(q, with_parameter(base, SweepAxis::Chi, shifted), cfg_);
        const double simulated = fidelity(predicted_final(q, base.rotation()), sim.final_state).value;
        RotationSpec perturbed = base.rotation();
        perturbed.chi = shifted;
        const double oracle = std::norm(inner(predicted_final(q, base.rotation()), predicted_final(q, perturbed)));
        const double bound = oracle + (1.0 - kFidelityThreshold);
        report(8, "sensitivity to chi", simulated < kFidelityThreshold && simulated <= bound,
               describe({{"fidelity_vs_base", simulated}, {"oracle", oracle}, {"bound", bound},
                         {"tracking_fidelity", result.fidelities[0]}}));
    }

    void numerics(const QubitState &q, const RotationRun &rotation, const RotationRun &identity) {
        const double drift = std::max(rotation.report.final_norm_drift, identity.report.final_norm_drift);

        const auto sched = reference_schedule(std::numbers::pi);
        const auto window = simulation_window(sched);
        const double halving = convergence_certificate(embed(q), sched, cfg_, window.start, window.end);

        // Resonant |3>-|4> coupling: P4(t) = sin^2(Omega t / 2).
        const double omega = 1.0;
        Hamiltonian coupling = Hamiltonian::Zero();
        coupling(2, 3) = coupling(3, 2) = 0.5 * omega;
        const auto times = uniform_grid(0.0, 4.0 * std::numbers::pi, 201);
        StateVector start = StateVector::Zero();
        start(2) = 1.0;
        const auto rabi = propagate(start, [&](double) { return coupling; }, 1.0 / (50.0 * omega), 1e-6, 0.0,
                                    times.back(), times);
        double rabi_error = 0.0;
        for (std::size_t i = 0; i < rabi.size(); ++i) {
            const double expected = std::pow(std::sin(0.5 * omega * rabi.times[i]), 2);
            rabi_error = std::max(rabi_error, std::abs(std::norm(rabi.states[i](3)) - expected));
        }

        double nullity = 0.0;
        for (double center : {-0.5 * sched.big_t, 0.5 * sched.big_t}) {
            for (double t : uniform_grid(center - 4.0 * sched.tau, center + 4.0 * sched.tau, 4001)) {
                const auto rf = rabi_frequencies(t, sched);
                const double scale = std::max({std::abs(rf.omega1), std::abs(rf.omega2), std::abs(rf.omega3)});
                const double residual = (hamiltonian_at(t, sched) * dark_state_at(t, sched)).norm();
                nullity = std::max(nullity, residual / scale);
            }
        }
        report(9, "numerical accuracy",
               drift < kNormDrift && halving < kStepHalving && rabi_error < kRabiOracle && nullity < kDarkNullity,
               describe({{"norm_drift", drift}, {"step_halving", halving}, {"rabi_error", rabi_error},
                         {"dark_nullity_rel", nullity}}));
    }

    void adiabatic_convergence(const QubitState &q) {
        const std::vector<double> omegas{2.5, 5.0, 10.0, 20.0, 40.0};
        const auto result = sweep(reference_schedule(std::numbers::pi), q, SweepAxis::Omega0, omegas, cfg_);
        bool monotone = result.all_succeeded();
        std::ostringstream detail;
        detail.precision(4);
        detail << "infidelity:";
        for (std::size_t i = 0; i < omegas.size(); ++i) {
            const double infidelity = 1.0 - result.fidelities[i];
            detail << ' ' << omegas[i] << "->" << infidelity;
            if (i > 0) {
                const double previous = std::max(1.0 - result.fidelities[i - 1], kMonotoneFloor);
                if (std::max(infidelity, kMonotoneFloor) > previous + kMonotoneFloor) monotone = false;
            }
        }
        report(10, "adiabatic convergence in omega0", monotone, detail.str());
    }
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options) {
    return Runner(options).run();
}

std::string format_acceptance_line(const CriterionResult &result) {
    return std::string(result.passed ? "[PASS] " : "[FAIL] ") + std::to_string(result.id) + " " + result.name + ": " +
           result.detail;
}

}  // namespace stirap
