#include "stirap/output.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include <json.hpp>

namespace stirap {

std::string format_double(double value) {
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) return "nan";
    return {buf.data(), end};
}

void write_trajectory_csv(std::ostream &out, const Trajectory &traj, int stride) {
    if (stride < 1) stride = 1;
    out << "t,P1,P2,P3,P4,absOmega1,absOmega2,absOmega3\n";
    const auto rows = populations(traj);
    const std::size_t n = traj.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (i % static_cast<std::size_t>(stride) != 0 && i + 1 != n) continue;
        out << format_double(traj.times[i]);
        for (double p : rows[i]) out << ',' << format_double(p);
        for (double omega : traj.rabi[i]) out << ',' << format_double(omega);
        out << '\n';
    }
}

void write_sweep_csv(std::ostream &out, const SweepResult &result) {
    out << "param_value,fidelity,max_P4,leakage\n";
    for (std::size_t i = 0; i < result.size(); ++i) {
        out << format_double(result.values[i]) << ',' << format_double(result.fidelities[i]) << ','
            << format_double(result.max_p4[i]) << ',' << format_double(result.leakage[i]) << '\n';
    }
}

namespace {

// JSON has no NaN/Inf; those become null.
nlohmann::json number(double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

std::string format_summary_json(const SimulationSummary &s) {
    nlohmann::ordered_json j;
    const auto &r = s.report;
    j["fidelity"] = number(r.fidelity);
    j["overlap_re"] = number(r.overlap.real());
    j["overlap_im"] = number(r.overlap.imag());
    j["overlap_phase"] = number(std::arg(r.overlap));
    j["max_P4"] = number(r.max_excited_population);
    j["leakage"] = number(r.final_leakage);
    j["norm_drift"] = number(r.final_norm_drift);
    j["convergence_certificate"] = number(s.convergence);
    j["midgap_P3"] = number(r.midgap_p3);
    j["midgap_P3_expected"] = number(r.expected_midgap_p3);
    j["midgap_P4"] = number(r.midgap_p4);
    j["midgap_nc_alignment"] = number(r.midgap_nc_alignment);
    j["realized_phase_shift"] = number(r.realized_phase_shift);
    j["global_phase_predicted"] = number(s.global_phase);
    j["pulse_area"] = number(s.adiabaticity.pulse_area);
    j["min_gap_to_rate_first"] = number(s.adiabaticity.min_gap_to_rate_first);
    j["min_gap_to_rate_second"] = number(s.adiabaticity.min_gap_to_rate_second);
    j["adiabatic"] = s.adiabaticity.adiabatic;
    j["adiabaticity_warning"] = r.adiabaticity_warning;
    const auto put_qubit = [&](const std::string &prefix, const QubitState &q) {
        j[prefix + "_alpha_re"] = number(q.alpha().real());
        j[prefix + "_alpha_im"] = number(q.alpha().imag());
        j[prefix + "_beta_re"] = number(q.beta().real());
        j[prefix + "_beta_im"] = number(q.beta().imag());
    };
    put_qubit("initial", s.initial);
    put_qubit("predicted", s.predicted);
    put_qubit("final", s.final_qubit);
    return j.dump(2) + "\n";
}

}  // namespace stirap
