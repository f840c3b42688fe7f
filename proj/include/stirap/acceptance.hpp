// End-to-end acceptance checks for the rotation protocol. Shared by the
// `verify` CLI command and the acceptance test binary.

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace stirap {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AcceptanceOptions {
    /// Fewer random samples for criteria 5 and 6.
    bool quick = false;
    unsigned seed = 20020415;
    /// Called after each criterion finishes.
    std::function<void(const CriterionResult &)> on_result;
};

namespace acceptance {

inline constexpr double kFidelityThreshold = 0.999;
inline constexpr double kMaxExcitedPopulation = 1e-3;
inline constexpr double kMidgapTolerance = 1e-3;
inline constexpr double kMidgapAlignment = 0.999;
inline constexpr double kMapTolerance = 1e-3;
inline constexpr double kNormDrift = 1e-9;
inline constexpr double kStepHalving = 1e-8;
inline constexpr double kRabiOracle = 1e-8;
inline constexpr double kDarkNullity = 1e-12;
inline constexpr double kMonotoneFloor = 1e-6;
inline constexpr double kReferenceRuntimeSeconds = 5.0;
inline constexpr double kOracleRuntimeSeconds = 180.0;
inline constexpr double kChiPerturbation = 0.1;
inline constexpr int kOracleSamples = 200;
inline constexpr int kMapSamples = 10;

}  // namespace acceptance

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options = {});

/// One line per criterion: "[PASS] 1 name: detail".
std::string format_acceptance_line(const CriterionResult &result);

}  // namespace stirap
