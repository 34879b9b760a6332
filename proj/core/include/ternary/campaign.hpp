#ifndef TERNARY_CAMPAIGN_HPP
#define TERNARY_CAMPAIGN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ternary/report.hpp"

namespace ternary {

/// checks is a subset of known_checks(): theorem, steps, corollaries,
/// counterexample. "steps" only has an effect together with "theorem".
struct CampaignConfig {
    NestSpec nest{std::vector<std::size_t>{1, 2}};
    Field field = Field::rational;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::vector<std::string> checks;
    std::size_t threads = 0;  // 0: one per hardware thread
    std::size_t witness_budget = 256;
    std::size_t locality_samples = 8;
};

const std::vector<std::string>& known_checks();
/// Throws InputError on trials == 0, an empty or unknown check list.
void validate(const CampaignConfig& config);
Json to_json(const CampaignConfig& config);

/// body is a pure function of the config; timing is kept apart so that
/// identical configs serialize to identical bodies.
struct Report {
    Json body;
    Json timing;
    std::vector<Json> violations;

    bool ok() const { return violations.empty(); }
    /// body with "timing" and "violations" appended.
    Json full() const;
};

struct TrialContext {
    const NestAlgebra& nest;
    std::vector<Vec> idempotents;
    Field field;
    std::size_t witness_budget;
    std::size_t locality_samples;

    TrialContext(const NestAlgebra& n, Field f, std::size_t budget, std::size_t samples);
};

/// One seeded theorem round trip. (R0, S0, T0) are drawn with
/// SplitMix64(seed) in that order, d coordinates each; the malformed pair
/// uses derive_seed(seed, 1) and its witness search derive_seed(seed, 2).
/// Even indices draw fully random maps, odd ones bump one entry of tau.
struct TheoremTrial {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    ImplementingTriple drawn;
    std::optional<ImplementingTriple> extracted;
    bool feasible = false;
    bool gamma_consistent = false;
    bool ternary_verified = false;
    bool reproduced = false;
    bool sum_identity = false;
    bool unique = false;
    bool steps_passed = false;
    std::optional<StepReport> steps;
    std::string violation;

    std::string malformed_kind;
    bool malformed_rst_feasible = false;
    ZReport malformed;

    bool passed() const {
        return feasible && gamma_consistent && ternary_verified && reproduced && sum_identity && unique && steps_passed;
    }
};

TheoremTrial theorem_trial(const TrialContext& ctx, std::uint64_t seed, std::size_t index, bool with_steps);
Json to_json(const TheoremTrial& trial);

/// One constructed positive and one seeded negative per checker. Negatives
/// are confirmed by an oracle that does not share code with the checker
/// before they are handed to it.
struct CorollaryOutcome {
    std::string corollary;
    bool positive = false;
    bool negative_drawn = true;  // false if no confirmed negative within the attempt budget
    std::string verdict;
    bool misclassified = false;
    Json detail;
};

const std::vector<std::string>& corollary_checkers();
std::vector<CorollaryOutcome> corollary_trial(const TrialContext& ctx, std::uint64_t seed);

Report run_campaign(const CampaignConfig& config, const std::string& command);
Json counterexample_bundle();

/// (Z) decision plus, when feasible, gamma and the implementing triple.
Json solve_report(const NestAlgebra& nest, const OpMap& delta, const OpMap& tau, std::size_t budget,
                  std::uint64_t seed, Field field);

}  // namespace ternary

#endif  // TERNARY_CAMPAIGN_HPP
