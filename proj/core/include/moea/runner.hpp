#ifndef MOEA_RUNNER_HPP
#define MOEA_RUNNER_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "moea/report.hpp"
#include "moea/rng.hpp"

namespace moea {

/// Per-generation hook for instrumentation and tests. `combined` is the
/// parents-plus-offspring pool before selection (null at generation 0),
/// `selected` the environmental-selection survivors, `current` the
/// population entering the next generation (post-prune for otnsga2).
struct GenerationContext {
    int generation = 0;
    const Population* combined = nullptr;
    const Population* selected = nullptr;
    const Population* current = nullptr;
};
using LoopObserver = std::function<void(const GenerationContext&)>;

/// Baseline NSGA-II with uniform random initialization.
RunReport run_nsga2(const ProblemSpec& problem, const RunConfig& config, Rng& rng,
                    const LoopObserver* observer = nullptr);

/// OTNSGA-II: orthogonal initialization plus per-generation adaptive
/// clustering pruning.
RunReport run_otnsga2(const ProblemSpec& problem, const RunConfig& config, Rng& rng,
                      const LoopObserver* observer = nullptr);

/// Dispatch on config.algorithm, seeding the stream from config.seed.
RunReport run_single(const RunConfig& config);

struct CampaignResult {
    CampaignSummary summary;
    std::vector<RunReport> reports;
    std::vector<std::string> failures;  // "<problem>/<algorithm>/seed: message"
};

/// One run per seed for a fixed problem and algorithm.
CampaignResult run_campaign(const RunConfig& base, const std::vector<std::uint64_t>& seeds);

/// Full matrix: problems x algorithms x seeds. Failures are recorded and the
/// campaign continues.
CampaignResult run_campaign_matrix(const RunConfig& base,
                                   const std::vector<std::string>& problems,
                                   const std::vector<Algorithm>& algorithms,
                                   const std::vector<std::uint64_t>& seeds);

}  // namespace moea

#endif
