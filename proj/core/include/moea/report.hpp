#ifndef MOEA_REPORT_HPP
#define MOEA_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "moea/config.hpp"
#include "moea/metrics.hpp"
#include "moea/types.hpp"

namespace moea {

struct TracePoint {
    double gd = 0.0;
    double sp = 0.0;
    double igd = 0.0;
};

/// Everything one seeded run produced, defaults resolved for transparency.
struct RunReport {
    RunConfig config;
    std::vector<TracePoint> trace;  // generations + 1 entries, index 0 = initial population
    Population final_population;
    IndicatorReport final_indicators;
    double wall_clock_seconds = 0.0;

    std::string crossover_operator;  // "sbx"
    std::string mutation_operator;   // "polynomial"
    int resolved_k_clusters = 0;     // k used at full population size
    std::size_t init_pool_size = 0;
    std::size_t init_random_topup = 0;  // nonzero flags a short orthogonal pool
    int kmeans_k_reductions = 0;
};

struct CampaignRow {
    std::string problem;
    Algorithm algorithm = Algorithm::nsga2;
    std::vector<std::uint64_t> seeds;
    double gd_mean = 0.0, gd_std = 0.0, gd_best = 0.0;
    double sp_mean = 0.0, sp_std = 0.0, sp_best = 0.0;
    double igd_mean = 0.0, igd_std = 0.0, igd_best = 0.0;

    bool operator==(const CampaignRow&) const = default;
};

struct CampaignSummary {
    std::vector<CampaignRow> rows;

    bool operator==(const CampaignSummary&) const = default;
};

/// Exact bytes of the per-run trace CSV (columns generation,gd,sp,igd with a
/// config-echo comment header). Identical inputs give identical bytes.
std::string trace_csv(const RunReport& report);

/// Final population objectives, one row per individual.
std::string final_population_csv(const RunReport& report);

/// One row per (problem, algorithm): mean, sample std (n-1, 0 for a single
/// seed) and best of each indicator.
std::string summary_csv(const CampaignSummary& summary);

/// Full-fidelity machine-readable report (JSON).
std::string report_json(const RunReport& report);

/// Parse a summary CSV written by summary_csv back into a CampaignSummary.
CampaignSummary read_summary_csv(const std::filesystem::path& path);

/// Write per-run trace/final/report files plus summary.csv into out_dir.
/// File contents carry no timestamps; a sidecar campaign.log takes those.
void write_reports(const std::vector<RunReport>& reports, const CampaignSummary& summary,
                   const std::filesystem::path& out_dir);

/// Summary statistics over completed runs, one row per (problem, algorithm).
CampaignSummary summarize(const std::vector<RunReport>& reports);

}  // namespace moea

#endif
