#include "moea/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace moea {
namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& c) {
    return {
        {"problem", c.problem},
        {"algorithm", algorithm_name(c.algorithm)},
        {"pop_size", std::to_string(c.pop_size)},
        {"generations", std::to_string(c.generations)},
        {"p_crossover", fmt(c.variation.p_crossover)},
        {"p_mutation", fmt(c.variation.p_mutation)},
        {"eta_c", fmt(c.variation.eta_c)},
        {"eta_m", fmt(c.variation.eta_m)},
        {"delta", fmt(c.prune.delta)},
        {"k_clusters", std::to_string(c.prune.k_clusters)},
        {"kmeans_max_iter", std::to_string(c.prune.kmeans_max_iter)},
        {"kmeans_tol", fmt(c.prune.kmeans_tol)},
        {"subspaces", std::to_string(c.init.subspaces)},
        {"q_levels", std::to_string(c.init.q_levels)},
        {"theta0", fmt(c.init.theta0)},
        {"seed", std::to_string(c.seed)},
        {"front_points", std::to_string(c.front_points)},
    };
}

void append_config_comments(std::string& out, const RunConfig& c) {
    for (const auto& [k, v] : config_echo(c)) {
        out += "# " + k + " = " + v + "\n";
    }
}

std::string run_stem(const RunReport& r) {
    return r.config.problem + "_" + algorithm_name(r.config.algorithm) + "_seed" +
           std::to_string(r.config.seed);
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << content;
}

struct Stat {
    double mean = 0.0;
    double stdev = 0.0;
    double best = 0.0;
};

Stat stat_of(const std::vector<double>& values) {
    Stat s;
    if (values.empty()) return s;
    for (double v : values) s.mean += v;
    s.mean /= static_cast<double>(values.size());
    if (values.size() > 1) {
        double var = 0.0;
        for (double v : values) var += (v - s.mean) * (v - s.mean);
        s.stdev = std::sqrt(var / static_cast<double>(values.size() - 1));
    }
    s.best = *std::min_element(values.begin(), values.end());
    return s;
}

}  // namespace

CampaignSummary summarize(const std::vector<RunReport>& reports) {
    std::map<std::pair<std::string, int>, std::vector<const RunReport*>> groups;
    for (const auto& r : reports) {
        groups[{r.config.problem, static_cast<int>(r.config.algorithm)}].push_back(&r);
    }
    CampaignSummary summary;
    for (const auto& [key, group] : groups) {
        CampaignRow row;
        row.problem = key.first;
        row.algorithm = static_cast<Algorithm>(key.second);
        std::vector<double> gds, sps, igds;
        for (const RunReport* r : group) {
            row.seeds.push_back(r->config.seed);
            gds.push_back(r->final_indicators.gd);
            sps.push_back(r->final_indicators.sp);
            igds.push_back(r->final_indicators.igd);
        }
        const Stat g = stat_of(gds), s = stat_of(sps), i = stat_of(igds);
        row.gd_mean = g.mean;
        row.gd_std = g.stdev;
        row.gd_best = g.best;
        row.sp_mean = s.mean;
        row.sp_std = s.stdev;
        row.sp_best = s.best;
        row.igd_mean = i.mean;
        row.igd_std = i.stdev;
        row.igd_best = i.best;
        summary.rows.push_back(std::move(row));
    }
    return summary;
}

std::string trace_csv(const RunReport& report) {
    std::string out;
    append_config_comments(out, report.config);
    out += "generation,gd,sp,igd\n";
    for (std::size_t g = 0; g < report.trace.size(); ++g) {
        out += std::to_string(g) + "," + fmt(report.trace[g].gd) + "," + fmt(report.trace[g].sp) +
               "," + fmt(report.trace[g].igd) + "\n";
    }
    return out;
}

std::string final_population_csv(const RunReport& report) {
    std::string out;
    append_config_comments(out, report.config);
    const std::size_t n_obj =
        report.final_population.empty() ? 0 : report.final_population.members.front().objectives.size();
    for (std::size_t m = 0; m < n_obj; ++m) {
        out += (m ? ",f" : "f") + std::to_string(m + 1);
    }
    out += "\n";
    for (const auto& ind : report.final_population.members) {
        for (std::size_t m = 0; m < ind.objectives.size(); ++m) {
            if (m) out += ",";
            out += fmt(ind.objectives[m]);
        }
        out += "\n";
    }
    return out;
}

std::string summary_csv(const CampaignSummary& summary) {
    std::string out =
        "problem,algorithm,n_seeds,seeds,gd_mean,gd_std,gd_best,sp_mean,sp_std,sp_best,"
        "igd_mean,igd_std,igd_best\n";
    for (const auto& row : summary.rows) {
        std::string seeds;
        for (std::size_t i = 0; i < row.seeds.size(); ++i) {
            seeds += (i ? ";" : "") + std::to_string(row.seeds[i]);
        }
        out += row.problem + "," + algorithm_name(row.algorithm) + "," +
               std::to_string(row.seeds.size()) + "," + seeds + "," + fmt(row.gd_mean) + "," +
               fmt(row.gd_std) + "," + fmt(row.gd_best) + "," + fmt(row.sp_mean) + "," +
               fmt(row.sp_std) + "," + fmt(row.sp_best) + "," + fmt(row.igd_mean) + "," +
               fmt(row.igd_std) + "," + fmt(row.igd_best) + "\n";
    }
    return out;
}

std::string report_json(const RunReport& report) {
    nlohmann::json j;
    for (const auto& [k, v] : config_echo(report.config)) {
        j["config"][k] = v;
    }
    j["resolved"]["crossover_operator"] = report.crossover_operator;
    j["resolved"]["mutation_operator"] = report.mutation_operator;
    j["resolved"]["k_clusters"] = report.resolved_k_clusters;
    j["resolved"]["init_pool_size"] = report.init_pool_size;
    j["resolved"]["init_random_topup"] = report.init_random_topup;
    j["resolved"]["kmeans_k_reductions"] = report.kmeans_k_reductions;

    auto& trace = j["trace"] = nlohmann::json::array();
    for (std::size_t g = 0; g < report.trace.size(); ++g) {
        trace.push_back({{"generation", g},
                         {"gd", report.trace[g].gd},
                         {"sp", report.trace[g].sp},
                         {"igd", report.trace[g].igd}});
    }

    auto& pop = j["final_population"] = nlohmann::json::array();
    for (const auto& ind : report.final_population.members) {
        pop.push_back({{"decision", ind.decision}, {"objectives", ind.objectives}});
    }

    j["final_indicators"] = {{"gd", report.final_indicators.gd},
                             {"sp", report.final_indicators.sp},
                             {"igd", report.final_indicators.igd},
                             {"n_points", report.final_indicators.n_points},
                             {"reference", report.final_indicators.reference_id}};
    j["wall_clock_seconds"] = report.wall_clock_seconds;
    return j.dump(2) + "\n";
}

CampaignSummary read_summary_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open summary csv: " + path.string());
    }
    CampaignSummary summary;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 13) {
            throw std::runtime_error("summary csv: malformed row: " + line);
        }
        CampaignRow row;
        row.problem = fields[0];
        row.algorithm = parse_algorithm(fields[1]);
        std::istringstream ss(fields[3]);
        std::string seed;
        while (std::getline(ss, seed, ';')) {
            row.seeds.push_back(static_cast<std::uint64_t>(std::stoull(seed)));
        }
        if (row.seeds.size() != std::stoull(fields[2])) {
            throw std::runtime_error("summary csv: seed count mismatch: " + line);
        }
        row.gd_mean = std::stod(fields[4]);
        row.gd_std = std::stod(fields[5]);
        row.gd_best = std::stod(fields[6]);
        row.sp_mean = std::stod(fields[7]);
        row.sp_std = std::stod(fields[8]);
        row.sp_best = std::stod(fields[9]);
        row.igd_mean = std::stod(fields[10]);
        row.igd_std = std::stod(fields[11]);
        row.igd_best = std::stod(fields[12]);
        summary.rows.push_back(std::move(row));
    }
    return summary;
}

void write_reports(const std::vector<RunReport>& reports, const CampaignSummary& summary,
                   const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    for (const auto& report : reports) {
        const std::string stem = run_stem(report);
        write_text_file(out_dir / ("trace_" + stem + ".csv"), trace_csv(report));
        write_text_file(out_dir / ("final_" + stem + ".csv"), final_population_csv(report));
        write_text_file(out_dir / ("report_" + stem + ".json"), report_json(report));
    }
    write_text_file(out_dir / "summary.csv", summary_csv(summary));
}

}  // namespace moea
