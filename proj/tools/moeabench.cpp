// Seeded benchmark harness: single runs, multi-seed campaigns, reference
// front emission and orthogonal-array inspection.
//
// Exit codes: 0 success, 1 run failure, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "moea/orthogonal.hpp"
#include "moea/problems.hpp"
#include "moea/report.hpp"
#include "moea/runner.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string problem;
    std::string algorithm;
    std::size_t pop = 0;
    int gens = -1;
    double delta = -1.0;
    int k_clusters = -1;
    int subspaces = -1;
    int q_levels = -1;
    std::string out_dir = "out";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "flat key = value config file");
    cmd->add_option("--problem", flags.problem, "benchmark problem name");
    cmd->add_option("--algorithm", flags.algorithm, "nsga2 | otnsga2");
    cmd->add_option("--pop", flags.pop, "population size");
    cmd->add_option("--gens", flags.gens, "generations");
    cmd->add_option("--delta", flags.delta, "adaptive pruning strength");
    cmd->add_option("--k-clusters", flags.k_clusters, "cluster count (0 = auto)");
    cmd->add_option("--subspaces", flags.subspaces, "initialization subspace count");
    cmd->add_option("--q-levels", flags.q_levels, "orthogonal-array level count (prime)");
    cmd->add_option("--out", flags.out_dir, "output directory");
}

// Config file first, then explicit flags on top.
moea::RunConfig resolve_config(const CommonFlags& flags, std::vector<std::string>& warnings) {
    moea::RunConfig config;
    if (!flags.config_path.empty()) {
        auto parsed = moea::parse_config_file(flags.config_path);
        config = parsed.config;
        warnings = parsed.warnings;
    }
    if (!flags.problem.empty()) {
        moea::apply_config_entry(config, "problem", flags.problem, warnings);
    }
    if (!flags.algorithm.empty()) {
        moea::apply_config_entry(config, "algorithm", flags.algorithm, warnings);
    }
    if (flags.pop != 0) {
        moea::apply_config_entry(config, "pop_size", std::to_string(flags.pop), warnings);
    }
    if (flags.gens >= 0) {
        moea::apply_config_entry(config, "generations", std::to_string(flags.gens), warnings);
    }
    if (flags.delta >= 0.0) {
        moea::apply_config_entry(config, "delta", std::to_string(flags.delta), warnings);
    }
    if (flags.k_clusters >= 0) {
        moea::apply_config_entry(config, "k_clusters", std::to_string(flags.k_clusters), warnings);
    }
    if (flags.subspaces >= 0) {
        moea::apply_config_entry(config, "subspaces", std::to_string(flags.subspaces), warnings);
    }
    if (flags.q_levels >= 0) {
        moea::apply_config_entry(config, "q_levels", std::to_string(flags.q_levels), warnings);
    }
    config.validate();
    return config;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) {
        std::cerr << "warning: " << w << "\n";
    }
}

std::vector<std::string> resolve_problems(const std::string& spec) {
    if (spec == "all") return moea::problem_names();
    std::vector<std::string> out;
    std::string item;
    std::istringstream ss(spec);
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<moea::Algorithm> resolve_algorithms(const std::string& spec) {
    if (spec.empty() || spec == "both" || spec == "all") {
        return {moea::Algorithm::nsga2, moea::Algorithm::otnsga2};
    }
    std::vector<moea::Algorithm> out;
    std::string item;
    std::istringstream ss(spec);
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(moea::parse_algorithm(item));
    }
    return out;
}

int cmd_run(const CommonFlags& flags, const std::vector<std::uint64_t>& seeds) {
    std::vector<std::string> warnings;
    moea::RunConfig config = resolve_config(flags, warnings);
    print_warnings(warnings);
    if (seeds.size() > 1) {
        throw CLI::ValidationError("--seeds", "run takes a single seed; use campaign");
    }
    if (!seeds.empty()) config.seed = seeds.front();

    moea::RunReport report = moea::run_single(config);
    moea::CampaignSummary summary = moea::summarize({report});
    moea::write_reports({report}, summary, flags.out_dir);
    std::printf("%s %s seed=%llu gd=%.6g sp=%.6g igd=%.6g (%.2fs)\n", config.problem.c_str(),
                moea::algorithm_name(config.algorithm).c_str(),
                static_cast<unsigned long long>(config.seed), report.final_indicators.gd,
                report.final_indicators.sp, report.final_indicators.igd,
                report.wall_clock_seconds);
    return 0;
}

int cmd_campaign(const CommonFlags& flags, const std::string& problems_spec,
                 const std::string& algorithms_spec, const std::vector<std::uint64_t>& seeds) {
    std::vector<std::string> warnings;
    moea::RunConfig base = resolve_config(flags, warnings);
    print_warnings(warnings);

    const auto problems =
        problems_spec.empty() ? std::vector<std::string>{base.problem} : resolve_problems(problems_spec);
    const auto algorithms = resolve_algorithms(algorithms_spec);
    std::vector<std::uint64_t> seed_list = seeds;
    if (seed_list.empty()) {
        for (std::uint64_t s = 1; s <= 10; ++s) seed_list.push_back(s);
    }

    const auto t0 = std::chrono::system_clock::now();
    moea::CampaignResult result = moea::run_campaign_matrix(base, problems, algorithms, seed_list);
    moea::write_reports(result.reports, result.summary, flags.out_dir);

    // timestamps live only in the sidecar log
    {
        std::ofstream log(std::filesystem::path(flags.out_dir) / "campaign.log");
        const auto t1 = std::chrono::system_clock::now();
        log << "started:  " << std::chrono::duration_cast<std::chrono::seconds>(
                                   t0.time_since_epoch())
                                   .count()
            << "\nfinished: "
            << std::chrono::duration_cast<std::chrono::seconds>(t1.time_since_epoch()).count()
            << "\nruns: " << result.reports.size() << "\nfailures: " << result.failures.size()
            << "\n";
        for (const auto& f : result.failures) log << "failed: " << f << "\n";
    }

    std::printf("campaign: %zu runs, %zu failures -> %s\n", result.reports.size(),
                result.failures.size(), flags.out_dir.c_str());
    for (const auto& f : result.failures) {
        std::fprintf(stderr, "failed: %s\n", f.c_str());
    }
    return result.failures.empty() ? 0 : 1;
}

int cmd_front(const std::string& problem, std::size_t points, const std::string& out_path) {
    const moea::FrontSample front = moea::sample_true_front(problem, points);
    std::string header = problem + " reference front (" + std::to_string(front.points.size()) +
                         " points, " +
                         (front.source == moea::FrontSample::Source::file ? "file" : "analytic") +
                         ")";
    if (out_path.empty() || out_path == "-") {
        char buf[64];
        std::printf("# %s\n", header.c_str());
        for (const auto& p : front.points) {
            for (std::size_t i = 0; i < p.size(); ++i) {
                std::snprintf(buf, sizeof(buf), "%.17g", p[i]);
                std::printf("%s%s", i ? " " : "", buf);
            }
            std::printf("\n");
        }
    } else {
        moea::write_front_file(out_path, front.points, header);
    }
    return 0;
}

int cmd_verify_oa(int q, int f) {
    const moea::OrthogonalArray oa = moea::construct_orthogonal_array(q, f);
    std::printf("L%zu(%d^%d)\n", oa.rows_m, oa.levels_q, oa.factors_f);
    for (std::size_t i = 0; i < oa.rows_m; ++i) {
        for (int j = 0; j < oa.factors_f; ++j) {
            std::printf("%s%d", j ? " " : "", oa.at(i, j));
        }
        std::printf("\n");
    }
    moea::verify_orthogonal_array(oa);
    std::printf("balance: OK (levels %zu/column, pairs %zu/column pair)\n",
                oa.rows_m / static_cast<std::size_t>(oa.levels_q),
                oa.rows_m / static_cast<std::size_t>(oa.levels_q * oa.levels_q));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-objective evolutionary benchmark harness (NSGA-II / OTNSGA-II)"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    std::vector<std::uint64_t> run_seeds;
    CLI::App* run = app.add_subcommand("run", "single seeded run");
    add_common(run, run_flags);
    run->add_option("--seeds", run_seeds, "seed (single value)")->delimiter(',');

    CommonFlags camp_flags;
    std::vector<std::uint64_t> camp_seeds;
    std::string camp_problems;
    std::string camp_algorithms;
    CLI::App* campaign = app.add_subcommand("campaign", "multi-seed / multi-problem campaign");
    add_common(campaign, camp_flags);
    campaign->add_option("--seeds", camp_seeds, "seed list (default 1..10)")->delimiter(',');
    campaign->add_option("--problems", camp_problems,
                         "comma-separated problem list, or 'all' (default: --problem)");
    campaign->add_option("--algorithms", camp_algorithms,
                         "nsga2, otnsga2 or both (default both)");

    std::string front_problem;
    std::size_t front_points = 1000;
    std::string front_out;
    CLI::App* front = app.add_subcommand("front", "emit a reference front");
    front->add_option("--problem", front_problem, "problem name")->required();
    front->add_option("--points", front_points, "number of points (default 1000)");
    front->add_option("--out", front_out, "output file (default stdout)");

    int oa_q = 3;
    int oa_f = 4;
    CLI::App* verify = app.add_subcommand("verify-oa", "print and check an orthogonal array");
    verify->add_option("--q-levels", oa_q, "level count (prime)");
    verify->add_option("--factors", oa_f, "factor count");

    try {
        app.parse(argc, argv);
        if (run->parsed()) return cmd_run(run_flags, run_seeds);
        if (campaign->parsed()) {
            return cmd_campaign(camp_flags, camp_problems, camp_algorithms, camp_seeds);
        }
        if (front->parsed()) return cmd_front(front_problem, front_points, front_out);
        if (verify->parsed()) return cmd_verify_oa(oa_q, oa_f);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
