#include "moea/runner.hpp"

#include <chrono>
#include <stdexcept>

#include "moea/nsga2.hpp"
#include "moea/orthogonal.hpp"
#include "moea/problems.hpp"
#include "moea/pruning.hpp"

namespace moea {
namespace {

Population uniform_random_population(const ProblemSpec& problem, std::size_t n, Rng& rng) {
    Population pop;
    pop.members.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Individual ind;
        ind.decision.resize(problem.n_vars);
        for (std::size_t d = 0; d < problem.n_vars; ++d) {
            ind.decision[d] = rng.uniform(problem.bounds.lower[d], problem.bounds.upper[d]);
        }
        ind.objectives = evaluate(problem, ind.decision);
        pop.members.push_back(std::move(ind));
    }
    return pop;
}

Population make_offspring(const Population& parents, std::size_t count,
                          const VariationParams& vp, const ProblemSpec& problem, Rng& rng) {
    Population off;
    off.members.reserve(count);
    while (off.size() < count) {
        const Individual& a = binary_tournament(parents, rng);
        const Individual& b = binary_tournament(parents, rng);
        auto [c1, c2] = sbx_crossover(a.decision, b.decision, vp, problem.bounds, rng);
        c1 = polynomial_mutation(c1, vp, problem.bounds, rng);
        c2 = polynomial_mutation(c2, vp, problem.bounds, rng);
        Individual i1;
        i1.decision = std::move(c1);
        i1.objectives = evaluate(problem, i1.decision);
        off.members.push_back(std::move(i1));
        if (off.size() < count) {
            Individual i2;
            i2.decision = std::move(c2);
            i2.objectives = evaluate(problem, i2.decision);
            off.members.push_back(std::move(i2));
        }
    }
    return off;
}

struct LoopSetup {
    FrontSample reference;
    std::string reference_id;
};

LoopSetup prepare(const ProblemSpec& problem, const RunConfig& config) {
    config.validate();
    if (config.problem != problem.name) {
        throw std::invalid_argument("run: config.problem does not match the problem");
    }
    LoopSetup s;
    s.reference = sample_true_front(problem.name, config.front_points);
    s.reference_id =
        problem.name + ":" + (s.reference.source == FrontSample::Source::file ? "file" : "analytic") +
        ":" + std::to_string(s.reference.points.size());
    return s;
}

TracePoint measure(const Population& pop, const FrontSample& reference) {
    const auto objs = pop.objectives();
    return {gd(objs, reference), sp(objs), igd(objs, reference)};
}

RunReport finish(RunReport report, const Population& pop, const LoopSetup& setup,
                 std::chrono::steady_clock::time_point t0) {
    report.final_population = pop;
    report.final_indicators =
        compute_indicators(pop.objectives(), setup.reference, setup.reference_id);
    report.crossover_operator = "sbx";
    report.mutation_operator = "polynomial";
    report.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

int auto_k(const PruneParams& prune, std::size_t n) {
    if (prune.k_clusters > 0) return prune.k_clusters;
    return std::max<int>(2, static_cast<int>((n + 19) / 20));
}

}  // namespace

RunReport run_nsga2(const ProblemSpec& problem, const RunConfig& config, Rng& rng,
                    const LoopObserver* observer) {
    const auto t0 = std::chrono::steady_clock::now();
    const LoopSetup setup = prepare(problem, config);

    RunReport report;
    report.config = config;

    Population pop = uniform_random_population(problem, config.pop_size, rng);
    report.trace.push_back(measure(pop, setup.reference));
    if (observer) {
        GenerationContext ctx;
        ctx.current = &pop;
        (*observer)(ctx);
    }

    for (int gen = 1; gen <= config.generations; ++gen) {
        const FrontPartition part = fast_nondominated_sort(pop);
        assign_crowding(pop, part);
        Population offspring = make_offspring(pop, config.pop_size, config.variation, problem, rng);
        Population combined = pop;
        combined.members.insert(combined.members.end(), offspring.members.begin(),
                                offspring.members.end());
        pop = environmental_selection(combined, config.pop_size);
        pop.generation = gen;
        report.trace.push_back(measure(pop, setup.reference));
        if (observer) {
            GenerationContext ctx;
            ctx.generation = gen;
            ctx.combined = &combined;
            ctx.selected = &pop;
            ctx.current = &pop;
            (*observer)(ctx);
        }
    }
    return finish(std::move(report), pop, setup, t0);
}

RunReport run_otnsga2(const ProblemSpec& problem, const RunConfig& config, Rng& rng,
                      const LoopObserver* observer) {
    const auto t0 = std::chrono::steady_clock::now();
    const LoopSetup setup = prepare(problem, config);

    RunReport report;
    report.config = config;
    report.resolved_k_clusters = auto_k(config.prune, config.pop_size);

    InitStats init_stats;
    Population pop = orthogonal_initialize(problem, config.pop_size, config.init, rng, &init_stats);
    report.init_pool_size = init_stats.pool_size;
    report.init_random_topup = init_stats.random_topup;
    report.trace.push_back(measure(pop, setup.reference));
    if (observer) {
        GenerationContext ctx;
        ctx.current = &pop;
        (*observer)(ctx);
    }

    for (int gen = 1; gen <= config.generations; ++gen) {
        const FrontPartition part = fast_nondominated_sort(pop);
        assign_crowding(pop, part);
        Population offspring = make_offspring(pop, config.pop_size, config.variation, problem, rng);
        Population combined = pop;
        combined.members.insert(combined.members.end(), offspring.members.begin(),
                                offspring.members.end());
        Population selected = environmental_selection(combined, config.pop_size);
        PruneStats pstats;
        pop = prune_population(selected, config.prune, rng, &pstats);
        if (pstats.k_reduced) ++report.kmeans_k_reductions;
        pop.generation = gen;
        report.trace.push_back(measure(pop, setup.reference));
        if (observer) {
            GenerationContext ctx;
            ctx.generation = gen;
            ctx.combined = &combined;
            ctx.selected = &selected;
            ctx.current = &pop;
            (*observer)(ctx);
        }
    }
    return finish(std::move(report), pop, setup, t0);
}

RunReport run_single(const RunConfig& config) {
    config.validate();
    const ProblemSpec problem = make_problem(config.problem);
    Rng rng(config.seed);
    return config.algorithm == Algorithm::nsga2 ? run_nsga2(problem, config, rng)
                                                : run_otnsga2(problem, config, rng);
}

CampaignResult run_campaign(const RunConfig& base, const std::vector<std::uint64_t>& seeds) {
    return run_campaign_matrix(base, {base.problem}, {base.algorithm}, seeds);
}

CampaignResult run_campaign_matrix(const RunConfig& base,
                                   const std::vector<std::string>& problems,
                                   const std::vector<Algorithm>& algorithms,
                                   const std::vector<std::uint64_t>& seeds) {
    if (seeds.empty()) {
        throw std::invalid_argument("run_campaign: need at least one seed");
    }
    CampaignResult result;
    for (const auto& problem : problems) {
        for (Algorithm algorithm : algorithms) {
            for (std::uint64_t seed : seeds) {
                RunConfig config = base;
                config.problem = problem;
                config.algorithm = algorithm;
                config.seed = seed;
                try {
                    result.reports.push_back(run_single(config));
                } catch (const std::exception& e) {
                    result.failures.push_back(problem + "/" + algorithm_name(algorithm) + "/" +
                                              std::to_string(seed) + ": " + e.what());
                }
            }
        }
    }
    result.summary = summarize(result.reports);
    return result;
}

}  // namespace moea
