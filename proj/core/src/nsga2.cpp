#include "moea/nsga2.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace moea {

FrontPartition fast_nondominated_sort(const std::vector<ObjectiveVector>& objectives) {
    const std::size_t n = objectives.size();
    FrontPartition out;
    out.ranks.assign(n, kRankUnset);
    if (n == 0) return out;

    std::vector<std::vector<std::size_t>> dominated(n);  // S_p
    std::vector<int> domination_count(n, 0);             // n_p

    std::vector<std::size_t> current;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            switch (dominates(objectives[p], objectives[q])) {
                case Dominance::FirstDominates:
                    dominated[p].push_back(q);
                    ++domination_count[q];
                    break;
                case Dominance::SecondDominates:
                    dominated[q].push_back(p);
                    ++domination_count[p];
                    break;
                default:
                    break;
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (domination_count[p] == 0) {
            out.ranks[p] = 0;
            current.push_back(p);
        }
    }

    int rank = 0;
    while (!current.empty()) {
        out.fronts.push_back(current);
        std::vector<std::size_t> next;
        for (std::size_t p : current) {
            for (std::size_t q : dominated[p]) {
                if (--domination_count[q] == 0) {
                    out.ranks[q] = rank + 1;
                    next.push_back(q);
                }
            }
        }
        std::sort(next.begin(), next.end());
        current = std::move(next);
        ++rank;
    }
    return out;
}

FrontPartition fast_nondominated_sort(Population& pop) {
    FrontPartition part = fast_nondominated_sort(pop.objectives());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        pop.members[i].rank = part.ranks[i];
    }
    return part;
}

std::vector<double> crowding_distance_assignment(const std::vector<ObjectiveVector>& front) {
    if (front.empty()) {
        throw std::invalid_argument("crowding_distance_assignment: empty front");
    }
    // Distances are computed over the distinct vectors. Each duplicate
    // group's first member carries the position's value; the remaining
    // copies sit at zero distance from a neighbour and get 0, which keeps
    // exact clones from flooding truncation.
    std::map<ObjectiveVector, std::size_t> unique_index;
    std::vector<ObjectiveVector> distinct;
    for (const auto& v : front) {
        if (unique_index.emplace(v, distinct.size()).second) {
            distinct.push_back(v);
        }
    }

    const std::size_t u = distinct.size();
    const std::size_t n_obj = front.front().size();
    std::vector<double> dist(u, 0.0);
    if (u <= 2) {
        std::fill(dist.begin(), dist.end(), kCrowdingInfinity);
    } else {
        std::vector<std::size_t> order(u);
        for (std::size_t m = 0; m < n_obj; ++m) {
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
                if (distinct[i][m] != distinct[j][m]) return distinct[i][m] < distinct[j][m];
                return distinct[i] < distinct[j];
            });
            const double range = distinct[order[u - 1]][m] - distinct[order[0]][m];
            dist[order[0]] = kCrowdingInfinity;
            dist[order[u - 1]] = kCrowdingInfinity;
            if (range <= 0.0) continue;  // degenerate objective contributes 0
            for (std::size_t i = 1; i + 1 < u; ++i) {
                if (dist[order[i]] == kCrowdingInfinity) continue;
                dist[order[i]] += (distinct[order[i + 1]][m] - distinct[order[i - 1]][m]) / range;
            }
        }
    }

    std::vector<double> out(front.size());
    std::vector<bool> seen(u, false);
    for (std::size_t i = 0; i < front.size(); ++i) {
        const std::size_t slot = unique_index.at(front[i]);
        out[i] = seen[slot] ? 0.0 : dist[slot];
        seen[slot] = true;
    }
    return out;
}

void assign_crowding(Population& pop, const FrontPartition& partition) {
    for (const auto& front : partition.fronts) {
        std::vector<ObjectiveVector> objs;
        objs.reserve(front.size());
        for (std::size_t idx : front) objs.push_back(pop.members[idx].objectives);
        const std::vector<double> d = crowding_distance_assignment(objs);
        for (std::size_t i = 0; i < front.size(); ++i) {
            pop.members[front[i]].crowding = d[i];
        }
    }
}

bool crowded_before(const Individual& a, const Individual& b) {
    if (!a.has_rank() || !b.has_rank() || !a.has_crowding() || !b.has_crowding()) {
        throw std::invalid_argument("crowded comparison requires rank and crowding");
    }
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.crowding > b.crowding;
}

const Individual& crowded_compare(const Individual& a, const Individual& b) {
    return crowded_before(b, a) ? b : a;
}

const Individual& binary_tournament(const Population& pop, Rng& rng) {
    if (pop.empty()) {
        throw std::invalid_argument("binary_tournament: empty population");
    }
    const Individual& a = pop.members[rng.index(pop.size())];
    const Individual& b = pop.members[rng.index(pop.size())];
    return crowded_compare(a, b);
}

std::pair<DecisionVector, DecisionVector> sbx_crossover(const DecisionVector& p1,
                                                        const DecisionVector& p2,
                                                        const VariationParams& params,
                                                        const Bounds& bounds, Rng& rng) {
    if (p1.size() != p2.size() || p1.size() != bounds.size()) {
        throw std::invalid_argument("sbx_crossover: length mismatch");
    }
    DecisionVector c1 = p1;
    DecisionVector c2 = p2;
    if (rng.uniform() > params.p_crossover) {
        return {std::move(c1), std::move(c2)};
    }
    const double exponent = 1.0 / (params.eta_c + 1.0);
    for (std::size_t i = 0; i < p1.size(); ++i) {
        if (rng.uniform() > 0.5) continue;
        if (std::abs(p1[i] - p2[i]) <= 1e-14) continue;
        const double u = rng.uniform();
        const double beta = (u <= 0.5) ? std::pow(2.0 * u, exponent)
                                       : std::pow(1.0 / (2.0 * (1.0 - u)), exponent);
        double v1 = 0.5 * ((1.0 + beta) * p1[i] + (1.0 - beta) * p2[i]);
        double v2 = 0.5 * ((1.0 - beta) * p1[i] + (1.0 + beta) * p2[i]);
        if (rng.uniform() <= 0.5) std::swap(v1, v2);
        c1[i] = std::clamp(v1, bounds.lower[i], bounds.upper[i]);
        c2[i] = std::clamp(v2, bounds.lower[i], bounds.upper[i]);
    }
    return {std::move(c1), std::move(c2)};
}

DecisionVector polynomial_mutation(const DecisionVector& x, const VariationParams& params,
                                   const Bounds& bounds, Rng& rng) {
    if (x.size() != bounds.size()) {
        throw std::invalid_argument("polynomial_mutation: length mismatch");
    }
    DecisionVector y = x;
    if (rng.uniform() > params.p_mutation) return y;
    const double gene_rate = 1.0 / static_cast<double>(x.size());
    const double mut_pow = 1.0 / (params.eta_m + 1.0);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (rng.uniform() > gene_rate) continue;
        const double lo = bounds.lower[i];
        const double hi = bounds.upper[i];
        const double span = hi - lo;
        const double u = rng.uniform();
        double deltaq;
        if (u < 0.5) {
            const double xy = 1.0 - (y[i] - lo) / span;
            const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, params.eta_m + 1.0);
            deltaq = std::pow(val, mut_pow) - 1.0;
        } else {
            const double xy = 1.0 - (hi - y[i]) / span;
            const double val =
                2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, params.eta_m + 1.0);
            deltaq = 1.0 - std::pow(val, mut_pow);
        }
        y[i] = std::clamp(y[i] + deltaq * span, lo, hi);
    }
    return y;
}

Population environmental_selection(const Population& combined, std::size_t n) {
    if (combined.size() < n) {
        throw std::invalid_argument("environmental_selection: population smaller than n");
    }
    Population work = combined;
    const FrontPartition part = fast_nondominated_sort(work);
    assign_crowding(work, part);

    Population out;
    out.generation = combined.generation;
    out.members.reserve(n);
    for (const auto& front : part.fronts) {
        if (out.size() + front.size() <= n) {
            for (std::size_t idx : front) out.members.push_back(work.members[idx]);
            if (out.size() == n) break;
        } else {
            std::vector<std::size_t> order = front;
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return work.members[a].crowding > work.members[b].crowding;
            });
            for (std::size_t idx : order) {
                if (out.size() == n) break;
                out.members.push_back(work.members[idx]);
            }
            break;
        }
    }
    return out;
}

}  // namespace moea
