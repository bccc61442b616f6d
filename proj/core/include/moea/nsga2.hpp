#ifndef MOEA_NSGA2_HPP
#define MOEA_NSGA2_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "moea/rng.hpp"
#include "moea/types.hpp"

namespace moea {

/// Population partitioned into non-dominated fronts; front 0 is the
/// non-dominated set. ranks[i] is the front index of member i.
struct FrontPartition {
    std::vector<std::vector<std::size_t>> fronts;
    std::vector<int> ranks;
};

/// Deb's fast non-dominated sort over raw objective vectors.
FrontPartition fast_nondominated_sort(const std::vector<ObjectiveVector>& objectives);

/// Same, additionally writing each member's rank field.
FrontPartition fast_nondominated_sort(Population& pop);

/// Per-front crowding distances, normalized per objective by the front's
/// range. Boundary individuals get the infinity sentinel; identical
/// objective vectors share one value, so the output is permutation
/// invariant.
std::vector<double> crowding_distance_assignment(const std::vector<ObjectiveVector>& front);

/// Assign crowding to every member, front by front.
void assign_crowding(Population& pop, const FrontPartition& partition);

/// Strict "a is better": lower rank, then larger crowding.
bool crowded_before(const Individual& a, const Individual& b);

/// Tournament winner; ties (equal rank and crowding) go to a.
const Individual& crowded_compare(const Individual& a, const Individual& b);

/// Draw two uniform indices and return the crowded_compare winner.
const Individual& binary_tournament(const Population& pop, Rng& rng);

struct VariationParams {
    double p_crossover = 0.9;
    double p_mutation = 0.1;  // per-individual gate; per-gene rate is 1/N inside
    double eta_c = 20.0;
    double eta_m = 20.0;
};

/// Simulated binary crossover, children clamped to bounds.
std::pair<DecisionVector, DecisionVector> sbx_crossover(const DecisionVector& p1,
                                                        const DecisionVector& p2,
                                                        const VariationParams& params,
                                                        const Bounds& bounds, Rng& rng);

/// Bounded polynomial mutation.
DecisionVector polynomial_mutation(const DecisionVector& x, const VariationParams& params,
                                   const Bounds& bounds, Rng& rng);

/// Elitist truncation: whole fronts in rank order, the split front by
/// descending crowding (stable). Survivors carry rank and crowding.
Population environmental_selection(const Population& combined, std::size_t n);

}  // namespace moea

#endif
