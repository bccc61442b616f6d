#ifndef MOEA_METRICS_HPP
#define MOEA_METRICS_HPP

#include <string>
#include <vector>

#include "moea/problems.hpp"
#include "moea/types.hpp"

namespace moea {

struct IndicatorReport {
    double gd = 0.0;
    double sp = 0.0;
    double igd = 0.0;
    std::size_t n_points = 0;
    std::string reference_id;
};

/// Generational distance: (1/n) * sqrt(sum of squared nearest-neighbour
/// Euclidean distances from each member of A to the reference front).
double gd(const std::vector<ObjectiveVector>& a, const FrontSample& reference);

/// Spacing: standard deviation of per-point nearest-neighbour L1 gaps
/// within A. Requires |A| >= 2.
double sp(const std::vector<ObjectiveVector>& a);

/// Inverted generational distance: mean over reference points of the
/// minimum Euclidean distance to A, normalized per objective by the
/// reference front's range (degenerate ranges contribute 0).
double igd(const std::vector<ObjectiveVector>& a, const FrontSample& reference);

IndicatorReport compute_indicators(const std::vector<ObjectiveVector>& a,
                                   const FrontSample& reference,
                                   const std::string& reference_id);

}  // namespace moea

#endif
