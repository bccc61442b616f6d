#ifndef MOEA_TYPES_HPP
#define MOEA_TYPES_HPP

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace moea {

/// Decision-space point, length = problem dimension.
using DecisionVector = std::vector<double>;
/// Objective-space point, length = objective count. Minimization throughout.
using ObjectiveVector = std::vector<double>;

/// Outcome of a pairwise dominance comparison between objective vectors.
enum class Dominance { FirstDominates, SecondDominates, Incomparable, Equal };

/// Axis-aligned box constraints. lower[i] < upper[i] for every dimension.
struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t size() const { return lower.size(); }
    double width(std::size_t i) const { return upper[i] - lower[i]; }
    bool contains(const DecisionVector& x) const;
    void validate() const;

    static Bounds uniform(std::size_t n, double lo, double hi);
};

inline constexpr int kRankUnset = -1;
inline constexpr double kCrowdingUnset = -1.0;
/// Sentinel for boundary individuals: ordered above every finite crowding
/// value and never fed into arithmetic.
inline constexpr double kCrowdingInfinity = std::numeric_limits<double>::infinity();

struct Individual {
    DecisionVector decision;
    ObjectiveVector objectives;
    int rank = kRankUnset;
    double crowding = kCrowdingUnset;

    bool has_rank() const { return rank >= 0; }
    bool has_crowding() const { return crowding >= 0.0; }
};

struct Population {
    std::vector<Individual> members;
    int generation = 0;

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
    std::vector<ObjectiveVector> objectives() const;
};

/// A benchmark problem: box-bounded, stateless evaluator, minimization.
struct ProblemSpec {
    std::string name;
    std::size_t n_vars = 0;
    std::size_t n_objectives = 0;
    Bounds bounds;
    bool has_analytic_front = false;
    std::function<ObjectiveVector(const DecisionVector&)> objective;
};

/// Exhaustive dominance classification under the minimization convention:
/// a dominates b iff a <= b componentwise and a < b somewhere.
Dominance dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Evaluate an in-bounds point. Out-of-bounds input is a usage error;
/// callers must clamp first.
ObjectiveVector evaluate(const ProblemSpec& problem, const DecisionVector& x);

/// Project each component into [lower_i, upper_i]. Idempotent.
DecisionVector clamp(DecisionVector x, const Bounds& b);

}  // namespace moea

#endif
