#include "moea/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moea {

bool Bounds::contains(const DecisionVector& x) const {
    if (x.size() != lower.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < lower[i] || x[i] > upper[i]) return false;
    }
    return true;
}

void Bounds::validate() const {
    if (lower.size() != upper.size()) {
        throw std::invalid_argument("Bounds: lower/upper length mismatch");
    }
    if (lower.empty()) {
        throw std::invalid_argument("Bounds: empty");
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (!(lower[i] < upper[i])) {
            throw std::invalid_argument("Bounds: lower[i] must be < upper[i]");
        }
    }
}

Bounds Bounds::uniform(std::size_t n, double lo, double hi) {
    return Bounds{std::vector<double>(n, lo), std::vector<double>(n, hi)};
}

std::vector<ObjectiveVector> Population::objectives() const {
    std::vector<ObjectiveVector> out;
    out.reserve(members.size());
    for (const auto& m : members) out.push_back(m.objectives);
    return out;
}

Dominance dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dominates: objective length mismatch");
    }
    bool a_better = false;
    bool b_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) {
            a_better = true;
        } else if (b[i] < a[i]) {
            b_better = true;
        }
    }
    if (a_better && !b_better) return Dominance::FirstDominates;
    if (b_better && !a_better) return Dominance::SecondDominates;
    if (a_better && b_better) return Dominance::Incomparable;
    return Dominance::Equal;
}

ObjectiveVector evaluate(const ProblemSpec& problem, const DecisionVector& x) {
    if (x.size() != problem.n_vars) {
        throw std::invalid_argument("evaluate: decision length mismatch for " + problem.name);
    }
    if (!problem.bounds.contains(x)) {
        throw std::invalid_argument("evaluate: point out of bounds for " + problem.name);
    }
    ObjectiveVector y = problem.objective(x);
    if (y.size() != problem.n_objectives) {
        throw std::runtime_error("evaluate: evaluator returned wrong objective count for " +
                                 problem.name);
    }
    return y;
}

DecisionVector clamp(DecisionVector x, const Bounds& b) {
    if (x.size() != b.size()) {
        throw std::invalid_argument("clamp: length mismatch");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::clamp(x[i], b.lower[i], b.upper[i]);
    }
    return x;
}

}  // namespace moea
