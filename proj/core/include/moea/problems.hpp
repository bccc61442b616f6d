#ifndef MOEA_PROBLEMS_HPP
#define MOEA_PROBLEMS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "moea/types.hpp"

namespace moea {

/// Points sampled from a problem's true Pareto front. For problems with an
/// analytic front the sampler also records decision-space preimages, aligned
/// with points, so tests can re-evaluate them.
struct FrontSample {
    enum class Source { analytic, file };

    std::vector<ObjectiveVector> points;
    Source source = Source::analytic;
    std::vector<DecisionVector> preimages;  // empty when unknown (file-based fronts)

    bool has_preimages() const { return !preimages.empty(); }
};

/// The 26 supported benchmark identifiers, in canonical order:
/// SCH FON POL KUR ZDT1-4 ZDT6 DTLZ1-7 UF1-10.
const std::vector<std::string>& problem_names();

/// Build a fully populated problem by name. Unknown names are a usage error
/// whose message lists the supported identifiers.
ProblemSpec make_problem(const std::string& name);

/// Sample `count` (>= 2) points from the true Pareto front. Analytic fronts
/// are sampled uniformly in their parameterization; POL and KUR load the
/// bundled reference files (regenerable with the regen-fronts tool).
FrontSample sample_true_front(const std::string& name, std::size_t count);

/// Directory searched for bundled reference fronts: $MOEA_DATA_DIR when set,
/// otherwise the compiled-in data directory.
std::filesystem::path reference_front_dir();

/// One objective vector per line, space-separated, '#' comments allowed.
std::vector<ObjectiveVector> read_front_file(const std::filesystem::path& path);
void write_front_file(const std::filesystem::path& path,
                      const std::vector<ObjectiveVector>& points,
                      const std::string& comment = "");

/// Keep only the mutually non-dominated subset (stable order).
std::vector<ObjectiveVector> nondominated_filter(const std::vector<ObjectiveVector>& points);

}  // namespace moea

#endif
