#ifndef MOEA_CONFIG_HPP
#define MOEA_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "moea/nsga2.hpp"
#include "moea/orthogonal.hpp"
#include "moea/pruning.hpp"

namespace moea {

enum class Algorithm { nsga2, otnsga2 };

std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

struct RunConfig {
    std::string problem;
    Algorithm algorithm = Algorithm::nsga2;
    std::size_t pop_size = 100;
    int generations = 250;
    VariationParams variation;
    PruneParams prune;
    InitParams init;
    std::uint64_t seed = 0;
    std::size_t front_points = 1000;

    void validate() const;  // throws std::invalid_argument naming the field
};

struct ParseResult {
    RunConfig config;
    std::vector<std::string> warnings;
};

/// Apply one key=value pair; unknown keys are rejected. Out-of-band but
/// legal values (e.g. delta outside [0.12, 0.15]) append a warning.
void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value,
                        std::vector<std::string>& warnings);

/// Flat key = value text, '#' comments. The result is fully resolved (every
/// default materialized) and validated.
ParseResult parse_config_text(const std::string& text);
ParseResult parse_config_file(const std::filesystem::path& path);

}  // namespace moea

#endif
