#include "moea/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "moea/problems.hpp"

namespace moea {
namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for '" + key + "': " + value);
    }
    if (pos != value.size()) {
        throw std::invalid_argument("config: bad numeric value for '" + key + "': " + value);
    }
    return v;
}

long long parse_int(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    long long v;
    try {
        v = std::stoll(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad integer value for '" + key + "': " + value);
    }
    if (pos != value.size()) {
        throw std::invalid_argument("config: bad integer value for '" + key + "': " + value);
    }
    return v;
}

}  // namespace

std::string algorithm_name(Algorithm a) {
    return a == Algorithm::nsga2 ? "nsga2" : "otnsga2";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "nsga2") return Algorithm::nsga2;
    if (name == "otnsga2") return Algorithm::otnsga2;
    throw std::invalid_argument("unknown algorithm '" + name + "'; supported: nsga2 otnsga2");
}

void RunConfig::validate() const {
    make_problem(problem);  // rejects unknown names
    if (pop_size < 4 || pop_size % 2 != 0) {
        throw std::invalid_argument("config: pop_size must be even and >= 4");
    }
    if (generations < 0) {
        throw std::invalid_argument("config: generations must be >= 0");
    }
    if (variation.p_crossover < 0.0 || variation.p_crossover > 1.0) {
        throw std::invalid_argument("config: p_crossover must be in [0, 1]");
    }
    if (variation.p_mutation < 0.0 || variation.p_mutation > 1.0) {
        throw std::invalid_argument("config: p_mutation must be in [0, 1]");
    }
    if (variation.eta_c <= 0.0 || variation.eta_m <= 0.0) {
        throw std::invalid_argument("config: eta_c and eta_m must be > 0");
    }
    if (!(prune.delta > 0.0 && prune.delta < 1.0)) {
        throw std::invalid_argument("config: delta must be in (0, 1)");
    }
    if (prune.k_clusters < 0 || prune.k_clusters == 1) {
        throw std::invalid_argument("config: k_clusters must be 0 (auto) or >= 2");
    }
    if (prune.kmeans_max_iter < 1) {
        throw std::invalid_argument("config: kmeans_max_iter must be >= 1");
    }
    if (!(prune.kmeans_tol > 0.0)) {
        throw std::invalid_argument("config: kmeans_tol must be > 0");
    }
    if (init.subspaces < 1) {
        throw std::invalid_argument("config: subspaces must be >= 1");
    }
    if (!is_prime(init.q_levels)) {
        throw std::invalid_argument("config: q_levels must be prime");
    }
    if (!(init.theta0 > 0.0)) {
        throw std::invalid_argument("config: theta0 must be > 0");
    }
    if (front_points < 2) {
        throw std::invalid_argument("config: front_points must be >= 2");
    }
}

void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value,
                        std::vector<std::string>& warnings) {
    if (key == "problem") {
        config.problem = value;
    } else if (key == "algorithm") {
        config.algorithm = parse_algorithm(value);
    } else if (key == "pop_size") {
        config.pop_size = static_cast<std::size_t>(parse_int(key, value));
    } else if (key == "generations") {
        config.generations = static_cast<int>(parse_int(key, value));
    } else if (key == "p_crossover") {
        config.variation.p_crossover = parse_double(key, value);
    } else if (key == "p_mutation") {
        config.variation.p_mutation = parse_double(key, value);
    } else if (key == "eta_c") {
        config.variation.eta_c = parse_double(key, value);
    } else if (key == "eta_m") {
        config.variation.eta_m = parse_double(key, value);
    } else if (key == "delta") {
        config.prune.delta = parse_double(key, value);
        if (config.prune.delta < 0.12 || config.prune.delta > 0.15) {
            warnings.push_back("delta " + value + " is outside the recommended band [0.12, 0.15]");
        }
    } else if (key == "k_clusters") {
        config.prune.k_clusters = static_cast<int>(parse_int(key, value));
    } else if (key == "kmeans_max_iter") {
        config.prune.kmeans_max_iter = static_cast<int>(parse_int(key, value));
    } else if (key == "kmeans_tol") {
        config.prune.kmeans_tol = parse_double(key, value);
    } else if (key == "subspaces") {
        config.init.subspaces = static_cast<int>(parse_int(key, value));
    } else if (key == "q_levels") {
        config.init.q_levels = static_cast<int>(parse_int(key, value));
    } else if (key == "theta0") {
        config.init.theta0 = parse_double(key, value);
    } else if (key == "seed") {
        config.seed = static_cast<std::uint64_t>(parse_int(key, value));
    } else if (key == "front_points") {
        config.front_points = static_cast<std::size_t>(parse_int(key, value));
    } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

ParseResult parse_config_text(const std::string& text) {
    ParseResult result;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                        " is not key = value");
        }
        apply_config_entry(result.config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)),
                           result.warnings);
    }
    result.config.validate();
    return result;
}

ParseResult parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("config: cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace moea
