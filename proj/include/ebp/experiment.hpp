#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ebp/zeroseq.hpp"

namespace ebp {

/// Generator half of an experiment config.
struct GeneratorSpec {
    enum class Kind { Geometric, Power };

    Kind kind = Kind::Geometric;
    double c = 1.0;
    double delta = 0.5;
    double q = 2.0;
    int count = 0;
    std::string angle_rule = "uniform-random";  // uniform-random | equispaced | fixed-list
    std::uint64_t seed = 0;
    std::vector<double> angles;

    ZeroSequence build(int count_override = 0) const;
};

/// Full experiment description, parsed from a JSON config file. Experiments
/// are archivable artifacts: everything that influences the run lives here,
/// and the canonical serialization is hashed into every output file.
struct ExperimentConfig {
    std::string experiment;  // thm1 thm2 thm3 frostman lemma1 claim observation protas
    GeneratorSpec generator;
    std::vector<int> n_list;
    int grid_base_count = 16384;
    int grid_refine_factor = 64;
    int lambda_points_per_decade = 200;
    nlohmann::json thresholds = nlohmann::json::object();
    nlohmann::json params = nlohmann::json::object();
    std::filesystem::path output_dir;

    /// Validates every referenced field before any computation; errors name
    /// the offending field.
    static ExperimentConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    /// FNV-1a hash of the canonical serialization, as fixed-width hex.
    std::string hash() const;
};

struct ExperimentReport {
    nlohmann::json summary;  // machine-readable; byte-stable given config+seed
    bool pass = false;
    std::vector<std::filesystem::path> files;
};

/// Runs the experiment, writes per-N CSVs plus summary.json under
/// output_dir, and returns the summary. Deterministic given the config
/// (timestamps live in a separate metadata field).
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Plain-text table for a summary; contains nothing beyond the JSON.
std::string render_report(const nlohmann::json& summary);

/// Inverse of render_report up to the metadata field, so
/// render(parse(render(s))) == render(s).
nlohmann::json parse_report(const std::string& table);

}  // namespace ebp
