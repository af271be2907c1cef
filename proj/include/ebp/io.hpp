#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ebp/boundary.hpp"
#include "ebp/logmean.hpp"
#include "ebp/modelspace.hpp"
#include "ebp/zeroseq.hpp"

namespace ebp::io {

/// Shortest decimal that round-trips the double.
std::string format_double(double x);

/// Line-oriented sequence format: one "eps theta" pair per line, full
/// precision; lines starting with '#' are comments.
std::string sequence_to_text(const ZeroSequence& seq,
                             const std::vector<std::string>& comments = {});
ZeroSequence sequence_from_text(const std::string& text, bool allow_origin = false);

nlohmann::json sequence_to_json(const ZeroSequence& seq);
ZeroSequence sequence_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const ModelFunction& f);
ModelFunction model_from_json(const nlohmann::json& j);

/// CSV renderings; comment lines ("# key=value") carry provenance such as
/// the config hash and seed. Column layouts are documented in
/// docs/csv_schema.md.
std::string profile_to_csv(const DistributionProfile& profile,
                           const std::vector<std::string>& comments = {});
std::string logmean_to_csv(const LogMeanCurve& curve,
                           const std::vector<std::string>& comments = {});
std::string increments_to_csv(const LogMeanCurve& curve,
                              const std::vector<std::string>& comments = {});

void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace ebp::io
