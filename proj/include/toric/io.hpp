#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/code.hpp"

namespace toric::io {

using nlohmann::json;

json field_to_json(const Field& f);
FieldPtr field_from_json(const json& j);

/// Accepts {"vertices": [[x,y],...]} or {"simplex": a}.
LatticePolytope polytope_from_json(const json& j);
json polytope_to_json(const LatticePolytope& P);

json exponents_to_json(const ExponentSet& U);
ExponentSet exponents_from_json(const json& j);

/// Code descriptor: {field, n, k, exponents} (+ polytope when known).
json descriptor(const ToricCode& C);
ToricCode code_from_descriptor(const json& j);

/// Word files: one word per line, space-separated canonical element values.
std::vector<std::vector<std::uint32_t>> read_word_file(const std::filesystem::path& path,
                                                       const Field& field,
                                                       std::size_t expected_len);
void write_word_file(const std::filesystem::path& path,
                     const std::vector<std::vector<std::uint32_t>>& words);

json load_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace toric::io
