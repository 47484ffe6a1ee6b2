#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "derpair/cochain.hpp"
#include "derpair/presentation.hpp"

namespace derpair {

using Json = nlohmann::ordered_json;

/// Presentation file, indices 0-based:
///   {"dimension": n, "labels": [...]?, "kind": "...",
///    "products": {"mu": [[i, j, k, "p/q"], ...]},       μ(e_i, e_j) has coefficient p/q on e_k
///    "derivations": {"delta": [[i, j, "p/q"], ...]},     δ(e_i) has coefficient p/q on e_j
///    "operators": {...}?, "provenance": {...}?}
/// Throws SchemaError on anything malformed.
Presentation presentation_from_json(const Json& doc);
Json presentation_to_json(const Presentation& p);

/// Cochain file: {"schema": "derpair-cochain/1", "dimension": n, "labels"?, "arity": k,
///                "entries": [[i_1, …, i_k, o, "p/q"], ...], "shadow"?: {"arity": k−1, "entries": [...]}}
struct CochainFile {
  Space space;
  MultiMap top;
  std::optional<MultiMap> shadow;
};
CochainFile cochain_from_json(const Json& doc);
Json cochain_to_json(const Space& space, const MultiMap& top, const std::optional<MultiMap>& shadow = std::nullopt);

/// Throws SchemaError when the file cannot be read or is not valid JSON.
Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& doc);
std::string dump(const Json& doc);

Presentation read_presentation(const std::filesystem::path& path);

}  // namespace derpair
