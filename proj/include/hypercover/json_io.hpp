#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "hypercover/cover.hpp"
#include "hypercover/hypergraph.hpp"
#include "hypercover/stepping.hpp"
#include "hypercover/wellorder.hpp"

namespace hypercover {

/// A hypergraph instance as read from a file, with optional name and
/// declared C(k,r) parameters (verified on load when present).
struct Instance {
  Hypergraph hypergraph;
  std::optional<std::string> name;
  std::optional<unsigned> k;
  std::optional<unsigned> r;
};

// EpSet textual form: {"fin":[...], "t":t, "p":p, "res":[...]} with the
// shorthands {"fin":[...]} for finite sets and {"ap":[a,d]} for arithmetic
// progressions. Parsing normalizes to canonical form.
EpSet epset_from_json(const nlohmann::json& j);
nlohmann::json epset_to_json(const EpSet& s);

Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);

Cut cut_from_json(const nlohmann::json& j);
nlohmann::json cut_to_json(const Cut& cut);

BlockOrder order_from_json(const nlohmann::json& j);
nlohmann::json order_to_json(const BlockOrder& ord);

WitnessedCover cover_from_json(const nlohmann::json& j);
nlohmann::json cover_to_json(const WitnessedCover& wc);

/// Parses text, raising ParseError with a readable message on bad input.
nlohmann::json parse_json_text(const std::string& text);

/// Reads a whole file; raises ParseError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace hypercover
