#pragma once

// The versioned graph file format:
//   {"format":"artin-graph/1","vertices":[...],"edges":[[u,v,m],...]}
// Serialization is canonical: vertices sorted, each edge written with its
// lexicographically smaller endpoint first, edges sorted.

#include <string>
#include <string_view>

#include <json.hpp>

#include "artin/graph.hpp"

namespace artin::graph {

inline constexpr std::string_view kGraphFormat = "artin-graph/1";

// Throws ParseError (with the byte offset for syntax errors) on malformed
// text or on any LabelledGraph invariant violation. The "format" key may be
// omitted; when present it must name kGraphFormat.
LabelledGraph parse_graph(std::string_view text);

// Reads a graph object. `with_format` controls whether the "format" key is
// accepted. Throws ParseError.
LabelledGraph graph_from_json(const nlohmann::json& j, bool with_format = true);

// {"vertices":[...],"edges":[...]} (no format key); used inside certificates.
nlohmann::ordered_json graph_to_json(const LabelledGraph& g);

// Canonical file text, with the format key.
std::string serialize(const LabelledGraph& g);

// "sha256:<hex>" digest of serialize(g).
std::string content_hash(const LabelledGraph& g);

}  // namespace artin::graph
