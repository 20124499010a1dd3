#include "artin/graph_io.hpp"

#include <array>
#include <cstdio>
#include <limits>

#include <openssl/evp.h>

#include "artin/error.hpp"

namespace artin::graph {

using nlohmann::json;
using nlohmann::ordered_json;

LabelledGraph graph_from_json(const json& j, bool with_format) {
  if (!j.is_object()) throw ParseError("graph must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "vertices" || key == "edges") continue;
    if (key == "format" && with_format) {
      if (!value.is_string() || value.get<std::string>() != kGraphFormat) {
        throw ParseError("unsupported graph format " + value.dump() + "; expected \"" + std::string(kGraphFormat) + "\"");
      }
      continue;
    }
    throw ParseError("unexpected key '" + key + "' in graph object");
  }

  if (!j.contains("vertices") || !j["vertices"].is_array()) throw ParseError("graph needs a \"vertices\" array");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex identifiers must be strings, got " + v.dump());
    vertices.push_back(v.get<std::string>());
  }

  std::vector<NamedEdge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    std::size_t i = 0;
    for (const auto& e : j["edges"]) {
      const std::string where = "edge " + std::to_string(i++);
      if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() || !e[2].is_number_integer()) {
        throw ParseError(where + ": expected [\"u\",\"v\",label], got " + e.dump());
      }
      const auto m = e[2].get<std::int64_t>();
      if (m < 2) throw ParseError(where + ": label " + std::to_string(m) + " is below 2");
      if (m > std::numeric_limits<int>::max()) throw ParseError(where + ": label too large");
      edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), static_cast<int>(m)});
    }
  }
  return LabelledGraph::build(std::move(vertices), edges);
}

LabelledGraph parse_graph(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what(), e.byte);
  }
  return graph_from_json(j, true);
}

ordered_json graph_to_json(const LabelledGraph& g) {
  ordered_json out;
  out["vertices"] = g.vertices();
  auto edges = ordered_json::array();
  for (const auto& e : g.named_edges()) edges.push_back(ordered_json::array({e.u, e.v, e.label}));
  out["edges"] = std::move(edges);
  return out;
}

std::string serialize(const LabelledGraph& g) {
  ordered_json out;
  out["format"] = kGraphFormat;
  auto body = graph_to_json(g);
  out["vertices"] = std::move(body["vertices"]);
  out["edges"] = std::move(body["edges"]);
  return out.dump();
}

std::string content_hash(const LabelledGraph& g) {
  const std::string text = serialize(g);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * len + 7);
  hex += "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace artin::graph
