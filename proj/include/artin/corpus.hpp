#pragma once

// Graph classification report and the reproducible random-graph corpus.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "artin/graph.hpp"
#include "artin/random.hpp"

namespace artin::corpus {

using graph::LabelledGraph;

struct Classification {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool even = false;
  bool fc = false;  // only meaningful for even graphs
  bool tree = false;
  bool connected = false;
  bool clique = false;
  int components = 0;
  int join_factors = 0;
  std::vector<graph::VertexSet> maximal_cliques;
};

Classification classify(const LabelledGraph& g);
nlohmann::ordered_json to_json(const LabelledGraph& g, const Classification& c);
std::string to_text(const LabelledGraph& g, const Classification& c);

enum class Family { ErdosRenyi, Tree };

struct Params {
  int count = 100;
  int max_vertices = 6;
  std::vector<int> labels{2};
  std::uint64_t seed = 1;
  Family family = Family::ErdosRenyi;
  bool timing = false;  // adds a wall-time column, which is not byte-stable
};

// Vertices v00, v01, ...; every pair is an edge with probability 1/2
// (Erdős–Rényi) or each vertex after the first hangs off a uniformly chosen
// earlier one (Tree). Labels are uniform over `labels`.
LabelledGraph random_graph(int vertices, const std::vector<int>& labels, Family family, Rng& rng);

// Throws PreconditionError on count < 1, max_vertices outside [1, 64], an
// empty label set or a label below 2.
void validate(const Params& p);

// Header comment, column header, one row per graph, summary comment.
std::string report(const Params& p);

}  // namespace artin::corpus
