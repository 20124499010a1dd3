#include "artin/corpus.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "artin/certify.hpp"
#include "artin/error.hpp"
#include "artin/graph_io.hpp"

namespace artin::corpus {

Classification classify(const LabelledGraph& g) {
  Classification c;
  c.vertices = g.vertex_count();
  c.edges = g.edge_count();
  c.even = graph::is_even(g);
  c.fc = c.even && graph::is_fc_even(g);
  c.tree = graph::is_tree(g);
  c.connected = graph::is_connected(g);
  c.clique = graph::is_clique(g);
  c.components = static_cast<int>(graph::connected_components(g).size());
  c.join_factors = static_cast<int>(graph::join_decomposition(g).factors.size());
  c.maximal_cliques = graph::enumerate_maximal_cliques(g);
  return c;
}

nlohmann::ordered_json to_json(const LabelledGraph& g, const Classification& c) {
  nlohmann::ordered_json out;
  out["hash"] = graph::content_hash(g);
  out["vertices"] = c.vertices;
  out["edges"] = c.edges;
  out["even"] = c.even;
  out["fc"] = c.even ? nlohmann::ordered_json(c.fc) : nlohmann::ordered_json(nullptr);
  out["tree"] = c.tree;
  out["connected"] = c.connected;
  out["clique"] = c.clique;
  out["components"] = c.components;
  out["join_factors"] = c.join_factors;
  auto cliques = nlohmann::ordered_json::array();
  for (const auto s : c.maximal_cliques) cliques.push_back(g.names(s));
  out["maximal_cliques"] = std::move(cliques);
  return out;
}

std::string to_text(const LabelledGraph& g, const Classification& c) {
  std::ostringstream os;
  os << "graph " << graph::describe(g, g.all()) << " " << graph::content_hash(g) << "\n";
  os << "vertices: " << c.vertices << "\n";
  os << "edges: " << c.edges << "\n";
  os << "even: " << (c.even ? "yes" : "no") << "\n";
  os << "FC-type (even criterion): " << (c.even ? (c.fc ? "yes" : "no") : "n/a") << "\n";
  os << "tree: " << (c.tree ? "yes" : "no") << "\n";
  os << "components: " << c.components << "\n";
  os << "join factors over 2-labels: " << c.join_factors << "\n";
  os << "clique: " << (c.clique ? "yes" : "no") << "\n";
  os << "maximal cliques:";
  for (const auto s : c.maximal_cliques) os << " " << graph::describe(g, s);
  os << "\n";
  return os.str();
}

LabelledGraph random_graph(int vertices, const std::vector<int>& labels, Family family, Rng& rng) {
  std::vector<std::string> names;
  for (int i = 0; i < vertices; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "v%02d", i);
    names.emplace_back(buf);
  }
  auto pick = [&] { return labels[rng.below(labels.size())]; };
  std::vector<graph::NamedEdge> edges;
  if (family == Family::Tree) {
    for (int v = 1; v < vertices; ++v) {
      const auto parent = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(v)));
      edges.push_back({names[parent], names[static_cast<std::size_t>(v)], pick()});
    }
  } else {
    for (int u = 0; u < vertices; ++u) {
      for (int v = u + 1; v < vertices; ++v) {
        if (rng.coin()) edges.push_back({names[static_cast<std::size_t>(u)], names[static_cast<std::size_t>(v)], pick()});
      }
    }
  }
  return LabelledGraph::build(std::move(names), edges);
}

void validate(const Params& p) {
  if (p.count < 1) throw PreconditionError("count must be at least 1");
  if (p.max_vertices < 1 || p.max_vertices > static_cast<int>(graph::kMaxVertices)) {
    throw PreconditionError("max-vertices must be between 1 and 64");
  }
  if (p.labels.empty()) throw PreconditionError("at least one label is needed");
  for (int l : p.labels) {
    if (l < 2) throw PreconditionError("labels must be at least 2");
  }
}

std::string report(const Params& p) {
  validate(p);
  std::ostringstream os;
  os << "# seed=" << p.seed << " count=" << p.count << " max_vertices=" << p.max_vertices << " labels=";
  for (std::size_t i = 0; i < p.labels.size(); ++i) os << (i ? "," : "") << p.labels[i];
  os << " family=" << (p.family == Family::Tree ? "tree" : "er") << "\n";
  os << "index,hash,vertices,edges,even,fc,tree,join_factors,clique,polyfree,length,fjcw";
  if (p.timing) os << ",wall_ms";
  os << "\n";

  Rng rng(p.seed);
  int polyfree = 0;
  int fjcw = 0;
  for (int i = 0; i < p.count; ++i) {
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.max_vertices)));
    const auto g = random_graph(n, p.labels, p.family, rng);
    const auto start = std::chrono::steady_clock::now();
    const auto c = classify(g);
    const auto pv = certify::certify_polyfree(g);
    const auto fv = certify::certify_fjcw(g);
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    polyfree += pv.certified() ? 1 : 0;
    fjcw += fv.certified() ? 1 : 0;
    os << i << ',' << graph::content_hash(g) << ',' << c.vertices << ',' << c.edges << ',' << c.even << ','
       << (c.even ? (c.fc ? "1" : "0") : "-") << ',' << c.tree << ',' << c.join_factors << ',' << c.clique << ','
       << (pv.certified() ? "NormallyPolyFree" : "Unknown") << ','
       << (pv.certified() ? std::to_string(pv.certificate().length) : "") << ','
       << (fv.certified() ? "Certified" : "Unknown");
    if (p.timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", elapsed);
      os << ',' << buf;
    }
    os << "\n";
  }
  os << "# summary count=" << p.count << " polyfree_certified=" << polyfree << " fjcw_certified=" << fjcw << "\n";
  return os.str();
}

}  // namespace artin::corpus
