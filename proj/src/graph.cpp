#include "artin/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "artin/error.hpp"

namespace artin::graph {

std::vector<int> VertexSet::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

bool canonical_less(VertexSet a, VertexSet b) {
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  while (x != 0 && y != 0) {
    int i = std::countr_zero(x);
    int j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

LabelledGraph LabelledGraph::build(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges) {
  if (vertices.empty()) throw ParseError("graph has no vertices");
  if (vertices.size() > kMaxVertices) {
    throw ParseError("graph has " + std::to_string(vertices.size()) + " vertices; at most " +
                     std::to_string(kMaxVertices) + " are supported");
  }
  for (const auto& v : vertices) {
    if (v.empty()) throw ParseError("empty vertex identifier");
  }
  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end()) {
    throw ParseError("duplicate vertex '" + *dup + "'");
  }

  LabelledGraph g;
  g.names_ = std::move(vertices);
  const std::size_t n = g.names_.size();
  g.adjacency_.assign(n, 0);
  g.labels_.assign(n * n, 0);

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const std::string where = "edge " + std::to_string(i) + " [" + e.u + "," + e.v + "]";
    auto u = g.index_of(e.u);
    auto v = g.index_of(e.v);
    if (!u) throw ParseError(where + ": unknown endpoint '" + e.u + "'");
    if (!v) throw ParseError(where + ": unknown endpoint '" + e.v + "'");
    if (*u == *v) throw ParseError(where + ": self-loop");
    if (e.label < 2) throw ParseError(where + ": label " + std::to_string(e.label) + " is below 2");
    auto& slot = g.labels_[static_cast<std::size_t>(*u) * n + static_cast<std::size_t>(*v)];
    if (slot != 0) throw ParseError(where + ": duplicate edge");
    slot = e.label;
    g.labels_[static_cast<std::size_t>(*v) * n + static_cast<std::size_t>(*u)] = e.label;
    g.adjacency_[static_cast<std::size_t>(*u)] |= std::uint64_t{1} << *v;
    g.adjacency_[static_cast<std::size_t>(*v)] |= std::uint64_t{1} << *u;
    ++g.edge_count_;
  }
  return g;
}

std::optional<int> LabelledGraph::index_of(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

std::vector<Edge> LabelledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  const int n = static_cast<int>(names_.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (int m = label(u, v); m != 0) out.push_back({u, v, m});
    }
  }
  return out;
}

std::vector<NamedEdge> LabelledGraph::named_edges() const {
  std::vector<NamedEdge> out;
  for (const auto& e : edges()) out.push_back({name(e.u), name(e.v), e.label});
  return out;
}

std::vector<std::string> LabelledGraph::names(VertexSet s) const {
  std::vector<std::string> out;
  s.for_each([&](int v) { out.push_back(name(v)); });
  return out;
}

VertexSet LabelledGraph::to_set(std::span<const std::string> names) const {
  VertexSet s;
  for (const auto& n : names) {
    auto v = index_of(n);
    if (!v) throw PreconditionError("unknown vertex '" + n + "'");
    s = s.with(*v);
  }
  return s;
}

std::strong_ordering operator<=>(const LabelledGraph& a, const LabelledGraph& b) {
  if (auto c = a.names_ <=> b.names_; c != 0) return c;
  auto ea = a.edges();
  auto eb = b.edges();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

namespace {

void require_vertex(const LabelledGraph& g, int v) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) {
    throw PreconditionError("vertex index " + std::to_string(v) + " out of range");
  }
}

}  // namespace

LabelledGraph full_subgraph(const LabelledGraph& g, VertexSet s) {
  if (s.empty()) throw PreconditionError("full subgraph of the empty vertex set");
  if (!s.subset_of(g.all())) throw PreconditionError("vertex set is not a subset of the graph");
  std::vector<NamedEdge> edges;
  s.for_each([&](int u) {
    (g.neighbours(u) & s).for_each([&](int v) {
      if (u < v) edges.push_back({g.name(u), g.name(v), g.label(u, v)});
    });
  });
  return LabelledGraph::build(g.names(s), edges);
}

VertexSet link(const LabelledGraph& g, int v) {
  require_vertex(g, v);
  return g.neighbours(v);
}

VertexSet star(const LabelledGraph& g, int v) { return link(g, v).with(v); }

bool is_even(const LabelledGraph& g) {
  const auto edges = g.edges();
  return std::all_of(edges.begin(), edges.end(), [](const Edge& e) { return e.label % 2 == 0; });
}

bool is_clique(const LabelledGraph& g, VertexSet s) {
  bool ok = true;
  s.for_each([&](int v) {
    if (!(s.without(v)).subset_of(g.neighbours(v))) ok = false;
  });
  return ok;
}

bool is_clique(const LabelledGraph& g) { return is_clique(g, g.all()); }

bool is_fc_even(const LabelledGraph& g) {
  if (!is_even(g)) throw PreconditionError("the triangle criterion applies to even graphs only");
  const int n = static_cast<int>(g.vertex_count());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      // Common neighbours above b close a triangle.
      const VertexSet common = g.neighbours(a) & g.neighbours(b) & VertexSet(~((std::uint64_t{2} << b) - 1));
      bool fine = true;
      common.for_each([&](int c) {
        const int twos = (g.label(a, b) == 2) + (g.label(a, c) == 2) + (g.label(b, c) == 2);
        if (twos < 2) fine = false;
      });
      if (!fine) return false;
    }
  }
  return true;
}

namespace {

void bron_kerbosch(const LabelledGraph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Pivot on the vertex of P ∪ X with the most neighbours in P.
  int pivot = -1;
  int best = -1;
  (p | x).for_each([&](int u) {
    int c = (g.neighbours(u) & p).size();
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  (p - g.neighbours(pivot)).for_each([&](int v) {
    bron_kerbosch(g, r.with(v), p & g.neighbours(v), x & g.neighbours(v), out);
    p = p.without(v);
    x = x.with(v);
  });
}

}  // namespace

std::vector<VertexSet> enumerate_maximal_cliques(const LabelledGraph& g) {
  std::vector<VertexSet> out;
  bron_kerbosch(g, VertexSet(), g.all(), VertexSet(), out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

// Components of the graph whose adjacency is given by `adj`, restricted to
// `within`; ordered by smallest vertex.
template <typename Adj>
std::vector<VertexSet> components_of(VertexSet within, Adj&& adj) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int v) { next = next | adj(v); });
      next = (next & within) - comp;
      comp = comp | next;
      frontier = next;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

}  // namespace

std::vector<VertexSet> connected_components(const LabelledGraph& g) {
  return components_of(g.all(), [&](int v) { return g.neighbours(v); });
}

bool is_connected(const LabelledGraph& g) { return connected_components(g).size() == 1; }

bool is_tree(const LabelledGraph& g) { return is_connected(g) && g.edge_count() + 1 == g.vertex_count(); }

int SphericalFactorization::heavy_count() const {
  return static_cast<int>(std::count_if(factors.begin(), factors.end(), [](const SphericalFactor& f) { return !f.is_vertex(); }));
}

SphericalResult spherical_factorization(const LabelledGraph& g) {
  if (!is_clique(g)) throw PreconditionError("spherical factorization needs a clique");
  if (!is_even(g)) throw PreconditionError("spherical factorization needs even labels");

  const int n = static_cast<int>(g.vertex_count());
  std::vector<std::optional<Edge>> heavy_at(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) {
    if (e.label < 4) continue;
    for (int end : {e.u, e.v}) {
      auto& slot = heavy_at[static_cast<std::size_t>(end)];
      if (slot) return NotSpherical{*slot, e, end};
      slot = e;
    }
  }

  SphericalFactorization out;
  for (int v = 0; v < n; ++v) {
    const auto& h = heavy_at[static_cast<std::size_t>(v)];
    if (!h) {
      out.factors.push_back({v, v, 0});
    } else if (h->u == v) {
      out.factors.push_back({h->u, h->v, h->label});
    }
  }
  return out;
}

JoinDecomposition join_decomposition(const LabelledGraph& g) {
  // Auxiliary graph: u ~ v unless {u,v} is an edge labelled 2.
  auto h_neighbours = [&](int v) {
    VertexSet twos;
    g.neighbours(v).for_each([&](int w) {
      if (g.label(v, w) == 2) twos = twos.with(w);
    });
    return (g.all() - twos).without(v);
  };
  return {components_of(g.all(), h_neighbours)};
}

LabelledGraph add_edge(const LabelledGraph& g, int u, int v, int label) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v) throw PreconditionError("cannot add a self-loop");
  if (g.adjacent(u, v)) throw PreconditionError("edge " + g.name(u) + "-" + g.name(v) + " already present");
  if (label < 2) throw PreconditionError("edge labels must be at least 2");
  auto edges = g.named_edges();
  edges.push_back({g.name(u), g.name(v), label});
  return LabelledGraph::build(g.vertices(), edges);
}

LabelledGraph two_completion(const LabelledGraph& g) {
  auto edges = g.named_edges();
  const int n = static_cast<int>(g.vertex_count());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.push_back({g.name(u), g.name(v), 2});
    }
  }
  return LabelledGraph::build(g.vertices(), edges);
}

std::string describe(const LabelledGraph& g, VertexSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](int v) {
    if (!first) os << ',';
    os << g.name(v);
    first = false;
  });
  os << '}';
  return os.str();
}

std::string describe(const LabelledGraph& g, const Edge& e) {
  return g.name(e.u) + "-" + g.name(e.v) + "(" + std::to_string(e.label) + ")";
}

}  // namespace artin::graph
