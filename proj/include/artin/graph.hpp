#pragma once

// Labelled simplicial graphs (the presentation data of an Artin group) and
// the graph-theoretic predicates and decompositions the certifier consumes.

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace artin::graph {

inline constexpr std::size_t kMaxVertices = 64;

// A subset of a graph's vertices, as a bitmask over the graph's canonical
// vertex indices. Iteration is in canonical (index) order.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet first_n(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  // Smallest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  std::vector<int> indices() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

// Canonical order on vertex sets: lexicographic on the sorted index
// sequences ({a,b} < {a,b,c} < {a,c} < {b}).
bool canonical_less(VertexSet a, VertexSet b);

struct Edge {
  int u;  // u < v
  int v;
  int label;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct NamedEdge {
  std::string u;
  std::string v;
  int label;
};

// Finite simplicial graph with integer edge labels >= 2. Vertices are kept
// in lexicographic order of their identifiers; all indices refer to that
// order. Instances are immutable once built.
class LabelledGraph {
 public:
  // Validates and canonicalises. Throws ParseError on an empty vertex list,
  // empty or duplicate identifiers, self-loops, unknown endpoints,
  // duplicate pairs, labels below 2, or more than kMaxVertices vertices.
  static LabelledGraph build(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<std::string>& vertices() const { return names_; }
  const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
  std::optional<int> index_of(std::string_view name) const;

  VertexSet all() const { return VertexSet::first_n(names_.size()); }
  VertexSet neighbours(int v) const { return VertexSet(adjacency_[static_cast<std::size_t>(v)]); }
  bool adjacent(int u, int v) const { return neighbours(u).contains(v); }
  // 0 when u and v are not joined by an edge.
  int label(int u, int v) const { return labels_[static_cast<std::size_t>(u) * names_.size() + static_cast<std::size_t>(v)]; }
  int degree(int v) const { return neighbours(v).size(); }

  // Canonical edge list: u < v, sorted by (u, v).
  std::vector<Edge> edges() const;
  std::vector<NamedEdge> named_edges() const;

  std::vector<std::string> names(VertexSet s) const;
  // Throws PreconditionError on an unknown identifier.
  VertexSet to_set(std::span<const std::string> names) const;

  friend bool operator==(const LabelledGraph& a, const LabelledGraph& b) {
    return a.names_ == b.names_ && a.labels_ == b.labels_;
  }
  friend std::strong_ordering operator<=>(const LabelledGraph& a, const LabelledGraph& b);

 private:
  LabelledGraph() = default;

  std::vector<std::string> names_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<int> labels_;  // row-major |V| x |V|, symmetric
  std::size_t edge_count_ = 0;
};

// Graph on `s` with every edge of `g` between members of `s`.
// Throws PreconditionError when `s` is empty or not a subset of V(g).
LabelledGraph full_subgraph(const LabelledGraph& g, VertexSet s);

// Throws PreconditionError on an out-of-range vertex.
VertexSet link(const LabelledGraph& g, int v);
VertexSet star(const LabelledGraph& g, int v);

bool is_even(const LabelledGraph& g);
bool is_clique(const LabelledGraph& g, VertexSet s);
bool is_clique(const LabelledGraph& g);

// Even FC criterion: every triangle has at least two edges labelled 2.
// Throws PreconditionError for graphs that are not even.
bool is_fc_even(const LabelledGraph& g);

// Bron–Kerbosch with pivoting. Canonically ordered list, isolated vertices
// appear as singletons.
std::vector<VertexSet> enumerate_maximal_cliques(const LabelledGraph& g);

std::vector<VertexSet> connected_components(const LabelledGraph& g);
bool is_connected(const LabelledGraph& g);
bool is_tree(const LabelledGraph& g);

struct SphericalFactor {
  // A single vertex (u == v, label 0) contributes a Z factor; a heavy edge
  // (label even, >= 4) contributes a dihedral factor.
  int u;
  int v;
  int label;
  bool is_vertex() const { return u == v; }
  friend bool operator==(const SphericalFactor&, const SphericalFactor&) = default;
};

struct SphericalFactorization {
  std::vector<SphericalFactor> factors;  // ordered by smallest vertex
  int heavy_count() const;
};

// Two heavy edges that share `shared`.
struct NotSpherical {
  Edge first;
  Edge second;
  int shared;
};

using SphericalResult = std::variant<SphericalFactorization, NotSpherical>;

// Decomposition of an even clique into Z and dihedral factors. The clique
// is spherical exactly when its heavy edges form a matching. Throws
// PreconditionError when `g` is not an even clique.
SphericalResult spherical_factorization(const LabelledGraph& g);

struct JoinDecomposition {
  std::vector<VertexSet> factors;  // ordered by smallest vertex
};

// Finest partition of V(g) whose cross pairs are all edges labelled 2.
JoinDecomposition join_decomposition(const LabelledGraph& g);

// Adds the edge {u, v} with `label`. Throws PreconditionError when u and v
// are already adjacent, equal, or the label is below 2.
LabelledGraph add_edge(const LabelledGraph& g, int u, int v, int label);

// Adds every missing edge with label 2.
LabelledGraph two_completion(const LabelledGraph& g);

std::string describe(const LabelledGraph& g, VertexSet s);
std::string describe(const LabelledGraph& g, const Edge& e);

}  // namespace artin::graph
