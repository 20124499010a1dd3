#pragma once

// Graph builders and brute-force oracles shared by the test binaries. The
// oracles work on a plain label matrix and never call into graph_core.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "artin/graph.hpp"

namespace testing {

using artin::graph::LabelledGraph;
using artin::graph::NamedEdge;

inline LabelledGraph make(std::vector<std::string> vertices, std::vector<NamedEdge> edges) {
  return LabelledGraph::build(std::move(vertices), edges);
}

// Edges ab, ac, bc with the given labels.
inline LabelledGraph triangle(int ab, int ac, int bc) {
  return make({"a", "b", "c"}, {{"a", "b", ab}, {"a", "c", ac}, {"b", "c", bc}});
}

inline LabelledGraph path(std::vector<int> labels) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= labels.size(); ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<NamedEdge> edges;
  for (std::size_t i = 0; i < labels.size(); ++i) edges.push_back({names[i], names[i + 1], labels[i]});
  return make(names, edges);
}

// Centre c with leaves a, b, d.
inline LabelledGraph three_star(int l1, int l2, int l3) {
  return make({"a", "b", "c", "d"}, {{"c", "a", l1}, {"c", "b", l2}, {"c", "d", l3}});
}

inline LabelledGraph four_cycle(int label) {
  return make({"a", "b", "c", "d"}, {{"a", "b", label}, {"b", "c", label}, {"c", "d", label}, {"a", "d", label}});
}

inline LabelledGraph complete(int n, int label) {
  std::vector<std::string> names;
  std::vector<NamedEdge> edges;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({names[i], names[j], label});
  }
  return make(names, edges);
}

// Symmetric label matrix, 0 = no edge. Vertex i is named "v<i>".
struct Matrix {
  int n = 0;
  std::array<std::array<int, 8>, 8> m{};

  int at(int i, int j) const { return m[i][j]; }
  void set(int i, int j, int label) { m[i][j] = m[j][i] = label; }

  LabelledGraph graph() const {
    std::vector<std::string> names;
    std::vector<NamedEdge> edges;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (m[i][j] != 0) edges.push_back({names[i], names[j], m[i][j]});
      }
    }
    return LabelledGraph::build(names, edges);
  }

  static Matrix of(const LabelledGraph& g) {
    Matrix x;
    x.n = static_cast<int>(g.vertex_count());
    for (int i = 0; i < x.n; ++i) {
      for (int j = 0; j < x.n; ++j) x.m[i][j] = g.label(i, j);
    }
    return x;
  }
};

// Number of unordered pairs of an n-vertex graph, and the pair order used
// by the enumerators: (0,1), (0,2), ..., (n-2,n-1).
inline std::vector<std::pair<int, int>> pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

namespace oracle {

inline bool is_clique(const Matrix& g, std::uint32_t s) {
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if ((s >> i & 1) && (s >> j & 1) && g.at(i, j) == 0) return false;
    }
  }
  return true;
}

// Even clique spherical: no two heavy edges share a vertex.
inline bool heavy_matching(const Matrix& g, std::uint32_t s) {
  for (int v = 0; v < g.n; ++v) {
    if (!(s >> v & 1)) continue;
    int heavy = 0;
    for (int w = 0; w < g.n; ++w) {
      if (w != v && (s >> w & 1) && g.at(v, w) >= 4) ++heavy;
    }
    if (heavy > 1) return false;
  }
  return true;
}

inline bool all_even(const Matrix& g) {
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if (g.at(i, j) % 2 != 0) return false;
    }
  }
  return true;
}

// The FC-type definition for even graphs: every clique (all subsets) is
// spherical.
inline bool every_clique_spherical(const Matrix& g) {
  for (std::uint32_t s = 1; s < (1U << g.n); ++s) {
    if (is_clique(g, s) && !heavy_matching(g, s)) return false;
  }
  return true;
}

inline std::vector<std::uint32_t> maximal_cliques(const Matrix& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 1; s < (1U << g.n); ++s) {
    if (!is_clique(g, s)) continue;
    bool maximal = true;
    for (int v = 0; v < g.n && maximal; ++v) {
      if (!(s >> v & 1) && is_clique(g, s | (1U << v))) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

inline int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Connected components of the graph on `s`, as bitmasks.
inline std::vector<std::uint32_t> components(const Matrix& g, std::uint32_t s) {
  std::vector<int> parent(g.n);
  for (int i = 0; i < g.n; ++i) parent[i] = i;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if ((s >> i & 1) && (s >> j & 1) && g.at(i, j) != 0) parent[find(parent, i)] = find(parent, j);
    }
  }
  std::vector<std::uint32_t> out;
  for (int i = 0; i < g.n; ++i) {
    if (!(s >> i & 1)) continue;
    std::uint32_t c = 0;
    for (int j = 0; j < g.n; ++j) {
      if ((s >> j & 1) && find(parent, j) == find(parent, i)) c |= 1U << j;
    }
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

// Blocks of the finest 2-join of `s`: components of "not joined by a
// 2-labelled edge".
inline std::vector<std::uint32_t> join_blocks(const Matrix& g, std::uint32_t s) {
  std::vector<int> parent(g.n);
  for (int i = 0; i < g.n; ++i) parent[i] = i;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if ((s >> i & 1) && (s >> j & 1) && g.at(i, j) != 2) parent[find(parent, i)] = find(parent, j);
    }
  }
  std::vector<std::uint32_t> out;
  for (int i = 0; i < g.n; ++i) {
    if (!(s >> i & 1)) continue;
    std::uint32_t c = 0;
    for (int j = 0; j < g.n; ++j) {
      if ((s >> j & 1) && find(parent, j) == find(parent, i)) c |= 1U << j;
    }
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

inline int edges_within(const Matrix& g, std::uint32_t s) {
  int e = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if ((s >> i & 1) && (s >> j & 1) && g.at(i, j) != 0) ++e;
    }
  }
  return e;
}

inline bool is_tree(const Matrix& g, std::uint32_t s) {
  const int n = __builtin_popcount(s);
  return components(g, s).size() == 1 && edges_within(g, s) == n - 1;
}

inline bool even_fc(const Matrix& g, std::uint32_t s) {
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if ((s >> i & 1) && (s >> j & 1) && g.at(i, j) % 2 != 0) return false;
    }
  }
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      for (int k = j + 1; k < g.n; ++k) {
        if (!((s >> i & 1) && (s >> j & 1) && (s >> k & 1))) continue;
        const int a = g.at(i, j), b = g.at(i, k), c = g.at(j, k);
        if (a == 0 || b == 0 || c == 0) continue;
        if ((a == 2) + (b == 2) + (c == 2) < 2) return false;
      }
    }
  }
  return true;
}

// The classes a poly-free certificate is promised for: trees, even FC-type
// graphs, 2-joins of members and disjoint unions of members.
inline bool certified_class(const Matrix& g, std::uint32_t s) {
  if (is_tree(g, s) || even_fc(g, s)) return true;
  const auto comps = components(g, s);
  if (comps.size() > 1) {
    for (auto c : comps) {
      if (!certified_class(g, c)) return false;
    }
    return true;
  }
  const auto blocks = join_blocks(g, s);
  if (blocks.size() > 1) {
    for (auto b : blocks) {
      if (!certified_class(g, b)) return false;
    }
    return true;
  }
  return false;
}

inline bool certified_class(const Matrix& g) { return certified_class(g, (1U << g.n) - 1); }

}  // namespace oracle
}  // namespace testing
