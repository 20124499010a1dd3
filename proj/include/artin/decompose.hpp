#pragma once

// Constructive reductions of Artin groups: vertex-star splittings, the
// clique-reduction chain, spherical towers, tree folding, edge additions and
// the free-product / join compositions.

#include <optional>
#include <vector>

#include "artin/chain.hpp"
#include "artin/graph.hpp"

namespace artin::decompose {

using graph::LabelledGraph;
using graph::VertexSet;

// nullopt iff g is a clique, else the least vertex whose star is not V(g).
std::optional<int> choose_split_vertex(const LabelledGraph& g);

struct AmalgamSplit {
  LabelledGraph graph;
  int vertex;
  VertexSet star;
  VertexSet link;
  VertexSet rest;  // V(g) minus the vertex
};

// Throws PreconditionError when the star of v0 is all of g.
AmalgamSplit split_at_vertex(const LabelledGraph& g, int v0);

struct CliqueReduction {
  Chain chain;
  // Vertex sets of g, one per factor of the final product, in its order.
  std::vector<VertexSet> cliques;
};

// Repeatedly splits the first non-clique factor at its split vertex via the
// product of the two retractions. Throws PreconditionError on odd labels.
CliqueReduction clique_reduction_chain(const LabelledGraph& g);

// Artin(T) down to Trivial for a spherical even clique: factorisation,
// R on each dihedral factor, then one Z coordinate at a time. Throws
// PreconditionError when T is not a spherical even clique.
Chain spherical_tower(const LabelledGraph& t);

// Folds the least leaf onto its neighbour until one edge is left, then chi
// onto Z, then Z onto the trivial group. Throws PreconditionError when g is
// not a tree.
Chain tree_reduction(const LabelledGraph& g);

// g2 is g1 plus exactly one edge. Throws PreconditionError otherwise.
QuotientStep edge_addition_step(const LabelledGraph& g1, const LabelledGraph& g2);

// Adds the edges of `target` missing from g in canonical order. Edges with
// label 2 are tagged as completion steps. Throws PreconditionError unless
// g is a spanning subgraph of target with agreeing labels.
Chain completion_chain(const LabelledGraph& g, const LabelledGraph& target);

struct FreeProductSplit {
  GroupDescriptor descriptor;
  std::vector<VertexSet> components;
};

// Throws PreconditionError for connected g.
FreeProductSplit free_product_split(const LabelledGraph& g);

// Artin(g) split into its components, followed by the component chains run
// level by level. chains[i] must start at Artin of component i (in
// connected_components order) and end at Trivial.
Chain compose_components(const LabelledGraph& g, const std::vector<Chain>& chains);

// Artin(g) as the direct product over a 2-join, followed by each factor's
// chain in turn. chains[i] must start at Artin(g[factors[i]]).
Chain compose_join(const LabelledGraph& g, const std::vector<VertexSet>& factors, const std::vector<Chain>& chains);

// Chain from Artin(g) that first runs `head` and then `tail`, where tail
// starts at head's end.
Chain concatenate(const Chain& head, const Chain& tail);

}  // namespace artin::decompose
