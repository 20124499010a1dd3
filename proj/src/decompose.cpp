#include "artin/decompose.hpp"

#include <algorithm>

#include "artin/error.hpp"

namespace artin::decompose {

namespace {

using Json = nlohmann::ordered_json;

Json names_json(const LabelledGraph& g, VertexSet s) {
  Json out = Json::array();
  for (const auto& n : g.names(s)) out.push_back(n);
  return out;
}

GroupDescriptor artin_on(const LabelledGraph& g, VertexSet s) {
  return GroupDescriptor::artin(graph::full_subgraph(g, s));
}

LocalStep kill_coordinate() {
  return {GroupDescriptor::integers(), GroupDescriptor::trivial(), "Z -> 1", KernelClass::Free, tag::kCoordinate, Json::object(), {}};
}

}  // namespace

std::optional<int> choose_split_vertex(const LabelledGraph& g) {
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    if (graph::star(g, v) != g.all()) return v;
  }
  return std::nullopt;
}

AmalgamSplit split_at_vertex(const LabelledGraph& g, int v0) {
  const VertexSet st = graph::star(g, v0);
  if (st == g.all()) throw PreconditionError("the star of " + g.name(v0) + " is the whole graph");
  const VertexSet rest = g.all().without(v0);
  return {g, v0, st, st & rest, rest};
}

CliqueReduction clique_reduction_chain(const LabelledGraph& g) {
  if (!graph::is_even(g)) throw PreconditionError("clique reduction needs an even graph");
  ChainBuilder b(GroupDescriptor::artin(g));
  for (;;) {
    const auto& state = b.state();
    std::vector<GroupDescriptor> entries =
        state.is(GroupDescriptor::Kind::Product) ? state.factors() : std::vector<GroupDescriptor>{state};
    const auto it = std::find_if(entries.begin(), entries.end(),
                                 [](const GroupDescriptor& d) { return !graph::is_clique(d.graph()); });
    if (it == entries.end()) break;
    const LabelledGraph f = it->graph();
    const auto split = split_at_vertex(f, *choose_split_vertex(f));
    Json evidence;
    evidence["vertex"] = f.name(split.vertex);
    evidence["star"] = names_json(f, split.star);
    evidence["link"] = names_json(f, split.link);
    evidence["rest"] = names_json(f, split.rest);
    b.apply({*it, GroupDescriptor::product({artin_on(f, split.star), artin_on(f, split.rest)}), "pi_st x pi_rest",
             KernelClass::Free, tag::kCliqueSplit, std::move(evidence), {}});
  }

  CliqueReduction out;
  const auto& end = b.state();
  const std::vector<GroupDescriptor> entries =
      end.is(GroupDescriptor::Kind::Product) ? end.factors() : std::vector<GroupDescriptor>{end};
  for (const auto& e : entries) out.cliques.push_back(g.to_set(e.graph().vertices()));
  out.chain = std::move(b).finish();
  return out;
}

Chain spherical_tower(const LabelledGraph& t) {
  if (!graph::is_even(t) || !graph::is_clique(t)) throw PreconditionError("spherical tower needs an even clique");
  const auto result = graph::spherical_factorization(t);
  if (const auto* bad = std::get_if<graph::NotSpherical>(&result)) {
    throw PreconditionError("clique is not spherical: heavy edges " + graph::describe(t, bad->first) + " and " +
                            graph::describe(t, bad->second) + " share " + t.name(bad->shared));
  }
  const auto& factors = std::get<graph::SphericalFactorization>(result).factors;

  ChainBuilder b(GroupDescriptor::artin(t));
  std::vector<GroupDescriptor> pieces;
  Json listed = Json::array();
  for (const auto& f : factors) {
    if (f.is_vertex()) {
      pieces.push_back(GroupDescriptor::integers());
      listed.push_back(names_json(t, VertexSet::single(f.u)));
    } else {
      const VertexSet pair = VertexSet::single(f.u).with(f.v);
      pieces.push_back(artin_on(t, pair));
      listed.push_back(names_json(t, pair));
    }
  }
  Json evidence;
  evidence["factors"] = std::move(listed);
  b.apply({GroupDescriptor::artin(t), GroupDescriptor::product(pieces), "factor isomorphism", KernelClass::Trivial,
           tag::kSpherical, std::move(evidence), {}});

  int rank = 0;
  for (const auto& f : factors) {
    if (f.is_vertex()) {
      ++rank;
      continue;
    }
    rank += 2;
    Json ev;
    ev["edge"] = Json::array({t.name(f.u), t.name(f.v)});
    ev["label"] = f.label;
    b.apply({artin_on(t, VertexSet::single(f.u).with(f.v)),
             GroupDescriptor::product({GroupDescriptor::integers(), GroupDescriptor::integers()}),
             "R: " + t.name(f.u) + " -> (1,0), " + t.name(f.v) + " -> (0,1)", KernelClass::Free, tag::kRetraction,
             std::move(ev), {}});
  }
  for (int i = 0; i < rank; ++i) b.apply(kill_coordinate());
  return std::move(b).finish();
}

Chain tree_reduction(const LabelledGraph& g) {
  if (!graph::is_tree(g)) throw PreconditionError("tree reduction needs a tree");
  ChainBuilder b(GroupDescriptor::artin(g));
  if (g.vertex_count() == 1) {
    Json evidence;
    evidence["factors"] = Json::array({Json::array({g.name(0)})});
    b.apply({GroupDescriptor::artin(g), GroupDescriptor::integers(), "factor isomorphism", KernelClass::Trivial,
             tag::kSpherical, std::move(evidence), {}});
    b.apply(kill_coordinate());
    return std::move(b).finish();
  }

  LabelledGraph cur = g;
  while (cur.vertex_count() > 2) {
    int leaf = 0;
    while (cur.degree(leaf) != 1) ++leaf;
    const int onto = cur.neighbours(leaf).front();
    Json evidence;
    evidence["leaf"] = cur.name(leaf);
    evidence["onto"] = cur.name(onto);
    evidence["label"] = cur.label(leaf, onto);
    LabelledGraph next = graph::full_subgraph(cur, cur.all().without(leaf));
    b.apply({GroupDescriptor::artin(cur), GroupDescriptor::artin(next), cur.name(leaf) + " -> " + cur.name(onto),
             KernelClass::Free, tag::kTreeFold, std::move(evidence), {}});
    cur = std::move(next);
  }
  Json evidence;
  evidence["edge"] = Json::array({cur.name(0), cur.name(1)});
  evidence["label"] = cur.label(0, 1);
  b.apply({GroupDescriptor::artin(cur), GroupDescriptor::integers(),
           "chi: " + cur.name(0) + ", " + cur.name(1) + " -> 1", KernelClass::Free, tag::kChi, std::move(evidence), {}});
  b.apply(kill_coordinate());
  return std::move(b).finish();
}

QuotientStep edge_addition_step(const LabelledGraph& g1, const LabelledGraph& g2) {
  if (g1.vertices() != g2.vertices()) throw PreconditionError("edge addition must keep the vertex set");
  std::optional<graph::Edge> added;
  for (const auto& e : g2.edges()) {
    const int before = g1.label(e.u, e.v);
    if (before == 0) {
      if (added) throw PreconditionError("more than one edge added");
      added = e;
    } else if (before != e.label) {
      throw PreconditionError("label of " + graph::describe(g1, graph::Edge{e.u, e.v, before}) + " changed");
    }
  }
  if (!added) throw PreconditionError("no edge added");
  if (g1.edge_count() + 1 != g2.edge_count()) throw PreconditionError("edge removed");

  Json evidence;
  evidence["edge"] = Json::array({g2.name(added->u), g2.name(added->v)});
  evidence["label"] = added->label;
  ChainBuilder b(GroupDescriptor::artin(g1));
  b.apply({GroupDescriptor::artin(g1), GroupDescriptor::artin(g2), "identity on generators", KernelClass::Free,
           added->label == 2 ? tag::kCompletion : tag::kEdgeAddition, std::move(evidence), {}});
  return std::move(b).finish().steps.front();
}

Chain completion_chain(const LabelledGraph& g, const LabelledGraph& target) {
  if (g.vertices() != target.vertices()) throw PreconditionError("completion must keep the vertex set");
  for (const auto& e : g.edges()) {
    if (target.label(e.u, e.v) != e.label) {
      throw PreconditionError("edge " + graph::describe(g, e) + " is not in the target with the same label");
    }
  }
  Chain out{GroupDescriptor::artin(g), {}};
  LabelledGraph cur = g;
  for (const auto& e : target.edges()) {
    if (cur.adjacent(e.u, e.v)) continue;
    LabelledGraph next = graph::add_edge(cur, e.u, e.v, e.label);
    out.steps.push_back(edge_addition_step(cur, next));
    cur = std::move(next);
  }
  return out;
}

FreeProductSplit free_product_split(const LabelledGraph& g) {
  const auto comps = graph::connected_components(g);
  if (comps.size() < 2) throw PreconditionError("free product split needs a disconnected graph");
  std::vector<GroupDescriptor> pieces;
  for (const auto c : comps) pieces.push_back(artin_on(g, c));
  return {GroupDescriptor::free_product(std::move(pieces)), comps};
}

Chain compose_components(const LabelledGraph& g, const std::vector<Chain>& chains) {
  const auto split = free_product_split(g);
  if (chains.size() != split.components.size()) throw PreconditionError("one chain per component expected");
  std::vector<GroupDescriptor> cur;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (chains[i].start != artin_on(g, split.components[i])) {
      throw PreconditionError("chain " + std::to_string(i) + " does not start at its component");
    }
    if (chains[i].end() != GroupDescriptor::trivial()) {
      throw PreconditionError("chain " + std::to_string(i) + " does not end at the trivial group");
    }
    cur.push_back(chains[i].start);
  }

  ChainBuilder b(GroupDescriptor::artin(g));
  Json evidence;
  Json listed = Json::array();
  for (const auto c : split.components) listed.push_back(names_json(g, c));
  evidence["components"] = std::move(listed);
  b.apply({GroupDescriptor::artin(g), split.descriptor, "free product of components", KernelClass::Trivial,
           tag::kFreeProduct, std::move(evidence), {}});

  std::vector<std::size_t> pos(chains.size(), 0);
  for (;;) {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < chains.size(); ++i) {
      if (pos[i] < chains[i].steps.size()) live.push_back(i);
    }
    if (live.empty()) break;

    const GroupDescriptor state = b.state();
    const auto open = std::count_if(cur.begin(), cur.end(), [](const GroupDescriptor& d) { return d != GroupDescriptor::trivial(); });
    if (open == 1) {
      // A single component is left; its steps apply to the state directly.
      const auto& s = chains[live.front()].steps[pos[live.front()]++];
      b.apply({s.local_source, s.local_target, s.map, s.kernel, s.justification, s.evidence, s.parts});
      cur[live.front()] = s.target;
      continue;
    }

    // Match free factors to components; equal factors are interchangeable.
    std::vector<bool> used(chains.size(), false);
    std::vector<std::optional<QuotientStep>> parts;
    bool any_free = false;
    for (const auto& entry : state.factors()) {
      std::size_t j = 0;
      while (j < chains.size() && (used[j] || cur[j] != entry)) ++j;
      if (j == chains.size()) throw PreconditionError("free factor " + to_string(entry) + " has no component");
      used[j] = true;
      if (pos[j] < chains[j].steps.size()) {
        const auto& s = chains[j].steps[pos[j]++];
        any_free = any_free || s.kernel == KernelClass::Free;
        parts.emplace_back(s);
        cur[j] = s.target;
      } else {
        parts.emplace_back(std::nullopt);
      }
    }
    b.apply({state, GroupDescriptor::free_product(cur), "componentwise", any_free ? KernelClass::Free : KernelClass::Trivial,
             tag::kFreeProduct, Json::object(), std::move(parts)});
  }
  return std::move(b).finish();
}

Chain compose_join(const LabelledGraph& g, const std::vector<VertexSet>& factors, const std::vector<Chain>& chains) {
  if (factors.size() != chains.size()) throw PreconditionError("one chain per join factor expected");
  std::vector<GroupDescriptor> pieces;
  Json listed = Json::array();
  for (const auto f : factors) {
    pieces.push_back(artin_on(g, f));
    listed.push_back(names_json(g, f));
  }
  Json evidence;
  evidence["factors"] = std::move(listed);
  ChainBuilder b(GroupDescriptor::artin(g));
  b.apply({GroupDescriptor::artin(g), GroupDescriptor::product(std::move(pieces)), "join isomorphism",
           KernelClass::Trivial, tag::kJoin, std::move(evidence), {}});
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (chains[i].start != artin_on(g, factors[i])) {
      throw PreconditionError("chain " + std::to_string(i) + " does not start at its join factor");
    }
    b.replay(chains[i]);
  }
  return std::move(b).finish();
}

Chain concatenate(const Chain& head, const Chain& tail) {
  if (head.end() != tail.start) throw PreconditionError("chains do not meet");
  Chain out = head;
  out.steps.insert(out.steps.end(), tail.steps.begin(), tail.steps.end());
  return out;
}

}  // namespace artin::decompose
