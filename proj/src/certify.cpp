#include "artin/certify.hpp"

#include "artin/decompose.hpp"
#include "artin/graph_io.hpp"

namespace artin::certify {

namespace {

using Json = nlohmann::ordered_json;
using graph::VertexSet;

std::string whole(const LabelledGraph& g) { return graph::describe(g, g.all()); }

std::string pair_name(const LabelledGraph& g, const graph::Edge& e) { return g.name(e.u) + g.name(e.v); }

struct PolyAttempt {
  std::optional<Chain> chain;
  std::vector<RuleAttempt> attempts;
  std::vector<std::string> trace;
};

struct FjcAttempt {
  std::optional<FjcNode> node;
  std::vector<RuleAttempt> attempts;
  std::vector<std::string> trace;
};

std::optional<graph::Edge> first_odd_edge(const LabelledGraph& g) {
  for (const auto& e : g.edges()) {
    if (e.label % 2 != 0) return e;
  }
  return std::nullopt;
}

std::string odd_reason(const LabelledGraph& g, const graph::Edge& e) {
  return "edge " + pair_name(g, e) + " has odd label " + std::to_string(e.label);
}

template <typename Attempt>
void absorb(Attempt& into, const Attempt& from) {
  into.attempts.insert(into.attempts.end(), from.attempts.begin(), from.attempts.end());
}

PolyAttempt polyfree(const LabelledGraph& g) {
  PolyAttempt out;
  const std::string subject = whole(g);
  auto fail = [&](const char* rule, std::string reason) { out.attempts.push_back({rule, std::move(reason), subject}); };
  auto succeed = [&](const char* rule, Chain chain, const std::vector<PolyAttempt>& subs = {}) {
    out.chain = std::move(chain);
    out.attempts.clear();
    out.trace = {rule};
    for (const auto& s : subs) out.trace.insert(out.trace.end(), s.trace.begin(), s.trace.end());
    return out;
  };

  if (g.vertex_count() == 1) return succeed("single-vertex", decompose::tree_reduction(g));
  fail("single-vertex", std::to_string(g.vertex_count()) + " vertices");

  const auto comps = graph::connected_components(g);
  if (comps.size() >= 2) {
    std::vector<PolyAttempt> subs;
    std::vector<Chain> chains;
    bool ok = true;
    for (const auto c : comps) {
      subs.push_back(polyfree(graph::full_subgraph(g, c)));
      if (!subs.back().chain) {
        ok = false;
        fail("disconnected", "component " + graph::describe(g, c) + " is not certified");
        absorb(out, subs.back());
        break;
      }
      chains.push_back(*subs.back().chain);
    }
    if (ok) return succeed("disconnected", decompose::compose_components(g, chains), subs);
  } else {
    fail("disconnected", "graph is connected");
  }

  if (graph::is_tree(g)) return succeed("tree", decompose::tree_reduction(g));
  fail("tree", "graph is not a tree");

  if (const auto odd = first_odd_edge(g)) {
    fail("even/spherical", odd_reason(g, *odd));
  } else {
    const auto reduction = decompose::clique_reduction_chain(g);
    std::optional<RuleAttempt> bad;
    for (const auto c : reduction.cliques) {
      const auto t = graph::full_subgraph(g, c);
      const auto r = graph::spherical_factorization(t);
      if (const auto* ns = std::get_if<graph::NotSpherical>(&r)) {
        bad = RuleAttempt{"even/spherical",
                          "heavy edges " + pair_name(t, ns->first) + ", " + pair_name(t, ns->second) + " share " +
                              t.name(ns->shared),
                          graph::describe(g, c)};
        break;
      }
    }
    if (!bad) {
      decompose::ChainBuilder b(decompose::GroupDescriptor::artin(g));
      b.replay(reduction.chain);
      for (const auto c : reduction.cliques) b.replay(decompose::spherical_tower(graph::full_subgraph(g, c)));
      return succeed("even/spherical", std::move(b).finish());
    }
    out.attempts.push_back(*bad);
  }

  const auto join = graph::join_decomposition(g);
  if (join.factors.size() >= 2) {
    std::vector<PolyAttempt> subs;
    std::vector<Chain> chains;
    bool ok = true;
    for (const auto f : join.factors) {
      subs.push_back(polyfree(graph::full_subgraph(g, f)));
      if (!subs.back().chain) {
        ok = false;
        fail("join", "join factor " + graph::describe(g, f) + " is not certified");
        absorb(out, subs.back());
        break;
      }
      chains.push_back(*subs.back().chain);
    }
    if (ok) return succeed("join", decompose::compose_join(g, join.factors, chains), subs);
  } else {
    fail("join", "no splitting as a join over edges labelled 2");
  }

  const auto completion = graph::two_completion(g);
  if (completion != g) {
    auto sub = polyfree(completion);
    if (sub.chain) {
      return succeed("two-completion", decompose::concatenate(decompose::completion_chain(g, completion), *sub.chain),
                     {sub});
    }
    fail("two-completion", "completion " + whole(completion) + " is not certified");
  } else {
    fail("two-completion", "graph is already complete");
  }
  return out;
}

PolyFreeCertificate make_polyfree(const LabelledGraph& g, PolyAttempt a) {
  PolyFreeCertificate c{g, graph::content_hash(g), a.chain->free_steps(), std::move(*a.chain), std::move(a.trace)};
  return c;
}

// Base facts for an even clique.
FjcAttempt clique_base(const LabelledGraph& t) {
  FjcAttempt out;
  bool large = t.edge_count() > 0;
  for (const auto& e : t.edges()) large = large && e.label >= kLargeLabel;
  if (large) {
    Json evidence;
    evidence["threshold"] = kLargeLabel;
    out.node = FjcNode{"CliqueAllLabelsAtLeast6", t, std::move(evidence), {}};
    out.trace = {"clique-large-labels"};
    return out;
  }
  if (t.vertex_count() <= 3) {
    out.node = FjcNode{"CliqueAtMost3", t, Json::object(), {}};
    out.trace = {"clique-at-most-3"};
    return out;
  }
  const auto join = graph::join_decomposition(t);
  if (join.factors.size() >= 2) {
    FjcNode node{"JoinOf2Labelled", t, Json::object(), {}};
    node.evidence["interpretation"] = "nested 2-joins of base cliques";
    std::vector<std::string> trace{"clique-join"};
    for (const auto f : join.factors) {
      auto sub = clique_base(graph::full_subgraph(t, f));
      if (!sub.node) {
        out.attempts.push_back({"clique-base", "join factor " + graph::describe(t, f) + " has no base fact", whole(t)});
        absorb(out, sub);
        return out;
      }
      node.children.push_back(std::move(*sub.node));
      trace.insert(trace.end(), sub.trace.begin(), sub.trace.end());
    }
    out.node = std::move(node);
    out.trace = std::move(trace);
    return out;
  }
  out.attempts.push_back({"clique-base",
                          std::to_string(t.vertex_count()) + " vertices, a label below " + std::to_string(kLargeLabel) +
                              " and no splitting as a join over edges labelled 2",
                          whole(t)});
  return out;
}

FjcAttempt fjcw(const LabelledGraph& g) {
  FjcAttempt out;
  const std::string subject = whole(g);
  auto fail = [&](const char* rule, std::string reason) { out.attempts.push_back({rule, std::move(reason), subject}); };
  auto succeed = [&](const char* rule, FjcNode node, const std::vector<std::vector<std::string>>& traces = {}) {
    out.node = std::move(node);
    out.attempts.clear();
    out.trace = {rule};
    for (const auto& t : traces) out.trace.insert(out.trace.end(), t.begin(), t.end());
    return out;
  };

  if (auto pf = polyfree(g); pf.chain) {
    std::vector<std::string> trace = pf.trace;
    Json evidence;
    evidence["certificate"] = to_json(make_polyfree(g, std::move(pf)));
    return succeed("normally-poly-free", FjcNode{"NormallyPolyFree", g, std::move(evidence), {}}, {trace});
  }
  fail("normally-poly-free", "no poly-free certificate");

  if (const auto odd = first_odd_edge(g)) {
    fail("clique-reduction", odd_reason(g, *odd));
  } else if (graph::is_clique(g)) {
    auto base = clique_base(g);
    if (base.node) {
      out.node = std::move(base.node);
      out.attempts.clear();
      out.trace = std::move(base.trace);
      return out;
    }
    absorb(out, base);
  } else {
    const auto reduction = decompose::clique_reduction_chain(g);
    FjcNode node{"CliqueReduction", g, Json::object(), {}};
    node.evidence["chain"] = decompose::to_json(reduction.chain);
    std::vector<std::vector<std::string>> traces;
    bool ok = true;
    for (const auto c : reduction.cliques) {
      auto base = clique_base(graph::full_subgraph(g, c));
      if (!base.node) {
        ok = false;
        fail("clique-reduction", "clique " + graph::describe(g, c) + " has no base fact");
        absorb(out, base);
        break;
      }
      node.children.push_back(std::move(*base.node));
      traces.push_back(std::move(base.trace));
    }
    if (ok) return succeed("clique-reduction", std::move(node), traces);
  }

  auto product_rule = [&](const char* rule, const char* node_rule, const std::vector<VertexSet>& parts,
                          const char* what) -> bool {
    FjcNode node{node_rule, g, Json::object(), {}};
    std::vector<std::vector<std::string>> traces;
    for (const auto p : parts) {
      auto sub = fjcw(graph::full_subgraph(g, p));
      if (!sub.node) {
        fail(rule, std::string(what) + " " + graph::describe(g, p) + " is not certified");
        absorb(out, sub);
        return false;
      }
      node.children.push_back(std::move(*sub.node));
      traces.push_back(std::move(sub.trace));
    }
    succeed(rule, std::move(node), traces);
    return true;
  };

  const auto comps = graph::connected_components(g);
  if (comps.size() >= 2) {
    if (product_rule("free-product", "FreeProduct", comps, "component")) return out;
  } else {
    fail("free-product", "graph is connected");
  }
  const auto join = graph::join_decomposition(g);
  if (join.factors.size() >= 2) {
    if (product_rule("direct-product", "DirectProduct", join.factors, "join factor")) return out;
  } else {
    fail("direct-product", "no splitting as a join over edges labelled 2");
  }

  const auto completion = graph::two_completion(g);
  if (completion != g) {
    auto sub = fjcw(completion);
    if (sub.node) {
      FjcNode node{"Subgraph", g, Json::object(), {}};
      Json added = Json::array();
      for (const auto& e : completion.edges()) {
        if (!g.adjacent(e.u, e.v)) added.push_back(Json::array({g.name(e.u), g.name(e.v), e.label}));
      }
      node.evidence["added"] = std::move(added);
      node.children.push_back(std::move(*sub.node));
      return succeed("subgraph", std::move(node), {sub.trace});
    }
    fail("subgraph", "completion " + whole(completion) + " is not certified");
    absorb(out, sub);
  } else {
    fail("subgraph", "graph is already complete");
  }
  return out;
}

Json trace_json(const std::vector<std::string>& trace) {
  Json out = Json::array();
  for (const auto& t : trace) out.push_back(t);
  return out;
}

}  // namespace

PolyFreeVerdict certify_polyfree(const LabelledGraph& g) {
  auto a = polyfree(g);
  if (!a.chain) return {Unknown{std::move(a.attempts)}};
  return {make_polyfree(g, std::move(a))};
}

FjcVerdict certify_fjcw(const LabelledGraph& g) {
  auto a = fjcw(g);
  if (!a.node) return {Unknown{std::move(a.attempts)}};
  return {FjcCertificate{g, graph::content_hash(g), std::move(*a.node), std::move(a.trace)}};
}

nlohmann::ordered_json to_json(const PolyFreeCertificate& c) {
  Json out;
  out["format"] = kPolyFreeFormat;
  out["graph_hash"] = c.graph_hash;
  out["claim"] = Json{{"kind", "NormallyPolyFree"}, {"length", c.length}};
  out["rule_trace"] = trace_json(c.rule_trace);
  out["chain"] = decompose::to_json(c.chain);
  return out;
}

nlohmann::ordered_json to_json(const FjcNode& n) {
  Json out;
  out["rule"] = n.rule;
  out["graph"] = graph::graph_to_json(n.graph);
  out["evidence"] = n.evidence;
  Json children = Json::array();
  for (const auto& c : n.children) children.push_back(to_json(c));
  out["children"] = std::move(children);
  return out;
}

nlohmann::ordered_json to_json(const FjcCertificate& c) {
  Json out;
  out["format"] = kFjcFormat;
  out["graph_hash"] = c.graph_hash;
  out["graph"] = graph::graph_to_json(c.graph);
  out["derivation"] = to_json(c.derivation);
  out["rule_trace"] = trace_json(c.rule_trace);
  return out;
}

nlohmann::ordered_json to_json(const Unknown& u) {
  Json out;
  out["verdict"] = "Unknown";
  Json attempts = Json::array();
  for (const auto& a : u.attempts) {
    attempts.push_back(Json{{"rule", a.rule}, {"reason", a.reason}, {"subject", a.subject}});
  }
  out["attempts"] = std::move(attempts);
  return out;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump() + "\n"; }

}  // namespace artin::certify
