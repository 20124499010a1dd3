#include "artin/verify.hpp"

#include <map>
#include <mutex>
#include <set>

#include "artin/certify.hpp"
#include "artin/descriptor.hpp"
#include "artin/error.hpp"
#include "artin/graph_io.hpp"
#include "artin/kernel_check.hpp"

namespace artin::certify {

namespace {

using decompose::GroupDescriptor;
using graph::LabelledGraph;
using graph::VertexSet;
using Json = nlohmann::json;
using Kind = GroupDescriptor::Kind;

// A side condition that does not hold; reported against the current step
// or node.
struct Reject {
  std::string why;
};

[[noreturn]] void reject(std::string why) { throw Reject{std::move(why)}; }

const Json& field(const Json& obj, const char* key, Json::value_t type, const char* where) {
  if (!obj.is_object() || !obj.contains(key)) throw SchemaError(std::string(where) + " lacks \"" + key + "\"");
  const Json& v = obj[key];
  const bool ok = type == Json::value_t::number_integer ? v.is_number_integer() : v.type() == type;
  if (!ok) throw SchemaError(std::string(where) + ": \"" + key + "\" has the wrong type");
  return v;
}

// Evidence lookups reject rather than throw SchemaError: evidence content is
// part of what is being checked.
const Json& ev_get(const Json& ev, const char* key) {
  if (!ev.contains(key)) reject(std::string("evidence lacks \"") + key + "\"");
  return ev[key];
}

int ev_int(const Json& ev, const char* key) {
  const Json& v = ev_get(ev, key);
  if (!v.is_number_integer()) reject(std::string("evidence \"") + key + "\" is not an integer");
  return v.get<int>();
}

int ev_vertex(const LabelledGraph& g, const Json& v) {
  if (!v.is_string()) reject("evidence vertex is not a string");
  const auto i = g.index_of(v.get<std::string>());
  if (!i) reject("evidence names unknown vertex " + v.get<std::string>());
  return *i;
}

VertexSet ev_set(const LabelledGraph& g, const Json& v) {
  if (!v.is_array()) reject("evidence vertex list is not an array");
  VertexSet s;
  for (const auto& n : v) {
    const int i = ev_vertex(g, n);
    if (s.contains(i)) reject("evidence lists " + g.name(i) + " twice");
    s = s.with(i);
  }
  return s;
}

// Disjoint nonempty sets covering V(g).
std::vector<VertexSet> ev_partition(const LabelledGraph& g, const Json& v) {
  if (!v.is_array()) reject("evidence partition is not an array");
  std::vector<VertexSet> parts;
  VertexSet covered;
  for (const auto& p : v) {
    const VertexSet s = ev_set(g, p);
    if (s.empty()) reject("evidence partition has an empty part");
    if (!(s & covered).empty()) reject("evidence partition parts overlap");
    covered = covered | s;
    parts.push_back(s);
  }
  if (covered != g.all()) reject("evidence partition does not cover " + graph::describe(g, g.all()));
  return parts;
}

const LabelledGraph& artin_of(const GroupDescriptor& d) {
  if (!d.is(Kind::Artin)) reject("acts on " + to_string(d) + ", not an Artin group");
  return d.graph();
}

GroupDescriptor artin_on(const LabelledGraph& g, VertexSet s) {
  return GroupDescriptor::artin(graph::full_subgraph(g, s));
}

void require_cross_labels_2(const LabelledGraph& g, const std::vector<VertexSet>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      parts[i].for_each([&](int u) {
        parts[j].for_each([&](int v) {
          if (g.label(u, v) != 2) {
            reject("pair " + g.name(u) + g.name(v) + " across parts has label " + std::to_string(g.label(u, v)) +
                   ", not 2");
          }
        });
      });
    }
  }
}

// The single edge of a two-vertex graph, checked against evidence.
int edge_label(const LabelledGraph& e, const Json& ev) {
  if (e.vertex_count() != 2 || e.edge_count() != 1) reject(graph::describe(e, e.all()) + " is not a single edge");
  const Json& names = ev_get(ev, "edge");
  if (!names.is_array() || names.size() != 2 || ev_set(e, names) != e.all()) reject("evidence edge does not match");
  const int label = ev_int(ev, "label");
  if (label != e.label(0, 1)) {
    reject("evidence label " + std::to_string(label) + " differs from edge label " + std::to_string(e.label(0, 1)));
  }
  return label;
}

decompose::KernelClass kernel_of(const std::string& s) {
  if (s == "free") return decompose::KernelClass::Free;
  if (s == "trivial") return decompose::KernelClass::Trivial;
  if (s == "poly_free") return decompose::KernelClass::PolyFree;
  throw SchemaError("unknown kernel class '" + s + "'");
}

class Checker {
 public:
  std::vector<std::string> notes;

  // Verifies one step whose source must equal `expected`; returns its target.
  GroupDescriptor step(const Json& s, const GroupDescriptor& expected, decompose::KernelClass* kernel_out = nullptr) {
    const auto source = decompose::descriptor_from_json(field(s, "source", Json::value_t::object, "step"));
    const auto target = decompose::descriptor_from_json(field(s, "target", Json::value_t::object, "step"));
    const auto kernel = kernel_of(field(s, "kernel", Json::value_t::string, "step").get<std::string>());
    const std::string tag = field(s, "justification", Json::value_t::string, "step").get<std::string>();
    const Json& ev = field(s, "evidence", Json::value_t::object, "step");
    if (kernel_out) *kernel_out = kernel;

    if (source != expected) {
      reject("source " + to_string(source) + " does not match the previous target " + to_string(expected));
    }

    GroupDescriptor local = source;
    std::optional<std::size_t> coordinate;
    if (ev.contains("coordinate")) {
      if (!ev["coordinate"].is_number_unsigned()) reject("coordinate is not a non-negative integer");
      coordinate = ev["coordinate"].get<std::size_t>();
      if (!source.is(Kind::Product) || *coordinate >= source.factors().size()) {
        reject("coordinate " + std::to_string(*coordinate) + " is not a factor of " + to_string(source));
      }
      local = source.factors()[*coordinate];
    }

    decompose::KernelClass expected_kernel = decompose::KernelClass::Free;
    const GroupDescriptor local_target = derive(tag, local, ev, expected_kernel);
    if (kernel != expected_kernel) {
      reject("kernel recorded as " + decompose::to_string(kernel) + ", " + tag + " gives " +
             decompose::to_string(expected_kernel));
    }

    GroupDescriptor derived = local_target;
    if (coordinate) {
      std::vector<GroupDescriptor> entries;
      for (std::size_t i = 0; i < source.factors().size(); ++i) {
        if (i != *coordinate) entries.push_back(source.factors()[i]);
      }
      entries.push_back(local_target);
      derived = GroupDescriptor::product(std::move(entries));
    }
    if (derived != target) reject("target " + to_string(target) + " differs from derived " + to_string(derived));
    return target;
  }

 private:
  GroupDescriptor derive(const std::string& tag, const GroupDescriptor& local, const Json& ev,
                         decompose::KernelClass& kernel) {
    using decompose::KernelClass;
    kernel = KernelClass::Free;

    if (tag == decompose::tag::kSpherical) {
      kernel = KernelClass::Trivial;
      const LabelledGraph& t = artin_of(local);
      if (!graph::is_even(t) || !graph::is_clique(t)) reject(graph::describe(t, t.all()) + " is not an even clique");
      const auto parts = ev_partition(t, ev_get(ev, "factors"));
      std::vector<GroupDescriptor> pieces;
      for (const auto p : parts) {
        if (p.size() == 1) {
          pieces.push_back(GroupDescriptor::integers());
        } else if (p.size() == 2) {
          const auto ids = p.indices();
          const int l = t.label(ids[0], ids[1]);
          if (l % 2 != 0 || l < 4) reject("factor " + graph::describe(t, p) + " is not a heavy even edge");
          pieces.push_back(artin_on(t, p));
        } else {
          reject("factor " + graph::describe(t, p) + " has more than two vertices");
        }
      }
      require_cross_labels_2(t, parts);
      return GroupDescriptor::product(std::move(pieces));
    }

    if (tag == decompose::tag::kRetraction) {
      const LabelledGraph& e = artin_of(local);
      const int label = edge_label(e, ev);
      if (label % 2 != 0) reject("R needs an even label, got " + std::to_string(label));
      corroborate(word::CentralExtensionGroup::baumslag_solitar(label / 2), word::KernelMap::R);
      return GroupDescriptor::product({GroupDescriptor::integers(), GroupDescriptor::integers()});
    }

    if (tag == decompose::tag::kCoordinate) {
      if (!local.is(Kind::Integers)) reject("coordinate quotient acts on " + to_string(local) + ", not Z");
      return GroupDescriptor::trivial();
    }

    if (tag == decompose::tag::kCliqueSplit) {
      const LabelledGraph& f = artin_of(local);
      if (!graph::is_even(f)) reject(graph::describe(f, f.all()) + " is not even");
      const int v = ev_vertex(f, ev_get(ev, "vertex"));
      const VertexSet st = graph::star(f, v);
      if (st == f.all()) reject("the star of " + f.name(v) + " is the whole graph");
      const VertexSet rest = f.all().without(v);
      if (ev_set(f, ev_get(ev, "star")) != st || ev_set(f, ev_get(ev, "link")) != (st & rest) ||
          ev_set(f, ev_get(ev, "rest")) != rest) {
        reject("recorded star, link or rest of " + f.name(v) + " is wrong");
      }
      return GroupDescriptor::product({artin_on(f, st), artin_on(f, rest)});
    }

    if (tag == decompose::tag::kTreeFold) {
      const LabelledGraph& f = artin_of(local);
      const int leaf = ev_vertex(f, ev_get(ev, "leaf"));
      const int onto = ev_vertex(f, ev_get(ev, "onto"));
      if (f.degree(leaf) != 1) reject(f.name(leaf) + " has valence " + std::to_string(f.degree(leaf)) + ", not 1");
      if (!f.adjacent(leaf, onto)) reject(f.name(onto) + " is not the neighbour of " + f.name(leaf));
      if (ev_int(ev, "label") != f.label(leaf, onto)) reject("evidence label differs from the leaf edge label");
      return artin_on(f, f.all().without(leaf));
    }

    if (tag == decompose::tag::kChi) {
      const LabelledGraph& e = artin_of(local);
      const int label = edge_label(e, ev);
      if (label % 2 == 0) {
        corroborate(word::CentralExtensionGroup::baumslag_solitar(label / 2), word::KernelMap::Chi);
      } else {
        corroborate(word::CentralExtensionGroup::odd_dihedral((label - 1) / 2), word::KernelMap::Chi);
      }
      return GroupDescriptor::integers();
    }

    if (tag == decompose::tag::kEdgeAddition || tag == decompose::tag::kCompletion) {
      const LabelledGraph& g = artin_of(local);
      const Json& names = ev_get(ev, "edge");
      if (!names.is_array() || names.size() != 2) reject("evidence edge is not a pair");
      const int u = ev_vertex(g, names[0]);
      const int v = ev_vertex(g, names[1]);
      if (u == v) reject("evidence edge is a loop");
      if (g.adjacent(u, v)) {
        reject("edge " + g.name(u) + g.name(v) + " already present with label " + std::to_string(g.label(u, v)));
      }
      const int label = ev_int(ev, "label");
      if (label < 2) reject("edge label below 2");
      if (tag == decompose::tag::kCompletion && label != 2) reject("completion edges carry label 2");
      return GroupDescriptor::artin(graph::add_edge(g, u, v, label));
    }

    if (tag == decompose::tag::kJoin) {
      kernel = KernelClass::Trivial;
      const LabelledGraph& g = artin_of(local);
      const auto parts = ev_partition(g, ev_get(ev, "factors"));
      if (parts.size() < 2) reject("a join needs at least two factors");
      require_cross_labels_2(g, parts);
      std::vector<GroupDescriptor> pieces;
      for (const auto p : parts) pieces.push_back(artin_on(g, p));
      return GroupDescriptor::product(std::move(pieces));
    }

    if (tag == decompose::tag::kFreeProduct && ev.contains("components")) {
      kernel = KernelClass::Trivial;
      const LabelledGraph& g = artin_of(local);
      const auto parts = ev_partition(g, ev["components"]);
      if (parts.size() < 2) reject("a free product split needs at least two components");
      std::vector<GroupDescriptor> pieces;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!graph::is_connected(graph::full_subgraph(g, parts[i]))) {
          reject("component " + graph::describe(g, parts[i]) + " is not connected");
        }
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
          parts[i].for_each([&](int u) {
            if (!(g.neighbours(u) & parts[j]).empty()) reject("an edge joins two listed components");
          });
        }
        pieces.push_back(artin_on(g, parts[i]));
      }
      return GroupDescriptor::free_product(std::move(pieces));
    }

    if (tag == decompose::tag::kFreeProduct && ev.contains("parts")) {
      if (!local.is(Kind::FreeProduct)) reject("level step acts on " + to_string(local) + ", not a free product");
      const Json& parts = ev["parts"];
      const auto& entries = local.factors();
      if (!parts.is_array() || parts.size() != entries.size()) reject("level step needs one part per free factor");
      std::vector<GroupDescriptor> next;
      bool moved = false;
      kernel = KernelClass::Trivial;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (parts[i].is_null()) {
          next.push_back(entries[i]);
          continue;
        }
        moved = true;
        KernelClass k = KernelClass::Free;
        try {
          next.push_back(step(parts[i], entries[i], &k));
        } catch (const Reject& r) {
          reject("part " + std::to_string(i) + ": " + r.why);
        }
        if (k == KernelClass::PolyFree) reject("part " + std::to_string(i) + " has a poly-free kernel");
        if (k == KernelClass::Free) kernel = KernelClass::Free;
      }
      if (!moved) reject("level step moves no factor");
      return GroupDescriptor::free_product(std::move(next));
    }

    reject("unknown justification '" + tag + "'");
  }

  void corroborate(const word::CentralExtensionGroup& g, word::KernelMap map) {
    static std::mutex mutex;
    static std::map<std::string, word::KernelCheckReport> cache;
    const std::string key = g.name() + (map == word::KernelMap::R ? ":R" : ":chi");
    word::KernelCheckReport report;
    {
      std::lock_guard lock(mutex);
      auto it = cache.find(key);
      if (it == cache.end()) {
        it = cache.emplace(key, word::kernel_free_action_check(g, map, {200, 12, 1})).first;
      }
      report = it->second;
    }
    const std::string line = word::summary(report);
    if (seen_.insert(key).second) notes.push_back(line);
    if (!report.passed()) reject("kernel check found an elliptic kernel element: " + report.counterexamples.front());
  }

  std::set<std::string> seen_;
};

VerifyReport rejected(VerifyReport r, std::optional<std::size_t> index, std::string why) {
  r.accepted = false;
  r.failing_index = index;
  r.reason = std::move(why);
  return r;
}

VerifyReport verify_polyfree(const Json& cert, const LabelledGraph& g, Checker& checker) {
  VerifyReport r;
  r.kind = "polyfree";
  const std::string hash = field(cert, "graph_hash", Json::value_t::string, "certificate").get<std::string>();
  const Json& claim = field(cert, "claim", Json::value_t::object, "certificate");
  const std::string claim_kind = field(claim, "kind", Json::value_t::string, "claim").get<std::string>();
  const int claim_length = field(claim, "length", Json::value_t::number_integer, "claim").get<int>();
  field(cert, "rule_trace", Json::value_t::array, "certificate");
  const Json& chain = field(cert, "chain", Json::value_t::array, "certificate");
  if (claim_kind != "NormallyPolyFree" && claim_kind != "PolyFree") {
    throw SchemaError("unknown claim kind '" + claim_kind + "'");
  }

  if (hash != graph::content_hash(g)) return rejected(r, std::nullopt, "graph hash mismatch");

  GroupDescriptor state = GroupDescriptor::artin(g);
  int length = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    try {
      decompose::KernelClass k = decompose::KernelClass::Free;
      state = checker.step(chain[i], state, &k);
      if (k == decompose::KernelClass::Free) ++length;
      if (k == decompose::KernelClass::PolyFree) {
        if (claim_kind == "NormallyPolyFree") reject("poly-free kernel in a normally poly-free chain");
        length += field(chain[i], "kernel_length", Json::value_t::number_integer, "step").get<int>();
      }
    } catch (const Reject& e) {
      return rejected(r, i, e.why);
    }
  }
  if (!state.is(Kind::Trivial)) {
    return rejected(r, chain.size(), "chain ends at " + to_string(state) + ", not the trivial group");
  }
  if (length != claim_length) {
    return rejected(r, std::nullopt,
                    "claimed length " + std::to_string(claim_length) + ", chain gives " + std::to_string(length));
  }
  r.accepted = true;
  return r;
}

bool is_base_fact(const std::string& rule) {
  return rule == "CliqueAtMost3" || rule == "CliqueAllLabelsAtLeast6" || rule == "JoinOf2Labelled";
}

class NodeChecker {
 public:
  explicit NodeChecker(Checker& c) : checker_(c) {}

  // Preorder walk; returns the failing node index and reason.
  std::optional<std::pair<std::size_t, std::string>> walk(const Json& node) {
    const std::size_t index = next_++;
    const std::string rule = field(node, "rule", Json::value_t::string, "node").get<std::string>();
    const LabelledGraph g = node_graph(node);
    const Json& ev = field(node, "evidence", Json::value_t::object, "node");
    const Json& children = field(node, "children", Json::value_t::array, "node");
    std::vector<LabelledGraph> kids;
    std::vector<std::string> kid_rules;
    for (const auto& c : children) {
      kids.push_back(node_graph(c));
      kid_rules.push_back(field(c, "rule", Json::value_t::string, "node").get<std::string>());
    }
    try {
      check(rule, g, ev, kids, kid_rules);
    } catch (const Reject& e) {
      return std::make_pair(index, rule + ": " + e.why);
    }
    for (const auto& c : children) {
      if (auto bad = walk(c)) return bad;
    }
    return std::nullopt;
  }

  static LabelledGraph node_graph(const Json& node) {
    try {
      return graph::graph_from_json(field(node, "graph", Json::value_t::object, "node"), false);
    } catch (const ParseError& e) {
      throw SchemaError(std::string("node graph: ") + e.what());
    }
  }

 private:
  void check(const std::string& rule, const LabelledGraph& g, const Json& ev, const std::vector<LabelledGraph>& kids,
             const std::vector<std::string>& kid_rules) {
    const bool leaf = rule == "NormallyPolyFree" || rule == "CliqueAtMost3" || rule == "CliqueAllLabelsAtLeast6";
    if (leaf && !kids.empty()) reject("a base fact has no children");

    if (rule == "NormallyPolyFree") {
      const Json& cert = ev_get(ev, "certificate");
      VerifyReport inner;
      try {
        inner = verify_polyfree(cert, g, checker_);
      } catch (const SchemaError& e) {
        reject(std::string("embedded certificate: ") + e.what());
      }
      if (!inner.accepted) reject("embedded certificate rejected: " + inner.reason);
      return;
    }
    if (rule == "CliqueAtMost3" || rule == "CliqueAllLabelsAtLeast6" || rule == "JoinOf2Labelled") {
      if (!graph::is_clique(g)) reject(graph::describe(g, g.all()) + " is not a clique");
      if (!graph::is_even(g)) reject(graph::describe(g, g.all()) + " has an odd label");
    }
    if (rule == "CliqueAtMost3") {
      if (g.vertex_count() > 3) reject("clique has " + std::to_string(g.vertex_count()) + " vertices");
      return;
    }
    if (rule == "CliqueAllLabelsAtLeast6") {
      for (const auto& e : g.edges()) {
        if (e.label < kLargeLabel) reject("edge " + graph::describe(g, e) + " is below " + std::to_string(kLargeLabel));
      }
      return;
    }
    if (rule == "JoinOf2Labelled" || rule == "DirectProduct") {
      const auto parts = kid_partition(g, kids);
      if (parts.size() < 2) reject("a join needs at least two factors");
      require_cross_labels_2(g, parts);
      if (rule == "JoinOf2Labelled") require_base(kid_rules);
      return;
    }
    if (rule == "FreeProduct") {
      const auto comps = graph::connected_components(g);
      if (comps.size() < 2) reject("graph is connected");
      if (kids.size() != comps.size()) reject("one child per component expected");
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if (kids[i] != graph::full_subgraph(g, comps[i])) reject("child " + std::to_string(i) + " is not component " + std::to_string(i));
      }
      return;
    }
    if (rule == "CliqueReduction") {
      if (!graph::is_even(g)) reject(graph::describe(g, g.all()) + " is not even");
      const Json& chain = ev_get(ev, "chain");
      if (!chain.is_array()) reject("evidence chain is not an array");
      GroupDescriptor state = GroupDescriptor::artin(g);
      for (std::size_t i = 0; i < chain.size(); ++i) {
        if (!chain[i].is_object() || chain[i].value("justification", "") != decompose::tag::kCliqueSplit) {
          reject("chain step " + std::to_string(i) + " is not a vertex-star split");
        }
        try {
          state = checker_.step(chain[i], state);
        } catch (const Reject& e) {
          reject("chain step " + std::to_string(i) + ": " + e.why);
        }
      }
      const std::vector<GroupDescriptor> entries =
          state.is(Kind::Product) ? state.factors() : std::vector<GroupDescriptor>{state};
      if (entries.size() != kids.size()) reject("one child per final factor expected");
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] != GroupDescriptor::artin(kids[i])) reject("child " + std::to_string(i) + " is not final factor " + std::to_string(i));
      }
      require_base(kid_rules);
      return;
    }
    if (rule == "Subgraph") {
      if (kids.size() != 1) reject("a subgraph node has one child");
      const auto& big = kids.front();
      for (const auto& v : g.vertices()) {
        if (!big.index_of(v)) reject("vertex " + v + " is missing from the supergraph");
      }
      for (const auto& e : g.named_edges()) {
        const int l = big.label(*big.index_of(e.u), *big.index_of(e.v));
        if (l != e.label) reject("edge " + e.u + e.v + " has label " + std::to_string(l) + " in the supergraph");
      }
      return;
    }
    reject("unknown rule");
  }

  static std::vector<VertexSet> kid_partition(const LabelledGraph& g, const std::vector<LabelledGraph>& kids) {
    std::vector<VertexSet> parts;
    VertexSet covered;
    for (const auto& k : kids) {
      VertexSet s;
      for (const auto& v : k.vertices()) {
        const auto i = g.index_of(v);
        if (!i) reject("child vertex " + v + " is not in the graph");
        s = s.with(*i);
      }
      if (!(s & covered).empty()) reject("children overlap");
      if (k != graph::full_subgraph(g, s)) reject("child " + graph::describe(g, s) + " is not a full subgraph");
      covered = covered | s;
      parts.push_back(s);
    }
    if (covered != g.all()) reject("children do not cover the graph");
    return parts;
  }

  static void require_base(const std::vector<std::string>& rules) {
    for (const auto& r : rules) {
      if (!is_base_fact(r)) reject("child rule " + r + " is not a clique base fact");
    }
  }

  Checker& checker_;
  std::size_t next_ = 0;
};

VerifyReport verify_fjcw(const Json& cert, const LabelledGraph& g, Checker& checker) {
  VerifyReport r;
  r.kind = "fjcw";
  const std::string hash = field(cert, "graph_hash", Json::value_t::string, "certificate").get<std::string>();
  field(cert, "graph", Json::value_t::object, "certificate");
  field(cert, "rule_trace", Json::value_t::array, "certificate");
  const Json& derivation = field(cert, "derivation", Json::value_t::object, "certificate");

  if (hash != graph::content_hash(g)) return rejected(r, std::nullopt, "graph hash mismatch");
  LabelledGraph recorded = NodeChecker::node_graph(cert);
  if (recorded != g) return rejected(r, std::nullopt, "recorded graph differs from the input graph");
  if (NodeChecker::node_graph(derivation) != g) return rejected(r, 0, "derivation root is not the input graph");

  NodeChecker walker(checker);
  if (auto bad = walker.walk(derivation)) return rejected(r, bad->first, bad->second);
  r.accepted = true;
  return r;
}

}  // namespace

VerifyReport verify_certificate(std::string_view text, const graph::LabelledGraph& g) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("certificate is not valid JSON: ") + e.what(), e.byte);
  }
  return verify_certificate(j, g);
}

VerifyReport verify_certificate(const nlohmann::json& cert, const graph::LabelledGraph& g) {
  const std::string format = field(cert, "format", Json::value_t::string, "certificate").get<std::string>();
  Checker checker;
  VerifyReport r;
  try {
    if (format == kPolyFreeFormat) {
      r = verify_polyfree(cert, g, checker);
    } else if (format == kFjcFormat) {
      r = verify_fjcw(cert, g, checker);
    } else {
      throw SchemaError("unknown certificate format '" + format + "'");
    }
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("certificate: ") + e.what());
  }
  r.corroboration = std::move(checker.notes);
  return r;
}

std::string summary(const VerifyReport& r) {
  std::string out = r.accepted ? "accepted " : "rejected ";
  out += r.kind;
  if (!r.accepted) {
    if (r.failing_index) out += (r.kind == "fjcw" ? " at node " : " at step ") + std::to_string(*r.failing_index);
    out += ": " + r.reason;
  }
  return out;
}

}  // namespace artin::certify
