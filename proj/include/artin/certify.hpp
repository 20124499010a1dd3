#pragma once

// Rule engine that turns chains into normally-poly-free and FJCw
// certificates. Nothing here ever refutes: a graph outside the certified
// classes gets Unknown with the list of rules that did not apply.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "artin/chain.hpp"
#include "artin/graph.hpp"

namespace artin::certify {

using decompose::Chain;
using graph::LabelledGraph;

inline constexpr const char* kPolyFreeFormat = "artin-cert/1";
inline constexpr const char* kFjcFormat = "artin-fjc/1";

// Threshold of the all-large-labels clique fact.
inline constexpr int kLargeLabel = 6;

struct RuleAttempt {
  std::string rule;
  std::string reason;
  std::string subject;  // the (sub)graph the rule was tried on
};

struct Unknown {
  std::vector<RuleAttempt> attempts;
};

struct PolyFreeCertificate {
  LabelledGraph graph;
  std::string graph_hash;
  int length = 0;  // number of free-kernel steps
  Chain chain;
  std::vector<std::string> rule_trace;
};

struct FjcNode {
  std::string rule;  // NormallyPolyFree, CliqueAtMost3, CliqueAllLabelsAtLeast6,
                     // JoinOf2Labelled, CliqueReduction, FreeProduct, DirectProduct, Subgraph
  LabelledGraph graph;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
  std::vector<FjcNode> children;
};

struct FjcCertificate {
  LabelledGraph graph;
  std::string graph_hash;
  FjcNode derivation;
  std::vector<std::string> rule_trace;
};

template <typename Cert>
struct Verdict {
  std::variant<Cert, Unknown> result;

  bool certified() const { return std::holds_alternative<Cert>(result); }
  const Cert& certificate() const { return std::get<Cert>(result); }
  const Unknown& unknown() const { return std::get<Unknown>(result); }
};

using PolyFreeVerdict = Verdict<PolyFreeCertificate>;
using FjcVerdict = Verdict<FjcCertificate>;

// Rules in order: single vertex, disconnected, tree, even with spherical
// cliques, 2-join, 2-completion.
PolyFreeVerdict certify_polyfree(const LabelledGraph& g);

// Rules in order: normally poly-free, even clique reduction with clique
// base facts, free / direct product, 2-completion as a supergraph.
FjcVerdict certify_fjcw(const LabelledGraph& g);

nlohmann::ordered_json to_json(const PolyFreeCertificate& c);
nlohmann::ordered_json to_json(const FjcCertificate& c);
nlohmann::ordered_json to_json(const FjcNode& n);
nlohmann::ordered_json to_json(const Unknown& u);

// Canonical bytes (compact, newline-terminated).
std::string dump(const nlohmann::ordered_json& j);

std::string explain(const PolyFreeVerdict& v);
std::string explain(const FjcVerdict& v);

}  // namespace artin::certify
