#pragma once

// Independent checker for certificate documents. It re-derives every step
// from the graph data in its evidence using graph_core predicates only and
// never calls back into the rule engine.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "artin/graph.hpp"

namespace artin::certify {

struct VerifyReport {
  bool accepted = false;
  std::string kind;  // "polyfree" or "fjcw"
  // Chain step (poly-free) or preorder derivation node (FJCw) that failed;
  // equals the chain length when the chain stops short of the trivial group.
  // Unset for document-level failures (hash, claim).
  std::optional<std::size_t> failing_index;
  std::string reason;
  std::vector<std::string> corroboration;  // kernel-check summaries
};

// Throws ParseError on malformed JSON and SchemaError when the document does
// not follow either certificate schema.
VerifyReport verify_certificate(std::string_view text, const graph::LabelledGraph& g);
VerifyReport verify_certificate(const nlohmann::json& cert, const graph::LabelledGraph& g);

std::string summary(const VerifyReport& r);

}  // namespace artin::certify
