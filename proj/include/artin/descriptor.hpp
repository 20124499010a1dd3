#pragma once

// Symbolic group expressions naming the sources and targets of quotient
// steps.

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "artin/graph.hpp"

namespace artin::decompose {

class GroupDescriptor {
 public:
  enum class Kind { Trivial = 0, Integers = 1, Artin = 2, Product = 3, FreeProduct = 4 };

  // Defaults to Trivial.
  GroupDescriptor();

  static GroupDescriptor trivial();
  static GroupDescriptor integers();
  static GroupDescriptor artin(graph::LabelledGraph g);
  // Canonical direct product: nested products are flattened, Trivial
  // factors dropped, factors sorted; zero factors give Trivial and one
  // factor gives that factor.
  static GroupDescriptor product(std::vector<GroupDescriptor> factors);
  // Canonical free product: Trivial factors dropped, factors sorted, same
  // collapsing. Nested free products are kept as entries.
  static GroupDescriptor free_product(std::vector<GroupDescriptor> factors);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  // Artin only.
  const graph::LabelledGraph& graph() const;
  // Product / FreeProduct only.
  const std::vector<GroupDescriptor>& factors() const;

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b);
  friend std::strong_ordering operator<=>(const GroupDescriptor& a, const GroupDescriptor& b);

 private:
  struct Node;
  static const std::shared_ptr<const Node>& trivial_node();
  explicit GroupDescriptor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// {"kind":"artin","graph":{...}} and friends; canonical and byte-stable.
nlohmann::ordered_json to_json(const GroupDescriptor& d);
// Throws SchemaError. Rebuilds through the canonicalising constructors and
// rejects input that was not already canonical.
GroupDescriptor descriptor_from_json(const nlohmann::json& j);

// Compact human form: "A{a,b}", "Z", "1", "A{a} x Z", "(Z * Z)".
std::string to_string(const GroupDescriptor& d);

}  // namespace artin::decompose
