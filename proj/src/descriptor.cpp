#include "artin/descriptor.hpp"

#include <algorithm>
#include <optional>

#include "artin/error.hpp"
#include "artin/graph_io.hpp"

namespace artin::decompose {

struct GroupDescriptor::Node {
  Kind kind = Kind::Trivial;
  std::optional<graph::LabelledGraph> graph;
  std::vector<GroupDescriptor> factors;
};

const std::shared_ptr<const GroupDescriptor::Node>& GroupDescriptor::trivial_node() {
  static const auto node = std::make_shared<const Node>();
  return node;
}

GroupDescriptor::GroupDescriptor() : node_(trivial_node()) {}

GroupDescriptor GroupDescriptor::trivial() { return GroupDescriptor(); }

GroupDescriptor GroupDescriptor::integers() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Integers, std::nullopt, {}});
  return GroupDescriptor(node);
}

GroupDescriptor GroupDescriptor::artin(graph::LabelledGraph g) {
  return GroupDescriptor(std::make_shared<const Node>(Node{Kind::Artin, std::move(g), {}}));
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupDescriptor> factors) {
  std::vector<GroupDescriptor> flat;
  for (auto& f : factors) {
    if (f.is(Kind::Trivial)) continue;
    if (f.is(Kind::Product)) {
      flat.insert(flat.end(), f.factors().begin(), f.factors().end());
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return trivial();
  if (flat.size() == 1) return flat.front();
  std::sort(flat.begin(), flat.end());
  return GroupDescriptor(std::make_shared<const Node>(Node{Kind::Product, std::nullopt, std::move(flat)}));
}

GroupDescriptor GroupDescriptor::free_product(std::vector<GroupDescriptor> factors) {
  std::erase_if(factors, [](const GroupDescriptor& f) { return f.is(Kind::Trivial); });
  if (factors.empty()) return trivial();
  if (factors.size() == 1) return factors.front();
  std::sort(factors.begin(), factors.end());
  return GroupDescriptor(std::make_shared<const Node>(Node{Kind::FreeProduct, std::nullopt, std::move(factors)}));
}

GroupDescriptor::Kind GroupDescriptor::kind() const { return node_->kind; }

const graph::LabelledGraph& GroupDescriptor::graph() const {
  if (!node_->graph) throw PreconditionError("descriptor is not an Artin group");
  return *node_->graph;
}

const std::vector<GroupDescriptor>& GroupDescriptor::factors() const { return node_->factors; }

bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
  if (a.node_ == b.node_) return true;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const GroupDescriptor& a, const GroupDescriptor& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case GroupDescriptor::Kind::Trivial:
    case GroupDescriptor::Kind::Integers:
      return std::strong_ordering::equal;
    case GroupDescriptor::Kind::Artin:
      return a.graph() <=> b.graph();
    case GroupDescriptor::Kind::Product:
    case GroupDescriptor::Kind::FreeProduct:
      return std::lexicographical_compare_three_way(a.factors().begin(), a.factors().end(), b.factors().begin(),
                                                    b.factors().end());
  }
  return std::strong_ordering::equal;
}

nlohmann::ordered_json to_json(const GroupDescriptor& d) {
  nlohmann::ordered_json out;
  switch (d.kind()) {
    case GroupDescriptor::Kind::Trivial:
      out["kind"] = "trivial";
      break;
    case GroupDescriptor::Kind::Integers:
      out["kind"] = "integers";
      break;
    case GroupDescriptor::Kind::Artin:
      out["kind"] = "artin";
      out["graph"] = graph::graph_to_json(d.graph());
      break;
    case GroupDescriptor::Kind::Product:
    case GroupDescriptor::Kind::FreeProduct: {
      out["kind"] = d.is(GroupDescriptor::Kind::Product) ? "product" : "free_product";
      auto factors = nlohmann::ordered_json::array();
      for (const auto& f : d.factors()) factors.push_back(to_json(f));
      out["factors"] = std::move(factors);
      break;
    }
  }
  return out;
}

GroupDescriptor descriptor_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw SchemaError("descriptor must be an object with a string \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "trivial") return GroupDescriptor::trivial();
  if (kind == "integers") return GroupDescriptor::integers();
  if (kind == "artin") {
    if (!j.contains("graph")) throw SchemaError("artin descriptor without a graph");
    try {
      return GroupDescriptor::artin(graph::graph_from_json(j["graph"], false));
    } catch (const ParseError& e) {
      throw SchemaError(std::string("artin descriptor: ") + e.what());
    }
  }
  if (kind == "product" || kind == "free_product") {
    if (!j.contains("factors") || !j["factors"].is_array()) throw SchemaError(kind + " descriptor without factors");
    std::vector<GroupDescriptor> factors;
    for (const auto& f : j["factors"]) factors.push_back(descriptor_from_json(f));
    const std::size_t n = factors.size();
    auto d = kind == "product" ? GroupDescriptor::product(std::move(factors))
                               : GroupDescriptor::free_product(std::move(factors));
    if (d.kind() != (kind == "product" ? GroupDescriptor::Kind::Product : GroupDescriptor::Kind::FreeProduct) ||
        d.factors().size() != n || nlohmann::json(to_json(d)) != j) {
      throw SchemaError(kind + " descriptor is not in canonical form");
    }
    return d;
  }
  throw SchemaError("unknown descriptor kind '" + kind + "'");
}

std::string to_string(const GroupDescriptor& d) {
  switch (d.kind()) {
    case GroupDescriptor::Kind::Trivial:
      return "1";
    case GroupDescriptor::Kind::Integers:
      return "Z";
    case GroupDescriptor::Kind::Artin:
      return "A" + graph::describe(d.graph(), d.graph().all());
    case GroupDescriptor::Kind::Product:
    case GroupDescriptor::Kind::FreeProduct: {
      const bool free = d.is(GroupDescriptor::Kind::FreeProduct);
      std::string out = free ? "(" : "";
      for (std::size_t i = 0; i < d.factors().size(); ++i) {
        if (i) out += free ? " * " : " x ";
        const auto& f = d.factors()[i];
        out += to_string(f);
      }
      return out + (free ? ")" : "");
    }
  }
  return "?";
}

}  // namespace artin::decompose
