#include <doctest.h>

#include <algorithm>

#include "artin/decompose.hpp"
#include "artin/error.hpp"
#include "artin/random.hpp"
#include "support.hpp"

using namespace artin;
using namespace artin::decompose;
using graph::VertexSet;
using testing::make;

namespace {

GroupDescriptor A(const LabelledGraph& g, std::vector<std::string> names) {
  return GroupDescriptor::artin(graph::full_subgraph(g, g.to_set(names)));
}

const GroupDescriptor Z = GroupDescriptor::integers();

// Consecutive steps match and the chain starts where it says.
void check_well_formed(const Chain& c) {
  GroupDescriptor state = c.start;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    INFO("step " << i);
    CHECK(c.steps[i].source == state);
    state = c.steps[i].target;
  }
}

bool ends_trivial(const Chain& c) { return c.end() == GroupDescriptor::trivial(); }

}  // namespace

TEST_CASE("descriptors are canonical") {
  const auto e = testing::path({4});
  const auto a = GroupDescriptor::artin(e);
  CHECK(GroupDescriptor::product({}) == GroupDescriptor::trivial());
  CHECK(GroupDescriptor::product({a}) == a);
  CHECK(GroupDescriptor::product({Z, GroupDescriptor::trivial()}) == Z);
  CHECK(GroupDescriptor::product({a, Z}) == GroupDescriptor::product({Z, a}));
  CHECK(GroupDescriptor::product({Z, GroupDescriptor::product({Z, a})}) == GroupDescriptor::product({Z, Z, a}));
  CHECK(GroupDescriptor::product({Z, Z}).factors().size() == 2);
  const auto fp = GroupDescriptor::free_product({Z, GroupDescriptor::free_product({Z, Z})});
  CHECK(fp.factors().size() == 2);
  CHECK(to_string(GroupDescriptor::product({Z, a})) == "Z x A{a,b}");
  CHECK(to_string(GroupDescriptor::free_product({Z, Z})) == "(Z * Z)");
  CHECK(to_string(GroupDescriptor::trivial()) == "1");
  CHECK_THROWS_AS(Z.graph(), PreconditionError);
}

TEST_CASE("descriptor JSON round trip and canonicality") {
  const auto d = GroupDescriptor::product({Z, A(testing::triangle(2, 2, 6), {"b", "c"}),
                                           GroupDescriptor::free_product({Z, Z})});
  const nlohmann::json j = to_json(d);
  CHECK(descriptor_from_json(j) == d);
  nlohmann::json swapped = j;
  std::swap(swapped["factors"][0], swapped["factors"][1]);
  CHECK_THROWS_AS(descriptor_from_json(swapped), SchemaError);
  CHECK_THROWS_AS(descriptor_from_json(nlohmann::json{{"kind", "product"}, {"factors", {j["factors"][0]}}}),
                  SchemaError);
  CHECK_THROWS_AS(descriptor_from_json(nlohmann::json{{"kind", "semidirect"}}), SchemaError);
}

TEST_CASE("split vertex choice") {
  CHECK_FALSE(choose_split_vertex(testing::triangle(2, 2, 2)).has_value());
  CHECK(choose_split_vertex(testing::path({2, 2})) == 0);
  CHECK(choose_split_vertex(testing::four_cycle(2)) == 0);
  CHECK(choose_split_vertex(make({"a", "b"}, {})) == 0);
}

TEST_CASE("split at a vertex") {
  const auto p = testing::path({2, 2});
  const auto s = split_at_vertex(p, 0);
  CHECK(p.names(s.star) == std::vector<std::string>{"a", "b"});
  CHECK(p.names(s.link) == std::vector<std::string>{"b"});
  CHECK(p.names(s.rest) == std::vector<std::string>{"b", "c"});

  const auto c = testing::four_cycle(2);
  const auto sc = split_at_vertex(c, 0);
  CHECK(c.names(sc.star) == std::vector<std::string>{"a", "b", "d"});
  CHECK(c.names(sc.link) == std::vector<std::string>{"b", "d"});
  CHECK(c.names(sc.rest) == std::vector<std::string>{"b", "c", "d"});
  CHECK(sc.link == (sc.star & sc.rest));

  CHECK_THROWS_AS(split_at_vertex(testing::triangle(2, 2, 2), 1), PreconditionError);
}

TEST_CASE("clique reduction: path") {
  const auto p = testing::path({4, 6});
  const auto r = clique_reduction_chain(p);
  REQUIRE(r.chain.steps.size() == 1);
  CHECK(r.chain.steps[0].justification == "P2.9");
  CHECK(r.chain.steps[0].kernel == KernelClass::Free);
  CHECK(r.chain.end() == GroupDescriptor::product({A(p, {"a", "b"}), A(p, {"b", "c"})}));
  REQUIRE(r.cliques.size() == 2);
  CHECK(p.names(r.cliques[0]) == std::vector<std::string>{"a", "b"});
  CHECK(p.names(r.cliques[1]) == std::vector<std::string>{"b", "c"});
}

TEST_CASE("clique reduction: clique and 4-cycle") {
  const auto t = testing::triangle(2, 4, 2);
  const auto r = clique_reduction_chain(t);
  CHECK(r.chain.steps.empty());
  CHECK(r.cliques == std::vector<VertexSet>{t.all()});

  const auto c = testing::four_cycle(2);
  const auto rc = clique_reduction_chain(c);
  CHECK(rc.chain.steps.size() == 3);
  check_well_formed(rc.chain);
  auto cliques = rc.cliques;
  std::sort(cliques.begin(), cliques.end(), graph::canonical_less);
  CHECK(cliques == graph::enumerate_maximal_cliques(c));

  CHECK_THROWS_AS(clique_reduction_chain(testing::path({3})), PreconditionError);
}

TEST_CASE("spherical towers") {
  const auto v = spherical_tower(make({"v"}, {}));
  CHECK(v.free_steps() == 1);
  CHECK(ends_trivial(v));

  for (int m : {4, 6, 8}) {
    const auto e = spherical_tower(testing::path({m}));
    CHECK(e.free_steps() == 3);
    CHECK(e.steps[1].justification == "L2.3");
    CHECK(e.steps[1].target == GroupDescriptor::product({Z, Z}));
    CHECK(ends_trivial(e));
  }

  const auto t = spherical_tower(testing::triangle(2, 2, 4));
  CHECK(t.free_steps() == 4);
  CHECK(t.steps.size() == 5);
  check_well_formed(t);
  CHECK_THROWS_AS(spherical_tower(testing::triangle(4, 4, 4)), PreconditionError);
  CHECK_THROWS_AS(spherical_tower(testing::path({2, 2})), PreconditionError);
}

TEST_CASE("spherical tower length on every even spherical clique up to 5 vertices") {
  int checked = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto ps = testing::pairs(n);
    std::size_t total = 1;
    for (std::size_t i = 0; i < ps.size(); ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      testing::Matrix m;
      m.n = n;
      std::size_t c = code;
      for (auto [i, j] : ps) {
        m.set(i, j, 2 + 2 * static_cast<int>(c % 3));
        c /= 3;
      }
      if (!testing::oracle::heavy_matching(m, (1U << n) - 1)) continue;
      int heavy = 0;
      for (auto [i, j] : ps) heavy += m.at(i, j) >= 4 ? 1 : 0;
      const int rank = (n - 2 * heavy) + 2 * heavy;
      const auto chain = spherical_tower(m.graph());
      CHECK(chain.steps.size() == static_cast<std::size_t>(1 + heavy + rank));
      CHECK(chain.free_steps() == heavy + rank);
      CHECK(ends_trivial(chain));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("tree reduction") {
  const auto e = tree_reduction(testing::path({3}));
  CHECK(e.free_steps() == 2);
  CHECK(e.steps[0].justification == "L3.4");

  const auto p = tree_reduction(testing::path({3, 4}));
  CHECK(p.free_steps() == 3);
  CHECK(p.steps[0].justification == "P3.6");
  CHECK(p.steps[0].evidence["leaf"] == "a");
  CHECK(p.steps[0].evidence["onto"] == "b");

  CHECK(tree_reduction(testing::three_star(3, 5, 7)).free_steps() == 4);
  CHECK(tree_reduction(make({"v"}, {})).free_steps() == 1);
  CHECK_THROWS_AS(tree_reduction(testing::triangle(2, 2, 2)), PreconditionError);
}

TEST_CASE("tree reduction length on random trees") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(7));
    testing::Matrix m;
    m.n = n;
    for (int v = 1; v < n; ++v) m.set(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v, 2 + static_cast<int>(rng.below(6)));
    const auto c = tree_reduction(m.graph());
    CHECK(c.free_steps() == n);
    check_well_formed(c);
    CHECK(ends_trivial(c));
  }
}

TEST_CASE("edge addition") {
  const auto two = make({"a", "b", "c", "d"}, {{"a", "b", 2}, {"c", "d", 2}});
  const auto plus = graph::add_edge(two, 0, 2, 2);
  const auto s = edge_addition_step(two, plus);
  CHECK(s.kernel == KernelClass::Free);
  CHECK(s.evidence["edge"] == nlohmann::ordered_json::array({"a", "c"}));
  CHECK(s.evidence["label"] == 2);

  const auto p = testing::path({2, 2});
  CHECK(edge_addition_step(p, graph::add_edge(p, 0, 2, 6)).justification == "L3.1");
  CHECK_THROWS_AS(edge_addition_step(testing::path({2, 2}), testing::path({4, 2})), PreconditionError);
  CHECK_THROWS_AS(edge_addition_step(p, p), PreconditionError);
}

TEST_CASE("completion chains") {
  const auto p = testing::path({2, 2});
  CHECK(completion_chain(p, p).steps.empty());
  CHECK(completion_chain(p, testing::triangle(2, 2, 2)).steps.size() == 1);
  const auto c = completion_chain(testing::four_cycle(2), testing::complete(4, 2));
  CHECK(c.steps.size() == 2);
  check_well_formed(c);
  CHECK(c.end() == GroupDescriptor::artin(testing::complete(4, 2)));
  CHECK_THROWS_AS(completion_chain(testing::triangle(2, 2, 2), p), PreconditionError);
}

TEST_CASE("free product split") {
  const auto two = make({"a", "b"}, {});
  const auto s = free_product_split(two);
  CHECK(s.descriptor == GroupDescriptor::free_product({A(two, {"a"}), A(two, {"b"})}));
  CHECK(s.components.size() == 2);

  const auto ve = make({"a", "b", "c"}, {{"b", "c", 4}});
  CHECK(free_product_split(ve).descriptor == GroupDescriptor::free_product({A(ve, {"a"}), A(ve, {"b", "c"})}));
  CHECK_THROWS_AS(free_product_split(testing::path({2})), PreconditionError);
}

TEST_CASE("chain builder lifts local steps into a product coordinate") {
  const auto p = testing::path({4, 6});
  const auto start = GroupDescriptor::product({A(p, {"a", "b"}), Z});
  ChainBuilder b(start);
  b.apply({Z, GroupDescriptor::trivial(), "Z -> 1", KernelClass::Free, "product-coordinate", {}, {}});
  CHECK(b.state() == A(p, {"a", "b"}));
  CHECK_THROWS_AS(b.apply({Z, GroupDescriptor::trivial(), "Z -> 1", KernelClass::Free, "product-coordinate", {}, {}}),
                  PreconditionError);
  const auto c = std::move(b).finish();
  REQUIRE(c.steps.size() == 1);
  REQUIRE(c.steps[0].coordinate.has_value());
  CHECK(start.factors()[*c.steps[0].coordinate] == Z);
}
