// Exercises the shared library through its C header only.

#include <doctest.h>

#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "artin/artin.h"

namespace {

constexpr const char* kTri226 = R"({"vertices":["a","b","c"],"edges":[["a","b",2],["a","c",2],["b","c",6]]})";
constexpr const char* kTri444 = R"({"vertices":["a","b","c"],"edges":[["a","b",4],["a","c",4],["b","c",4]]})";

struct Graph {
  artin_graph* g = nullptr;
  explicit Graph(const char* text) { REQUIRE(artin_graph_parse(text, &g) == ARTIN_OK); }
  ~Graph() { artin_graph_free(g); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  artin_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and errors") {
  CHECK(std::string(artin_version()) == "1.0.0");
  artin_graph* g = nullptr;
  CHECK(artin_graph_parse("{\"vertices\":[", &g) == ARTIN_INPUT_ERROR);
  CHECK(g == nullptr);
  CHECK(std::string(artin_last_error()).find("at byte") != std::string::npos);
  CHECK(artin_graph_parse(nullptr, &g) == ARTIN_INVALID_ARGUMENT);
  CHECK(artin_graph_parse(R"({"vertices":["a"],"edges":[["a","a",2]]})", &g) == ARTIN_INPUT_ERROR);
}

TEST_CASE("graph round trip and classification") {
  Graph g(kTri226);
  char* out = nullptr;
  REQUIRE(artin_graph_serialize(g.g, &out) == ARTIN_OK);
  const auto text = take(out);
  CHECK(text.find("\"format\":\"artin-graph/1\"") != std::string::npos);
  Graph again(text.c_str());
  REQUIRE(artin_graph_hash(again.g, &out) == ARTIN_OK);
  const auto h1 = take(out);
  REQUIRE(artin_graph_hash(g.g, &out) == ARTIN_OK);
  CHECK(take(out) == h1);
  REQUIRE(artin_graph_classify(g.g, 1, &out) == ARTIN_OK);
  const auto cls = take(out);
  CHECK(cls.find("\"even\":true") != std::string::npos);
  CHECK(cls.find("\"fc\":true") != std::string::npos);
}

TEST_CASE("certify, serialize, verify") {
  Graph g(kTri226);
  artin_verdict* v = nullptr;
  REQUIRE(artin_certify(g.g, ARTIN_POLYFREE, &v) == ARTIN_OK);
  CHECK(artin_verdict_certified(v) == 1);
  CHECK(artin_verdict_length(v) == 4);
  char* out = nullptr;
  REQUIRE(artin_verdict_json(v, &out) == ARTIN_OK);
  const auto cert = take(out);
  artin_verdict_free(v);

  long index = 99;
  REQUIRE(artin_verify(cert.c_str(), g.g, 0, &out, &index) == ARTIN_OK);
  CHECK(take(out).rfind("accepted polyfree", 0) == 0);
  CHECK(index == -1);

  Graph other(kTri444);
  CHECK(artin_verify(cert.c_str(), other.g, 0, &out, &index) == ARTIN_REJECTED);
  CHECK(take(out).find("hash") != std::string::npos);
  CHECK(artin_verify("not json", g.g, 0, &out, &index) == ARTIN_INPUT_ERROR);
  CHECK(out == nullptr);
  CHECK(artin_verify(R"({"format":"nope"})", g.g, 0, &out, &index) == ARTIN_REJECTED);
  artin_string_free(out);
}

TEST_CASE("unknown verdicts") {
  Graph g(kTri444);
  artin_verdict* v = nullptr;
  REQUIRE(artin_certify(g.g, ARTIN_POLYFREE, &v) == ARTIN_OK);
  CHECK(artin_verdict_certified(v) == 0);
  CHECK(artin_verdict_length(v) == -1);
  char* out = nullptr;
  REQUIRE(artin_verdict_json(v, &out) == ARTIN_OK);
  CHECK(take(out).rfind(R"({"verdict":"Unknown")", 0) == 0);
  artin_verdict_free(v);
  REQUIRE(artin_certify(g.g, ARTIN_FJCW, &v) == ARTIN_OK);
  CHECK(artin_verdict_certified(v) == 1);
  artin_verdict_free(v);
  CHECK(artin_certify(g.g, static_cast<artin_property>(7), &v) == ARTIN_INVALID_ARGUMENT);
}

TEST_CASE("word arithmetic") {
  char* out = nullptr;
  REQUIRE(artin_word_nf(ARTIN_GROUP_BS, 2, "a^3", 0, &out) == ARTIN_OK);
  CHECK(take(out) == "z a\n");
  REQUIRE(artin_word_eval(ARTIN_GROUP_BS, 2, ARTIN_MAP_R, "a t a^-1 t^-1", 0, &out) == ARTIN_OK);
  CHECK(take(out) == "(0,0)\n");
  REQUIRE(artin_word_eval(ARTIN_GROUP_DIHEDRAL, 1, ARTIN_MAP_CHI, "s", 0, &out) == ARTIN_OK);
  CHECK(take(out) == "3\n");
  CHECK(artin_word_eval(ARTIN_GROUP_DIHEDRAL, 1, ARTIN_MAP_R, "s", 0, &out) == ARTIN_INPUT_ERROR);
  CHECK(artin_word_nf(ARTIN_GROUP_BS, 2, "a q", 0, &out) == ARTIN_INPUT_ERROR);
  CHECK(artin_word_nf(ARTIN_GROUP_BS, 0, "a", 0, &out) == ARTIN_INPUT_ERROR);
  REQUIRE(artin_kernel_check(ARTIN_GROUP_BS, 2, ARTIN_MAP_R, 200, 12, 1, 1, &out) == ARTIN_OK);
  CHECK(take(out).find("\"counterexamples\":[]") != std::string::npos);
}

TEST_CASE("corpus") {
  const int labels[] = {2};
  char* out = nullptr;
  REQUIRE(artin_corpus(20, 5, labels, 1, 7, ARTIN_FAMILY_ER, 0, &out) == ARTIN_OK);
  const auto csv = take(out);
  CHECK(csv.find("polyfree_certified=20") != std::string::npos);
  CHECK(artin_corpus(0, 5, labels, 1, 7, ARTIN_FAMILY_ER, 0, &out) == ARTIN_INPUT_ERROR);
  CHECK(artin_corpus(5, 65, labels, 1, 7, ARTIN_FAMILY_ER, 0, &out) == ARTIN_INPUT_ERROR);
  CHECK(artin_corpus(5, 5, nullptr, 1, 7, ARTIN_FAMILY_ER, 0, &out) == ARTIN_INVALID_ARGUMENT);
}

TEST_CASE("concurrent use gives identical results") {
  Graph g(kTri226);
  std::vector<std::string> results(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i) {
    threads.emplace_back([&, i] {
      artin_verdict* v = nullptr;
      if (artin_certify(g.g, ARTIN_POLYFREE, &v) != ARTIN_OK) return;
      char* out = nullptr;
      if (artin_verdict_json(v, &out) == ARTIN_OK) {
        char* report = nullptr;
        artin_verify(out, g.g, 1, &report, nullptr);
        results[i] = take(out) + take(report);
      }
      artin_verdict_free(v);
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& r : results) CHECK(r == results.front());
  CHECK_FALSE(results.front().empty());
}
