// Runs the installed command-line binary and checks exit codes and output.

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef ARTIN_CLI
#error "ARTIN_CLI must name the artin executable"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ARTIN_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Workspace {
 public:
  Workspace() : dir_(fs::temp_directory_path() / ("artin-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) const {
    const auto p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

const char* kTri226 = R"({"vertices":["a","b","c"],"edges":[["a","b",2],["a","c",2],["b","c",6]]})";
const char* kTri444 = R"({"vertices":["a","b","c"],"edges":[["a","b",4],["a","c",4],["b","c",4]]})";
const char* kK4 =
    R"({"vertices":["a","b","c","d"],"edges":[["a","b",4],["a","c",4],["a","d",4],["b","c",4],["b","d",4],["c","d",4]]})";

}  // namespace

TEST_CASE("certify and verify round trip") {
  Workspace w;
  const auto g = w.file("tri226.json", kTri226);
  const auto cert = w.path("cert.json");
  const auto r = run("certify polyfree " + g + " -o " + cert);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("NormallyPolyFree, length 4", 0) == 0);
  CHECK(fs::exists(cert));
  const auto v = run("verify " + cert + " " + g);
  CHECK(v.code == 0);
  CHECK(v.out.rfind("accepted polyfree", 0) == 0);

  const auto wrong = w.file("tri444.json", kTri444);
  const auto bad = run("verify " + cert + " " + wrong);
  CHECK(bad.code == 3);
  CHECK(bad.out.find("hash mismatch") != std::string::npos);
}

TEST_CASE("unknown verdicts exit 1") {
  Workspace w;
  const auto k4 = w.file("k4.json", kK4);
  CHECK(run("certify polyfree " + k4).code == 1);
  CHECK(run("certify fjcw " + k4).code == 1);
  const auto tri = w.file("tri444.json", kTri444);
  const auto p = run("certify polyfree " + tri);
  CHECK(p.code == 1);
  CHECK(p.out.find("rule even/spherical failed") != std::string::npos);
  CHECK(run("certify fjcw " + tri).code == 0);
  const auto js = run("certify polyfree --json " + tri);
  CHECK(js.out.rfind(R"({"verdict":"Unknown")", 0) == 0);
}

TEST_CASE("input and usage errors exit 2") {
  Workspace w;
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("certify polyfree /nonexistent/graph.json").code == 2);
  CHECK(run("classify " + w.file("bad.json", "{\"vertices\":[\"a\"],\"edges\":[[\"a\",\"a\",2]]}")).code == 2);
  CHECK(run("word nf --group bs \"a\"").code == 2);
  CHECK(run("word nf --group bs --n 2 \"a q\"").code == 2);
  CHECK(run("corpus --count 0 --max-vertices 4 --labels 2 --seed 1").code == 2);
  const auto g = w.file("tri226.json", kTri226);
  CHECK(run("verify " + w.file("junk.json", "not json") + " " + g).code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("verify rejects a tampered certificate with exit 3") {
  Workspace w;
  const auto g = w.file("tri226.json", kTri226);
  auto cert = run("certify polyfree --json " + g).out;
  const auto pos = cert.find("\"label\":6");
  REQUIRE(pos != std::string::npos);
  cert.replace(pos, 9, "\"label\":4");
  const auto r = run("verify --json " + w.file("bad.json", cert) + " " + g);
  CHECK(r.code == 3);
  CHECK(r.out.find("\"accepted\":false") != std::string::npos);
  CHECK(r.out.find("\"failing_index\":1") != std::string::npos);
}

TEST_CASE("word commands") {
  CHECK(run("word eval --group bs --n 2 --map R \"a t a^-1 t^-1\"").out == "(0,0)\n");
  CHECK(run("word nf --group bs --n 2 \"t a^2 t^-1 a^-2\"").out == "1\n");
  CHECK(run("word nf --group dihedral --k 1 \"s^3\"").out == "z s\n");
  CHECK(run("word eval --group dihedral --k 2 --map chi \"s\"").out == "5\n");
  const auto k = run("word kernel-check --group dihedral --k 1 --map chi --samples 200");
  CHECK(k.code == 0);
  CHECK(k.out.find("counterexamples=0") != std::string::npos);
}

TEST_CASE("classify") {
  Workspace w;
  const auto r = run("classify --json " + w.file("tri226.json", kTri226));
  CHECK(r.code == 0);
  CHECK(r.out.find("\"fc\":true") != std::string::npos);
  CHECK(r.out.find("\"join_factors\":2") != std::string::npos);
}

TEST_CASE("corpus output is byte-stable and complete") {
  const auto a = run("corpus --count 100 --max-vertices 6 --labels 2,4 --seed 7");
  const auto b = run("corpus --count 100 --max-vertices 6 --labels 2,4 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  int rows = 0;
  for (char c : a.out) rows += c == '\n';
  CHECK(rows == 100 + 3);
  CHECK(a.out.find("# seed=7") == 0);

  const auto raag = run("corpus --count 100 --max-vertices 6 --labels 2 --seed 3");
  CHECK(raag.out.find("polyfree_certified=100") != std::string::npos);
  const auto trees = run("corpus --count 100 --max-vertices 8 --labels 3 --seed 5 --family tree");
  CHECK(trees.out.find("polyfree_certified=100") != std::string::npos);
}

TEST_CASE("round trip on corpus graphs") {
  // Regenerate a few corpus graphs by hand and run certify/verify on each.
  Workspace w;
  const char* graphs[] = {
      R"({"vertices":["a","b","c","d"],"edges":[["a","b",2],["b","c",4],["c","d",2],["a","d",6]]})",
      R"({"vertices":["a","b","c","d","e"],"edges":[["a","b",3],["b","c",5],["b","d",7],["d","e",3]]})",
      R"({"vertices":["a","b","c"],"edges":[["b","c",4]]})",
      R"({"vertices":["a","b","c","d"],"edges":[["a","b",3],["a","c",2],["a","d",2],["b","c",2],["b","d",2],["c","d",4]]})",
  };
  int i = 0;
  for (const char* text : graphs) {
    const auto g = w.file("g" + std::to_string(i) + ".json", text);
    const auto cert = w.path("c" + std::to_string(i) + ".json");
    CHECK(run("certify polyfree " + g + " -o " + cert).code == 0);
    CHECK(run("verify " + cert + " " + g).code == 0);
    const auto fcert = w.path("f" + std::to_string(i) + ".json");
    CHECK(run("certify fjcw " + g + " -o " + fcert).code == 0);
    CHECK(run("verify " + fcert + " " + g).code == 0);
    ++i;
  }
}
