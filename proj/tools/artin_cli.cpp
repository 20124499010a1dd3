// Command-line front end over the C API.
//
// Exit codes: 0 success / certified, 1 unknown, 2 input or usage error,
// 3 verification rejected.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "artin/artin.h"

namespace {

constexpr int kUsageError = 2;

struct StringDeleter {
  void operator()(char* s) const { artin_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
  void operator()(artin_graph* g) const { artin_graph_free(g); }
};
using OwnedGraph = std::unique_ptr<artin_graph, GraphDeleter>;

struct VerdictDeleter {
  void operator()(artin_verdict* v) const { artin_verdict_free(v); }
};
using OwnedVerdict = std::unique_ptr<artin_verdict, VerdictDeleter>;

int report_error(artin_status s) {
  std::cerr << "error: " << artin_last_error() << "\n";
  return s == ARTIN_REJECTED ? 3 : kUsageError;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Loads and parses a graph file; on failure prints the reason and returns
// null.
OwnedGraph load_graph(const std::string& path) {
  const auto text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    return nullptr;
  }
  artin_graph* g = nullptr;
  if (artin_graph_parse(text->c_str(), &g) != ARTIN_OK) {
    std::cerr << "error: " << path << ": " << artin_last_error() << "\n";
    return nullptr;
  }
  return OwnedGraph(g);
}

// Runs a C API call that hands out a string and prints it.
template <typename Call>
int print(Call&& call) {
  char* raw = nullptr;
  const artin_status s = call(&raw);
  OwnedString out(raw);
  if (s != ARTIN_OK && s != ARTIN_REJECTED) return report_error(s);
  if (out) std::cout << out.get();
  if (s == ARTIN_REJECTED) {
    std::cerr << "error: " << artin_last_error() << "\n";
    return 3;
  }
  return 0;
}

int run_classify(const std::string& file, bool json) {
  auto g = load_graph(file);
  if (!g) return kUsageError;
  return print([&](char** out) { return artin_graph_classify(g.get(), json ? 1 : 0, out); });
}

int run_certify(artin_property property, const std::string& file, const std::string& cert_path, bool json) {
  auto g = load_graph(file);
  if (!g) return kUsageError;
  artin_verdict* raw = nullptr;
  if (const auto s = artin_certify(g.get(), property, &raw); s != ARTIN_OK) return report_error(s);
  OwnedVerdict v(raw);
  const bool certified = artin_verdict_certified(v.get()) != 0;

  char* js = nullptr;
  if (const auto s = artin_verdict_json(v.get(), &js); s != ARTIN_OK) return report_error(s);
  OwnedString json_text(js);

  if (!cert_path.empty() && certified) {
    std::ofstream out(cert_path, std::ios::binary);
    out << json_text.get();
    if (!out) {
      std::cerr << "error: cannot write " << cert_path << "\n";
      return kUsageError;
    }
  }
  if (json) {
    std::cout << json_text.get();
  } else {
    char* ex = nullptr;
    if (const auto s = artin_verdict_explain(v.get(), &ex); s != ARTIN_OK) return report_error(s);
    OwnedString text(ex);
    std::cout << text.get();
  }
  return certified ? 0 : 1;
}

int run_verify(const std::string& cert_path, const std::string& file, bool json) {
  const auto cert = read_file(cert_path);
  if (!cert) {
    std::cerr << "error: cannot read " << cert_path << "\n";
    return kUsageError;
  }
  auto g = load_graph(file);
  if (!g) return kUsageError;
  return print([&](char** out) { return artin_verify(cert->c_str(), g.get(), json ? 1 : 0, out, nullptr); });
}

struct WordOptions {
  std::string group;
  int n = 0;
  int k = 0;
  std::string map = "R";
  std::string word;
  int samples = 1000;
  int max_len = 16;
  std::uint64_t seed = 1;
  bool json = false;
};

void add_group_options(CLI::App* cmd, WordOptions& o) {
  cmd->add_option("--group", o.group, "bs or dihedral")->required()->check(CLI::IsMember({"bs", "dihedral"}));
  cmd->add_option("--n", o.n, "n for BS(n,n)");
  cmd->add_option("--k", o.k, "k for <s,t | s^2 = t^(2k+1)>");
  cmd->add_flag("--json", o.json, "canonical JSON output");
}

// Returns the C enum and parameter, or nullopt after printing a usage error.
std::optional<std::pair<artin_group, int>> group_of(const WordOptions& o) {
  if (o.group == "bs") {
    if (o.n < 1) {
      std::cerr << "error: --group bs needs --n N with N >= 1\n";
      return std::nullopt;
    }
    return std::make_pair(ARTIN_GROUP_BS, o.n);
  }
  if (o.k < 1) {
    std::cerr << "error: --group dihedral needs --k K with K >= 1\n";
    return std::nullopt;
  }
  return std::make_pair(ARTIN_GROUP_DIHEDRAL, o.k);
}

artin_map map_of(const WordOptions& o) { return o.map == "R" ? ARTIN_MAP_R : ARTIN_MAP_CHI; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poly-freeness and Farrell-Jones certificates for Artin groups"};
  app.name("artin");
  app.require_subcommand(1);

  bool json = false;
  std::string file;
  std::string cert_path;

  auto* classify = app.add_subcommand("classify", "even / FC / tree / join / clique report");
  classify->add_option("FILE", file, "graph file")->required();
  classify->add_flag("--json", json, "canonical JSON output");

  auto* certify = app.add_subcommand("certify", "build a certificate");
  certify->require_subcommand(1);
  auto* polyfree = certify->add_subcommand("polyfree", "normally poly-free certificate");
  auto* fjcw = certify->add_subcommand("fjcw", "Farrell-Jones (FJCw) certificate");
  for (auto* c : {polyfree, fjcw}) {
    c->add_option("FILE", file, "graph file")->required();
    c->add_option("-o,--output", cert_path, "write the certificate here");
    c->add_flag("--json", json, "print the certificate or diagnostics as JSON");
  }

  auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
  verify->add_option("CERT", cert_path, "certificate file")->required();
  verify->add_option("FILE", file, "graph file")->required();
  verify->add_flag("--json", json, "JSON report");

  WordOptions wo;
  auto* word = app.add_subcommand("word", "word arithmetic in BS(n,n) and G_k");
  word->require_subcommand(1);
  auto* nf = word->add_subcommand("nf", "normal form");
  auto* eval = word->add_subcommand("eval", "evaluate R or chi");
  auto* kcheck = word->add_subcommand("kernel-check", "sample kernel elements and test ellipticity");
  for (auto* c : {nf, eval, kcheck}) add_group_options(c, wo);
  for (auto* c : {nf, eval}) c->add_option("WORD", wo.word, "word such as \"a t a^-1 t^-1\"")->required();
  for (auto* c : {eval, kcheck}) {
    c->add_option("--map", wo.map, "R or chi")->check(CLI::IsMember({"R", "chi"}));
  }
  kcheck->add_option("--samples", wo.samples, "random words to draw")->check(CLI::PositiveNumber);
  kcheck->add_option("--max-len", wo.max_len, "maximum word length")->check(CLI::PositiveNumber);
  kcheck->add_option("--seed", wo.seed, "random seed");

  int count = 100;
  int max_vertices = 6;
  std::vector<int> labels{2};
  std::uint64_t seed = 1;
  std::string family = "er";
  bool timing = false;
  auto* corpus = app.add_subcommand("corpus", "random graphs, verdict statistics as CSV");
  corpus->add_option("--count", count, "number of graphs")->required();
  corpus->add_option("--max-vertices", max_vertices, "at most 64")->required();
  corpus->add_option("--labels", labels, "comma-separated labels")->delimiter(',')->required();
  corpus->add_option("--seed", seed, "random seed")->required();
  corpus->add_option("--family", family, "er or tree")->check(CLI::IsMember({"er", "tree"}));
  corpus->add_flag("--timing", timing, "add a wall-time column (not byte-stable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsageError;
  }

  if (*classify) return run_classify(file, json);
  if (*certify) return run_certify(*polyfree ? ARTIN_POLYFREE : ARTIN_FJCW, file, cert_path, json);
  if (*verify) return run_verify(cert_path, file, json);
  if (*word) {
    const auto g = group_of(wo);
    if (!g) return kUsageError;
    const int js = wo.json ? 1 : 0;
    if (*nf) return print([&](char** out) { return artin_word_nf(g->first, g->second, wo.word.c_str(), js, out); });
    if (*eval) {
      return print(
          [&](char** out) { return artin_word_eval(g->first, g->second, map_of(wo), wo.word.c_str(), js, out); });
    }
    return print([&](char** out) {
      return artin_kernel_check(g->first, g->second, map_of(wo), wo.samples, wo.max_len, wo.seed, js, out);
    });
  }
  if (*corpus) {
    return print([&](char** out) {
      return artin_corpus(count, max_vertices, labels.data(), labels.size(), seed,
                          family == "tree" ? ARTIN_FAMILY_TREE : ARTIN_FAMILY_ER, timing ? 1 : 0, out);
    });
  }
  return kUsageError;
}
