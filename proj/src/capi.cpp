#include "artin/artin.h"

#include <cstdlib>
#include <cstring>
#include <variant>

#include "artin/certify.hpp"
#include "artin/corpus.hpp"
#include "artin/error.hpp"
#include "artin/graph_io.hpp"
#include "artin/kernel_check.hpp"
#include "artin/presentation.hpp"
#include "artin/verify.hpp"

struct artin_graph {
  artin::graph::LabelledGraph g;
};

struct artin_verdict {
  std::variant<artin::certify::PolyFreeVerdict, artin::certify::FjcVerdict> v;
};

namespace {

using Json = nlohmann::ordered_json;

thread_local std::string last_error;

artin_status fail(artin_status s, const std::string& what) {
  last_error = what;
  return s;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

artin_status emit(const std::string& s, char** out, artin_status status = ARTIN_OK) {
  *out = copy_out(s);
  if (!*out) return fail(ARTIN_INTERNAL_ERROR, "out of memory");
  return status;
}

// Runs `body`, mapping library exceptions to status codes.
template <typename F>
artin_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const artin::ParseError& e) {
    std::string msg = e.what();
    if (e.position() != artin::ParseError::npos) msg += " (at byte " + std::to_string(e.position()) + ")";
    return fail(ARTIN_INPUT_ERROR, msg);
  } catch (const artin::SchemaError& e) {
    return fail(ARTIN_REJECTED, std::string("schema violation: ") + e.what());
  } catch (const artin::PreconditionError& e) {
    return fail(ARTIN_INPUT_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ARTIN_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(ARTIN_INTERNAL_ERROR, e.what());
  }
}

std::optional<artin::word::CentralExtensionGroup> make_group(artin_group group, int param) {
  if (param < 1) throw artin::PreconditionError("group parameter must be at least 1");
  switch (group) {
    case ARTIN_GROUP_BS:
      return artin::word::CentralExtensionGroup::baumslag_solitar(param);
    case ARTIN_GROUP_DIHEDRAL:
      return artin::word::CentralExtensionGroup::odd_dihedral(param);
  }
  return std::nullopt;
}

// Parses over the group's generators, falling back to the vertex
// generators x, y.
artin::word::Word parse_any(const artin::word::CentralExtensionGroup& g, const char* text) {
  try {
    return artin::word::parse_word(text, g.alphabet());
  } catch (const artin::ParseError&) {
    static const auto xy = artin::word::make_alphabet({"x", "y"});
    try {
      return artin::word::parse_word(text, xy);
    } catch (const artin::ParseError&) {
    }
    throw;
  }
}

}  // namespace

extern "C" {

const char* artin_version(void) { return "1.0.0"; }

const char* artin_last_error(void) { return last_error.c_str(); }

void artin_string_free(char* s) { std::free(s); }

artin_status artin_graph_parse(const char* text, artin_graph** out) {
  if (!text || !out) return fail(ARTIN_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new artin_graph{artin::graph::parse_graph(text)};
    return ARTIN_OK;
  });
}

void artin_graph_free(artin_graph* g) { delete g; }

artin_status artin_graph_serialize(const artin_graph* g, char** out) {
  if (!g || !out) return fail(ARTIN_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(artin::graph::serialize(g->g), out); });
}

artin_status artin_graph_hash(const artin_graph* g, char** out) {
  if (!g || !out) return fail(ARTIN_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(artin::graph::content_hash(g->g), out); });
}

artin_status artin_graph_classify(const artin_graph* g, int json, char** out) {
  if (!g || !out) return fail(ARTIN_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto c = artin::corpus::classify(g->g);
    return emit(json ? artin::certify::dump(artin::corpus::to_json(g->g, c)) : artin::corpus::to_text(g->g, c), out);
  });
}

artin_status artin_certify(const artin_graph* g, artin_property property, artin_verdict** out) {
  if (!g || !out) return fail(ARTIN_INVALID_ARGUMENT, "null argument");
  if (property != ARTIN_POLYFREE && property != ARTIN_FJCW) return fail(ARTIN_INVALID_ARGUMENT, "unknown property");
  *out = nullptr;
  return guarded([&] {
    if (property == ARTIN_POLYFREE) {
      *out = new artin_verdict{artin::certify::certify_polyfree(g->g)};
    } else {
      *out = new artin_verdict{artin::certify::certify_fjcw(g->g)};
    }
    return ARTIN_OK;
  });
}

void artin_verdict_free(artin_verdict* v) { delete v; }

int artin_verdict_certified(const artin_verdict* v) {
  if (!v) return 0;
  return std::visit([](const auto& x) { return x.certified() ? 1 : 0; }, v->v);
}

int artin_verdict_length(const artin_verdict* v) {
  if (!v) return -1;
  if (const auto* p = std::get_if<artin::certify::PolyFreeVerdict>(&v->v); p && p->certified()) {
    return p->certificate().length;
  }
  return -1;
}

artin_status artin_verdict_json(const artin_verdict* v, char** out) {
  if (!v || !out) return fail(ARTIN_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const Json j = std::visit(
        [](const auto& x) {
          return x.certified() ? artin::certify::to_json(x.certificate()) : artin::certify::to_json(x.unknown());
        },
        v->v);
    return emit(artin::certify::dump(j), out);
  });
}

artin_status artin_verdict_explain(const artin_verdict* v, char** out) {
  if (!v || !out) return fail(ARTIN_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    return emit(std::visit([](const auto& x) { return artin::certify::explain(x); }, v->v), out);
  });
}

artin_status artin_verify(const char* cert_text, const artin_graph* g, int json, char** report, long* failing_index) {
  if (!cert_text || !g || !report) return fail(ARTIN_INVALID_ARGUMENT, "null argument");
  *report = nullptr;
  if (failing_index) *failing_index = -1;
  return guarded([&] {
    const auto r = artin::certify::verify_certificate(std::string_view(cert_text), g->g);
    if (failing_index && r.failing_index) *failing_index = static_cast<long>(*r.failing_index);
    std::string text;
    if (json) {
      Json j;
      j["accepted"] = r.accepted;
      j["kind"] = r.kind;
      j["failing_index"] = r.failing_index ? Json(*r.failing_index) : Json(nullptr);
      j["reason"] = r.reason;
      j["corroboration"] = r.corroboration;
      text = artin::certify::dump(j);
    } else {
      text = artin::certify::summary(r) + "\n";
      for (const auto& c : r.corroboration) text += "  kernel check: " + c + "\n";
    }
    if (!r.accepted) last_error = artin::certify::summary(r);
    return emit(text, report, r.accepted ? ARTIN_OK : ARTIN_REJECTED);
  });
}

artin_status artin_word_nf(artin_group group, int param, const char* word, int json, char** out) {
  if (!word || !out) return fail(ARTIN_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto g = make_group(group, param);
    if (!g) return fail(ARTIN_INVALID_ARGUMENT, "unknown group");
    const auto w = artin::word::to_group_word(*g, parse_any(*g, word));
    const auto nf = artin::word::normal_form(*g, w);
    if (!json) return emit(artin::word::to_string(*g, nf) + "\n", out);
    Json j;
    j["group"] = g->name();
    j["word"] = artin::word::to_string(w);
    j["central"] = nf.central;
    Json residual = Json::array();
    for (const auto& s : nf.residual) residual.push_back(Json::array({g->alphabet()->name(s.gen), s.exp}));
    j["residual"] = std::move(residual);
    j["normal_form"] = artin::word::to_string(*g, nf);
    j["elliptic"] = artin::word::is_elliptic(*g, nf);
    return emit(artin::certify::dump(j), out);
  });
}

artin_status artin_word_eval(artin_group group, int param, artin_map map, const char* word, int json, char** out) {
  if (!word || !out) return fail(ARTIN_INVALID_ARGUMENT, "null argument");
  if (map != ARTIN_MAP_R && map != ARTIN_MAP_CHI) return fail(ARTIN_INVALID_ARGUMENT, "unknown map");
  return guarded([&] {
    const auto g = make_group(group, param);
    if (!g) return fail(ARTIN_INVALID_ARGUMENT, "unknown group");
    const auto w = parse_any(*g, word);
    const bool vertex = *w.alphabet() != *g->alphabet();
    const bool bs = g->family() == artin::word::CentralExtensionGroup::Family::BaumslagSolitar;
    Json j;
    j["group"] = g->name();
    j["map"] = map == ARTIN_MAP_R ? "R" : "chi";
    std::string text;
    if (map == ARTIN_MAP_R) {
      if (!bs) return fail(ARTIN_INPUT_ERROR, "R is defined on BS(n,n) only");
      const auto v = artin::word::eval_R(w);
      j["value"] = Json::array({v[0], v[1]});
      text = "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")";
    } else {
      using artin::word::ChiDialect;
      const ChiDialect d = vertex ? ChiDialect::vertex()
                                  : (bs ? ChiDialect::baumslag_solitar() : ChiDialect::amalgam(g->parameter()));
      const auto v = artin::word::eval_chi(w, d);
      j["value"] = v;
      text = std::to_string(v);
    }
    return emit(json ? artin::certify::dump(j) : text + "\n", out);
  });
}

artin_status artin_kernel_check(artin_group group, int param, artin_map map, int samples, int max_len, uint64_t seed,
                                int json, char** out) {
  if (!out) return fail(ARTIN_INVALID_ARGUMENT, "null argument");
  if (map != ARTIN_MAP_R && map != ARTIN_MAP_CHI) return fail(ARTIN_INVALID_ARGUMENT, "unknown map");
  return guarded([&] {
    const auto g = make_group(group, param);
    if (!g) return fail(ARTIN_INVALID_ARGUMENT, "unknown group");
    const auto r = artin::word::kernel_free_action_check(
        *g, map == ARTIN_MAP_R ? artin::word::KernelMap::R : artin::word::KernelMap::Chi, {samples, max_len, seed});
    std::string text;
    if (json) {
      Json j;
      j["group"] = r.group;
      j["map"] = r.map;
      j["samples"] = r.params.samples;
      j["max_len"] = r.params.max_len;
      j["seed"] = r.params.seed;
      j["in_kernel"] = r.in_kernel;
      j["trivial"] = r.trivial;
      j["nontrivial"] = r.nontrivial;
      j["counterexamples"] = r.counterexamples;
      j["note"] = r.note;
      j["passed"] = r.passed();
      text = artin::certify::dump(j);
    } else {
      text = artin::word::summary(r) + "\n";
    }
    if (!r.passed()) last_error = "elliptic kernel element: " + r.counterexamples.front();
    return emit(text, out, r.passed() ? ARTIN_OK : ARTIN_REJECTED);
  });
}

artin_status artin_corpus(int count, int max_vertices, const int* labels, size_t n_labels, uint64_t seed,
                          artin_family family, int timing, char** csv) {
  if (!csv || (!labels && n_labels > 0)) return fail(ARTIN_INVALID_ARGUMENT, "null argument");
  if (family != ARTIN_FAMILY_ER && family != ARTIN_FAMILY_TREE) return fail(ARTIN_INVALID_ARGUMENT, "unknown family");
  return guarded([&] {
    artin::corpus::Params p;
    p.count = count;
    p.max_vertices = max_vertices;
    p.labels.assign(labels, labels + n_labels);
    p.seed = seed;
    p.family = family == ARTIN_FAMILY_TREE ? artin::corpus::Family::Tree : artin::corpus::Family::ErdosRenyi;
    p.timing = timing != 0;
    return emit(artin::corpus::report(p), csv);
  });
}

}  // extern "C"
