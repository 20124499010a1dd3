#include "artin/kernel_check.hpp"

#include <sstream>

#include "artin/error.hpp"

namespace artin::word {

Word random_word(const AlphabetPtr& alphabet, int max_len, Rng& rng) {
  const auto len = 1 + rng.below(static_cast<std::uint64_t>(max_len));
  std::vector<Letter> raw;
  raw.reserve(len);
  for (std::uint64_t i = 0; i < len; ++i) {
    const auto pick = rng.below(2 * alphabet->size());
    raw.push_back({static_cast<int>(pick / 2), pick % 2 == 0 ? 1 : -1});
  }
  return Word(alphabet, raw);
}

KernelCheckReport kernel_free_action_check(const CentralExtensionGroup& g, KernelMap map,
                                           const KernelCheckParams& params) {
  if (params.samples < 1 || params.max_len < 1) throw PreconditionError("samples and max_len must be positive");
  const bool bs = g.family() == CentralExtensionGroup::Family::BaumslagSolitar;
  if (map == KernelMap::R && !bs) throw PreconditionError("R is defined on BS(n,n) only");

  KernelCheckReport report;
  report.group = g.name();
  report.map = map == KernelMap::R ? "R" : "chi";
  report.params = params;

  const ChiDialect dialect = bs ? ChiDialect::baumslag_solitar() : ChiDialect::amalgam(g.parameter());
  Rng rng(params.seed);
  for (int i = 0; i < params.samples; ++i) {
    const Word w = random_word(g.alphabet(), params.max_len, rng);
    bool in_kernel = false;
    if (map == KernelMap::R) {
      const auto image = eval_R(w);
      in_kernel = image[0] == 0 && image[1] == 0;
    } else {
      in_kernel = eval_chi(w, dialect) == 0;
    }
    if (!in_kernel) continue;
    ++report.in_kernel;
    const NormalForm nf = normal_form(g, w);
    if (nf.is_identity()) {
      ++report.trivial;
      continue;
    }
    ++report.nontrivial;
    if (is_elliptic(g, nf)) report.counterexamples.push_back(to_string(w));
  }

  if (report.in_kernel == 0) {
    report.note = "no kernel elements sampled";
  } else if (report.nontrivial == 0) {
    report.note = "kernel trivial at this scale";
  }
  return report;
}

std::string summary(const KernelCheckReport& r) {
  std::ostringstream os;
  os << r.group << " ker " << r.map << ": samples=" << r.params.samples << " max_len=" << r.params.max_len
     << " seed=" << r.params.seed << " in_kernel=" << r.in_kernel << " trivial=" << r.trivial
     << " nontrivial=" << r.nontrivial << " counterexamples=" << r.counterexamples.size();
  if (!r.note.empty()) os << " (" << r.note << ")";
  return os.str();
}

}  // namespace artin::word
