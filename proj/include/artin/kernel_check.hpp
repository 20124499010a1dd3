#pragma once

// Element-wise corroboration of the free-kernel claims: a nontrivial element
// of a kernel that acts freely on the Bass–Serre tree is never elliptic.

#include <cstdint>
#include <string>
#include <vector>

#include "artin/normal_form.hpp"
#include "artin/random.hpp"

namespace artin::word {

enum class KernelMap {
  R,    // onto Z^2 (BS(n,n) only)
  Chi,  // onto Z
};

struct KernelCheckParams {
  int samples = 1000;
  int max_len = 16;
  std::uint64_t seed = 1;
};

struct KernelCheckReport {
  std::string group;
  std::string map;
  KernelCheckParams params;
  int in_kernel = 0;     // sampled words with zero image
  int trivial = 0;       // of those, equal to the identity
  int nontrivial = 0;    // of those, checked for ellipticity
  std::vector<std::string> counterexamples;
  std::string note;

  bool passed() const { return counterexamples.empty(); }
};

// Uniform random word of length in [1, max_len] over {g, g^-1}.
Word random_word(const AlphabetPtr& alphabet, int max_len, Rng& rng);

// Samples `params.samples` words, keeps those in the kernel of `map` and
// checks every nontrivial one is non-elliptic. R is only defined on
// BS(n,n). Throws PreconditionError for R on G_k or non-positive counts.
KernelCheckReport kernel_free_action_check(const CentralExtensionGroup& g, KernelMap map,
                                           const KernelCheckParams& params);

// One-line human summary.
std::string summary(const KernelCheckReport& r);

}  // namespace artin::word
