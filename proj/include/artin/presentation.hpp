#pragma once

// Finite presentations with a triviality decider, and verification that a
// pair of generator substitutions is a mutually inverse isomorphism.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "artin/normal_form.hpp"
#include "artin/word.hpp"

namespace artin::word {

struct Presentation {
  std::string name;
  AlphabetPtr alphabet;
  std::vector<Word> relators;
  // Returns true only when the word is trivial in the group. When `exact`
  // is set it also returns false only for nontrivial words.
  std::function<bool(const Word&)> is_trivial;
  bool exact = false;
};

// <a,t | t a^n t^-1 a^-n>, decided by the BS(n,n) normal form.
Presentation bs_presentation(int n);
// <s,t | s^2 t^-(2k+1)>, decided by the G_k normal form.
Presentation amalgam_presentation(int k);
// Dihedral Artin group <x,y | <x,y>^m = <y,x>^m>. The decider is the
// sound partial one of one_relator_decider.
Presentation dihedral_artin_presentation(int m);

// Accepts a word when it freely reduces to the identity or is conjugate in
// the free group to some relator or relator inverse. Never accepts a
// nontrivial element; may reject trivial ones.
std::function<bool(const Word&)> one_relator_decider(std::vector<Word> relators);

struct SubstitutionCheck {
  bool ok = false;
  // First failing condition and its witness word, when !ok.
  std::string failure;
};

// Decides whether `forward` (source generators -> target words) and
// `backward` (target generators -> source words) induce mutually inverse
// isomorphisms:
//   every source relator maps to the identity of the target,
//   every target relator maps to the identity of the source,
//   backward(forward(g)) == g for source generators,
//   forward(backward(g)) == g for target generators.
// Each condition is decided with the side's decider. Throws
// PreconditionError when a map misses a generator or uses the wrong
// alphabet.
SubstitutionCheck check_substitution(const Presentation& source, const Presentation& target,
                                     const Substitution& forward, const Substitution& backward);

// x -> a t^-1, y -> t and a -> x y, t -> y.
Substitution bs_forward(int n);
Substitution bs_backward(int n);
// x -> s t^-k, y -> t^(k+1) s^-1 and s -> x (y x)^k, t -> y x.
Substitution amalgam_forward(int k);
Substitution amalgam_backward(int k);

// Rewrites a vertex-generator word into the group's own generators (via the
// substitutions above, for the dihedral Artin group of label 2n resp.
// 2k+1). Words already over the group's alphabet pass through.
Word to_group_word(const CentralExtensionGroup& g, const Word& w);

}  // namespace artin::word
