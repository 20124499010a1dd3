#pragma once

// Exact normal forms in the two base-case groups:
//
//   BS(n,n) = <a,t | t a^n t^-1 = a^n>    central z = a^n,
//                                         BS(n,n)/<z> = Z_n * Z
//   G_k     = <s,t | s^2 = t^(2k+1)>      central z = s^2 = t^(2k+1),
//                                         G_k/<z> = Z_2 * Z_(2k+1)
//
// Both are central extensions of a free product of two cyclic groups, so an
// element is uniquely z^q times an alternating word over the two factors,
// with finite-order exponents reduced into [1, order-1] and the carries
// collected into q.

#include <cstdint>
#include <string>
#include <vector>

#include "artin/word.hpp"

namespace artin::word {

// Two-generator central extension of C_p * C_q (order 0 = infinite cyclic).
class CentralExtensionGroup {
 public:
  static CentralExtensionGroup baumslag_solitar(int n);  // n >= 1
  static CentralExtensionGroup odd_dihedral(int k);      // k >= 1

  enum class Family { BaumslagSolitar, OddDihedral };

  Family family() const { return family_; }
  int parameter() const { return parameter_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  // Order of generator 0/1 modulo the centre; 0 for infinite.
  Exponent order(int gen) const { return orders_[static_cast<std::size_t>(gen)]; }
  // The central element z as a word.
  Word central_word() const;
  // Defining relator as a word equal to the identity.
  Word relator() const;
  // "BS(2,2)" / "G_1".
  std::string name() const;

  friend bool operator==(const CentralExtensionGroup& a, const CentralExtensionGroup& b) {
    return a.family_ == b.family_ && a.parameter_ == b.parameter_;
  }

 private:
  CentralExtensionGroup(Family f, int parameter, std::vector<std::string> names, Exponent o0, Exponent o1);

  Family family_;
  int parameter_;
  AlphabetPtr alphabet_;
  Exponent orders_[2];
};

struct Syllable {
  int gen;       // 0 or 1
  Exponent exp;  // in [1, order-1] for finite order, nonzero otherwise
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// z^central * residual; residual alternates between the two generators.
struct NormalForm {
  Exponent central = 0;
  std::vector<Syllable> residual;

  bool is_identity() const { return central == 0 && residual.empty(); }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Throws PreconditionError when `w` is not over the group's alphabet.
NormalForm normal_form(const CentralExtensionGroup& g, const Word& w);
NormalForm multiply(const CentralExtensionGroup& g, const NormalForm& lhs, const NormalForm& rhs);
NormalForm inverse(const CentralExtensionGroup& g, const NormalForm& x);
// Word z^central * residual over the group's alphabet.
Word to_word(const CentralExtensionGroup& g, const NormalForm& x);
// "z^1 * a t^-2" style; "1" for the identity.
std::string to_string(const CentralExtensionGroup& g, const NormalForm& x);

// Shorthands for the two families.
NormalForm bs_normal_form(const Word& w, int n);
NormalForm dihedral_normal_form(const Word& w, int k);

// Residual of the cyclic reduction (in the free product of the two cyclic
// quotients).
std::vector<Syllable> cyclic_residual(const CentralExtensionGroup& g, const NormalForm& x);

// Whether x fixes a vertex of the group's Bass–Serre tree. The centre acts
// trivially, so this is decided in the free-product quotient: for G_k the
// vertex groups are <s> and <t>, so x is elliptic iff its cyclic residual
// has at most one syllable; for BS(n,n) (an HNN extension of <a>) the
// stable letter t acts hyperbolically, so x is elliptic iff its cyclic
// residual is empty or a single a-syllable. The identity is elliptic.
bool is_elliptic(const CentralExtensionGroup& g, const NormalForm& x);

}  // namespace artin::word
