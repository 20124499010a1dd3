#pragma once

// Free-group words over named generators and the homomorphisms the
// certifier evaluates on them.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "artin/graph.hpp"

namespace artin::word {

using Exponent = std::int64_t;

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(int g) const { return names_[static_cast<std::size_t>(g)]; }
  const std::vector<std::string>& names() const { return names_; }
  // -1 when absent.
  int index_of(std::string_view name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

struct Letter {
  int gen;
  Exponent exp;  // nonzero once reduced
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A freely reduced word: adjacent letters have distinct generators and every
// exponent is nonzero. The empty word is the identity.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  // Freely reduces `letters`. Throws PreconditionError on a generator index
  // outside the alphabet.
  Word(AlphabetPtr alphabet, std::span<const Letter> letters);

  static Word generator(AlphabetPtr alphabet, std::string_view name, Exponent exp = 1);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  // Sum of |exponents|.
  Exponent length() const;

  Word inverse() const;
  Word pow(Exponent e) const;
  // Throws PreconditionError when alphabets differ.
  Word operator*(const Word& rhs) const;

  friend bool operator==(const Word& a, const Word& b) {
    return *a.alphabet_ == *b.alphabet_ && a.letters_ == b.letters_;
  }

 private:
  void push(Letter l);

  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

// Parses whitespace-separated tokens `gen` or `gen^e` (e a nonzero integer).
// Throws ParseError on malformed tokens or generators outside `alphabet`.
Word parse_word(std::string_view text, const AlphabetPtr& alphabet);

// Space-separated `gen` / `gen^e` tokens; "1" for the identity.
std::string to_string(const Word& w);

// Freely reduces a raw letter sequence; zero exponents are dropped.
Word free_reduce(const AlphabetPtr& alphabet, std::span<const Letter> raw);

// Cyclic reduction; with `conjugator` non-null, stores c with
// c * result * c^-1 == w.
Word cyclically_reduce(const Word& w, Word* conjugator = nullptr);

using Substitution = std::map<std::string, Word, std::less<>>;

// Image of `w` under the homomorphism defined by `images`, freely reduced
// over `target`. Throws PreconditionError when a generator of `w` has no
// image or an image lives over a different alphabet.
Word substitute(const Word& w, const Substitution& images, const AlphabetPtr& target);

// Rank-2 abelianisation coordinates (x̄, ȳ).
using AbelianImage = std::array<Exponent, 2>;

// R onto Z^2: a -> (1,1), t -> (0,1) in the {a,t} coordinates of BS(n,n);
// x -> (1,0), y -> (0,1) on vertex generators. Throws PreconditionError on
// any other generator.
AbelianImage eval_R(const Word& w);

// Which generating set a word for chi is written over.
struct ChiDialect {
  enum class Kind { Vertex, Amalgam, BaumslagSolitar };
  Kind kind = Kind::Vertex;
  int k = 1;  // only for Amalgam: the group <s,t | s^2 = t^(2k+1)>

  static ChiDialect vertex() { return {Kind::Vertex, 1}; }
  static ChiDialect amalgam(int k) { return {Kind::Amalgam, k}; }
  static ChiDialect baumslag_solitar() { return {Kind::BaumslagSolitar, 1}; }
};

// chi onto Z sending every vertex generator to 1. In amalgam coordinates
// s -> 2k+1, t -> 2; in BS coordinates (a = xy, t = y) a -> 2, t -> 1.
// Throws PreconditionError on generators outside the dialect.
Exponent eval_chi(const Word& w, ChiDialect dialect);

// Retraction of an even Artin group onto the subgroup spanned by `keep`:
// letters outside `keep` are deleted. `w` must be over the vertex names of
// `g`. Throws PreconditionError when `g` is not even or `w` uses a
// generator that is not a vertex of `g`.
Word eval_retraction(const Word& w, const graph::LabelledGraph& g, graph::VertexSet keep);

}  // namespace artin::word
