#include "artin/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "artin/error.hpp"

namespace artin::word {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {}

int Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

Word::Word(AlphabetPtr alphabet, std::span<const Letter> letters) : alphabet_(std::move(alphabet)) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= alphabet_->size()) {
      throw PreconditionError("generator index " + std::to_string(l.gen) + " outside the alphabet");
    }
    push(l);
  }
}

Word Word::generator(AlphabetPtr alphabet, std::string_view name, Exponent exp) {
  const int g = alphabet->index_of(name);
  if (g < 0) throw PreconditionError("unknown generator '" + std::string(name) + "'");
  const Letter l{g, exp};
  return Word(std::move(alphabet), std::span<const Letter>(&l, 1));
}

void Word::push(Letter l) {
  if (l.exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == l.gen) {
    letters_.back().exp += l.exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

Exponent Word::length() const {
  Exponent n = 0;
  for (const auto& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
  return n;
}

Word Word::inverse() const {
  Word out(alphabet_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back({it->gen, -it->exp});
  return out;
}

Word Word::pow(Exponent e) const {
  Word base = e < 0 ? inverse() : *this;
  Word out(alphabet_);
  for (Exponent i = 0; i < (e < 0 ? -e : e); ++i) out = out * base;
  return out;
}

Word Word::operator*(const Word& rhs) const {
  if (!(*alphabet_ == *rhs.alphabet_)) throw PreconditionError("multiplying words over different alphabets");
  Word out = *this;
  for (const auto& l : rhs.letters_) out.push(l);
  return out;
}

Word free_reduce(const AlphabetPtr& alphabet, std::span<const Letter> raw) { return Word(alphabet, raw); }

Word parse_word(std::string_view text, const AlphabetPtr& alphabet) {
  std::vector<Letter> raw;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    const std::string_view token = text.substr(start, pos - start);
    if (token == "1") continue;

    std::string_view name = token;
    Exponent exp = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      const std::string_view digits = token.substr(caret + 1);
      auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exp);
      if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty()) {
        throw ParseError("bad exponent in token '" + std::string(token) + "'", start);
      }
      if (exp == 0) throw ParseError("zero exponent in token '" + std::string(token) + "'", start);
    }
    const int g = alphabet->index_of(name);
    if (g < 0) throw ParseError("unknown generator '" + std::string(name) + "'", start);
    raw.push_back({g, exp});
  }
  return Word(alphabet, raw);
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << ' ';
    os << w.alphabet()->name(l.gen);
    if (l.exp != 1) os << '^' << l.exp;
    first = false;
  }
  return os.str();
}

Word cyclically_reduce(const Word& w, Word* conjugator) {
  std::vector<Letter> ls = w.letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  std::vector<Letter> conj;
  // Peel matching ends: w = c r c^-1 with r cyclically reduced.
  while (hi - lo >= 2 && ls[lo].gen == ls[hi - 1].gen) {
    Letter& first = ls[lo];
    Letter& last = ls[hi - 1];
    if (first.exp == -last.exp) {
      conj.push_back(first);
      ++lo;
      --hi;
    } else {
      // x^p ... x^q  ->  conjugate by x^-q to fold the tail into the head.
      conj.push_back({last.gen, -last.exp});
      first.exp += last.exp;
      --hi;
      break;
    }
  }
  if (conjugator) *conjugator = Word(w.alphabet(), conj);
  return Word(w.alphabet(), std::span<const Letter>(ls.data() + lo, hi - lo));
}

Word substitute(const Word& w, const Substitution& images, const AlphabetPtr& target) {
  Word out(target);
  for (const auto& l : w.letters()) {
    const std::string& name = w.alphabet()->name(l.gen);
    auto it = images.find(name);
    if (it == images.end()) throw PreconditionError("no image for generator '" + name + "'");
    if (!(*it->second.alphabet() == *target)) {
      throw PreconditionError("image of '" + name + "' is not over the target alphabet");
    }
    out = out * it->second.pow(l.exp);
  }
  return out;
}

AbelianImage eval_R(const Word& w) {
  AbelianImage out{0, 0};
  for (const auto& l : w.letters()) {
    const std::string& g = w.alphabet()->name(l.gen);
    if (g == "a") {
      out[0] += l.exp;
      out[1] += l.exp;
    } else if (g == "x") {
      out[0] += l.exp;
    } else if (g == "t" || g == "y") {
      out[1] += l.exp;
    } else {
      throw PreconditionError("R is defined on {a,t} or {x,y}; got generator '" + g + "'");
    }
  }
  return out;
}

Exponent eval_chi(const Word& w, ChiDialect dialect) {
  Exponent out = 0;
  for (const auto& l : w.letters()) {
    const std::string& g = w.alphabet()->name(l.gen);
    Exponent weight = 0;
    switch (dialect.kind) {
      case ChiDialect::Kind::Vertex:
        if (g == "x" || g == "y") weight = 1;
        break;
      case ChiDialect::Kind::Amalgam:
        if (g == "s") weight = 2 * dialect.k + 1;
        if (g == "t") weight = 2;
        break;
      case ChiDialect::Kind::BaumslagSolitar:
        if (g == "a") weight = 2;
        if (g == "t") weight = 1;
        break;
    }
    if (weight == 0) throw PreconditionError("generator '" + g + "' does not belong to the chi dialect");
    out += weight * l.exp;
  }
  return out;
}

Word eval_retraction(const Word& w, const graph::LabelledGraph& g, graph::VertexSet keep) {
  if (!keep.subset_of(g.all())) throw PreconditionError("retraction target is not a subset of the vertices");
  if (!graph::is_even(g)) throw PreconditionError("retractions are homomorphisms only for even Artin groups");
  std::vector<Letter> kept;
  for (const auto& l : w.letters()) {
    auto v = g.index_of(w.alphabet()->name(l.gen));
    if (!v) throw PreconditionError("generator '" + w.alphabet()->name(l.gen) + "' is not a vertex");
    if (keep.contains(*v)) kept.push_back(l);
  }
  return Word(w.alphabet(), kept);
}

}  // namespace artin::word
