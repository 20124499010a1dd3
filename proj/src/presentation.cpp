#include "artin/presentation.hpp"

#include "artin/error.hpp"

namespace artin::word {

namespace {

Word gen(const AlphabetPtr& a, const char* name, Exponent e = 1) { return Word::generator(a, name, e); }

// Alternating product x y x ... of length m.
Word alternating(const Word& x, const Word& y, int m) {
  Word out(x.alphabet());
  for (int i = 0; i < m; ++i) out = out * (i % 2 == 0 ? x : y);
  return out;
}

Presentation central_presentation(const CentralExtensionGroup& g) {
  Presentation p;
  p.name = g.name();
  p.alphabet = g.alphabet();
  p.relators = {g.relator()};
  p.is_trivial = [g](const Word& w) { return normal_form(g, w).is_identity(); };
  p.exact = true;
  return p;
}

const AlphabetPtr& xy_alphabet() {
  static const AlphabetPtr a = make_alphabet({"x", "y"});
  return a;
}

}  // namespace

Presentation bs_presentation(int n) { return central_presentation(CentralExtensionGroup::baumslag_solitar(n)); }

Presentation amalgam_presentation(int k) { return central_presentation(CentralExtensionGroup::odd_dihedral(k)); }

Presentation dihedral_artin_presentation(int m) {
  if (m < 2) throw PreconditionError("dihedral Artin groups need a label >= 2");
  const auto& a = xy_alphabet();
  const Word x = gen(a, "x");
  const Word y = gen(a, "y");
  Presentation p;
  p.name = "A(I_" + std::to_string(m) + ")";
  p.alphabet = a;
  p.relators = {alternating(x, y, m) * alternating(y, x, m).inverse()};
  p.is_trivial = one_relator_decider(p.relators);
  p.exact = false;
  return p;
}

std::function<bool(const Word&)> one_relator_decider(std::vector<Word> relators) {
  std::vector<Word> cyclic;
  for (const auto& r : relators) {
    cyclic.push_back(cyclically_reduce(r));
    cyclic.push_back(cyclically_reduce(r.inverse()));
  }
  return [cyclic = std::move(cyclic)](const Word& w) {
    if (w.is_identity()) return true;
    const Word c = cyclically_reduce(w);
    const auto& ls = c.letters();
    for (const auto& r : cyclic) {
      const auto& rs = r.letters();
      if (rs.size() != ls.size()) continue;
      // Compare against every cyclic rotation, including rotations that
      // split a syllable, by expanding both to unit letters.
      std::vector<Letter> a;
      std::vector<Letter> b;
      for (const auto& l : ls) {
        for (Exponent i = 0; i < (l.exp < 0 ? -l.exp : l.exp); ++i) a.push_back({l.gen, l.exp < 0 ? -1 : 1});
      }
      for (const auto& l : rs) {
        for (Exponent i = 0; i < (l.exp < 0 ? -l.exp : l.exp); ++i) b.push_back({l.gen, l.exp < 0 ? -1 : 1});
      }
      if (a.size() != b.size()) continue;
      for (std::size_t shift = 0; shift < a.size(); ++shift) {
        bool same = true;
        for (std::size_t i = 0; i < a.size() && same; ++i) same = a[(i + shift) % a.size()] == b[i];
        if (same) return true;
      }
    }
    return false;
  };
}

SubstitutionCheck check_substitution(const Presentation& source, const Presentation& target,
                                     const Substitution& forward, const Substitution& backward) {
  for (const auto& name : source.alphabet->names()) {
    if (!forward.count(name)) throw PreconditionError("forward map misses generator '" + name + "'");
  }
  for (const auto& name : target.alphabet->names()) {
    if (!backward.count(name)) throw PreconditionError("backward map misses generator '" + name + "'");
  }

  auto fail = [](std::string what, const Word& witness) {
    return SubstitutionCheck{false, std::move(what) + ": " + to_string(witness)};
  };

  for (const auto& r : source.relators) {
    const Word image = substitute(r, forward, target.alphabet);
    if (!target.is_trivial(image)) return fail("source relator not trivial in " + target.name, image);
  }
  for (const auto& r : target.relators) {
    const Word image = substitute(r, backward, source.alphabet);
    if (!source.is_trivial(image)) return fail("target relator not trivial in " + source.name, image);
  }
  for (const auto& name : source.alphabet->names()) {
    const Word g = Word::generator(source.alphabet, name);
    const Word round = substitute(substitute(g, forward, target.alphabet), backward, source.alphabet);
    if (!source.is_trivial(round * g.inverse())) return fail("backward(forward(" + name + ")) differs", round);
  }
  for (const auto& name : target.alphabet->names()) {
    const Word g = Word::generator(target.alphabet, name);
    const Word round = substitute(substitute(g, backward, source.alphabet), forward, target.alphabet);
    if (!target.is_trivial(round * g.inverse())) return fail("forward(backward(" + name + ")) differs", round);
  }
  return {true, {}};
}

Substitution bs_forward(int n) {
  const auto a = CentralExtensionGroup::baumslag_solitar(n).alphabet();
  return {{"x", gen(a, "a") * gen(a, "t", -1)}, {"y", gen(a, "t")}};
}

Substitution bs_backward(int) {
  const auto& a = xy_alphabet();
  return {{"a", gen(a, "x") * gen(a, "y")}, {"t", gen(a, "y")}};
}

Substitution amalgam_forward(int k) {
  const auto a = CentralExtensionGroup::odd_dihedral(k).alphabet();
  return {{"x", gen(a, "s") * gen(a, "t", -k)}, {"y", gen(a, "t", k + 1) * gen(a, "s", -1)}};
}

Substitution amalgam_backward(int k) {
  const auto& a = xy_alphabet();
  const Word yx = gen(a, "y") * gen(a, "x");
  return {{"s", gen(a, "x") * yx.pow(k)}, {"t", yx}};
}

namespace {

// Same letters, reindexed into `target` by generator name.
Word relabel(const Word& w, const AlphabetPtr& target) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    const int g = target->index_of(w.alphabet()->name(l.gen));
    if (g < 0) throw PreconditionError("generator '" + w.alphabet()->name(l.gen) + "' is not in the target alphabet");
    out.push_back({g, l.exp});
  }
  return Word(target, out);
}

}  // namespace

Word to_group_word(const CentralExtensionGroup& g, const Word& w) {
  bool vertex = true;
  bool native = true;
  for (const auto& l : w.letters()) {
    const auto& name = w.alphabet()->name(l.gen);
    vertex = vertex && (name == "x" || name == "y");
    native = native && g.alphabet()->index_of(name) >= 0;
  }
  if (native) return relabel(w, g.alphabet());
  if (!vertex) throw PreconditionError("word mixes vertex generators with " + g.name() + " generators");
  const Substitution images = g.family() == CentralExtensionGroup::Family::BaumslagSolitar
                                  ? bs_forward(g.parameter())
                                  : amalgam_forward(g.parameter());
  return substitute(relabel(w, xy_alphabet()), images, g.alphabet());
}

}  // namespace artin::word
