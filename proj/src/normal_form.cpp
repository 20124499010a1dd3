#include "artin/normal_form.hpp"

#include <sstream>

#include "artin/error.hpp"

namespace artin::word {

namespace {

Exponent floor_div(Exponent a, Exponent b) {
  Exponent q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Appends g^e to the normal form in place, carrying multiples of the
// finite order into the centre.
void push(const CentralExtensionGroup& g, NormalForm& x, int gen, Exponent e) {
  if (e == 0) return;
  const Exponent order = g.order(gen);
  auto& r = x.residual;
  if (!r.empty() && r.back().gen == gen) {
    e += r.back().exp;
    r.pop_back();
  }
  if (order != 0) {
    x.central += floor_div(e, order);
    e -= floor_div(e, order) * order;
  }
  // Dropping a syllable leaves an alternating word behind; no cascade.
  if (e != 0) r.push_back({gen, e});
}

}  // namespace

CentralExtensionGroup::CentralExtensionGroup(Family f, int parameter, std::vector<std::string> names, Exponent o0,
                                             Exponent o1)
    : family_(f), parameter_(parameter), alphabet_(make_alphabet(std::move(names))), orders_{o0, o1} {}

CentralExtensionGroup CentralExtensionGroup::baumslag_solitar(int n) {
  if (n < 1) throw PreconditionError("BS(n,n) needs n >= 1");
  return {Family::BaumslagSolitar, n, {"a", "t"}, n, 0};
}

CentralExtensionGroup CentralExtensionGroup::odd_dihedral(int k) {
  if (k < 1) throw PreconditionError("G_k needs k >= 1");
  return {Family::OddDihedral, k, {"s", "t"}, 2, 2 * static_cast<Exponent>(k) + 1};
}

Word CentralExtensionGroup::central_word() const { return Word::generator(alphabet_, alphabet_->name(0), orders_[0]); }

Word CentralExtensionGroup::relator() const {
  const Word g0 = Word::generator(alphabet_, alphabet_->name(0));
  const Word g1 = Word::generator(alphabet_, alphabet_->name(1));
  if (family_ == Family::BaumslagSolitar) {
    const Word an = g0.pow(parameter_);
    return g1 * an * g1.inverse() * an.inverse();
  }
  return g0.pow(2) * g1.pow(-orders_[1]);
}

std::string CentralExtensionGroup::name() const {
  if (family_ == Family::BaumslagSolitar) {
    return "BS(" + std::to_string(parameter_) + "," + std::to_string(parameter_) + ")";
  }
  return "G_" + std::to_string(parameter_);
}

NormalForm normal_form(const CentralExtensionGroup& g, const Word& w) {
  NormalForm x;
  for (const auto& l : w.letters()) {
    const int gen = g.alphabet()->index_of(w.alphabet()->name(l.gen));
    if (gen < 0) {
      throw PreconditionError("generator '" + w.alphabet()->name(l.gen) + "' is not in " + g.name());
    }
    push(g, x, gen, l.exp);
  }
  return x;
}

NormalForm multiply(const CentralExtensionGroup& g, const NormalForm& lhs, const NormalForm& rhs) {
  NormalForm out = lhs;
  out.central += rhs.central;
  for (const auto& s : rhs.residual) push(g, out, s.gen, s.exp);
  return out;
}

NormalForm inverse(const CentralExtensionGroup& g, const NormalForm& x) {
  NormalForm out;
  out.central = -x.central;
  for (auto it = x.residual.rbegin(); it != x.residual.rend(); ++it) push(g, out, it->gen, -it->exp);
  return out;
}

Word to_word(const CentralExtensionGroup& g, const NormalForm& x) {
  std::vector<Letter> raw;
  raw.push_back({0, x.central * g.order(0)});
  for (const auto& s : x.residual) raw.push_back({s.gen, s.exp});
  return Word(g.alphabet(), raw);
}

std::string to_string(const CentralExtensionGroup& g, const NormalForm& x) {
  if (x.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  if (x.central != 0) {
    os << "z";
    if (x.central != 1) os << '^' << x.central;
    first = false;
  }
  for (const auto& s : x.residual) {
    os << (first ? "" : " ") << g.alphabet()->name(s.gen);
    if (s.exp != 1) os << '^' << s.exp;
    first = false;
  }
  return os.str();
}

NormalForm bs_normal_form(const Word& w, int n) {
  return normal_form(CentralExtensionGroup::baumslag_solitar(n), w);
}

NormalForm dihedral_normal_form(const Word& w, int k) {
  return normal_form(CentralExtensionGroup::odd_dihedral(k), w);
}

std::vector<Syllable> cyclic_residual(const CentralExtensionGroup& g, const NormalForm& x) {
  std::vector<Syllable> r = x.residual;
  while (r.size() >= 2 && r.front().gen == r.back().gen) {
    // Conjugating by the last syllable folds it into the first.
    NormalForm head;
    push(g, head, r.front().gen, r.front().exp);
    push(g, head, r.back().gen, r.back().exp);
    r.pop_back();
    if (head.residual.empty()) {
      r.erase(r.begin());
    } else {
      r.front() = head.residual.front();
    }
  }
  return r;
}

bool is_elliptic(const CentralExtensionGroup& g, const NormalForm& x) {
  const auto r = cyclic_residual(g, x);
  if (r.empty()) return true;
  if (r.size() > 1) return false;
  if (g.family() == CentralExtensionGroup::Family::BaumslagSolitar) return r.front().gen == 0;
  return true;
}

}  // namespace artin::word
