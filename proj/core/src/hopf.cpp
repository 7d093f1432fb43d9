#include "qbundle/hopf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "qbundle/linalg.hpp"
#include "qbundle/maps.hpp"
#include "qbundle/text.hpp"

namespace qbundle {

// ----------------------------------------------------------------- Laurent

Laurent Laurent::monomial(int n, const Scalar& c) {
  Laurent h;
  h.add_term(n, c);
  return h;
}

Scalar Laurent::coeff(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Laurent::add_term(int n, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& g) {
  for (const auto& [n, c] : g.terms_) add_term(n, c);
  return *this;
}

Laurent operator-(Laurent f, const Laurent& g) {
  for (const auto& [n, c] : g.terms_) f.add_term(n, -c);
  return f;
}

Laurent operator*(const Laurent& f, const Laurent& g) {
  Laurent out;
  for (const auto& [n, a] : f.terms_)
    for (const auto& [m, b] : g.terms_) out.add_term(n + m, a * b);
  return out;
}

Laurent operator*(const Scalar& c, Laurent f) {
  Laurent out;
  for (const auto& [n, a] : f.terms_) out.add_term(n, c * a);
  return out;
}

Laurent2 coproduct(const Laurent& h) {
  Laurent2 out;
  for (const auto& [n, c] : h.terms()) out[{n, n}] = c;
  return out;
}

Scalar counit(const Laurent& h) {
  Scalar s = 0;
  for (const auto& [n, c] : h.terms()) s += c;
  return s;
}

Laurent antipode(const Laurent& h) {
  Laurent out;
  for (const auto& [n, c] : h.terms()) out.add_term(-n, c);
  return out;
}

Laurent antipode_convolution(const Laurent& h) {
  Laurent out;
  for (const auto& [nm, c] : coproduct(h)) out += antipode(Laurent::monomial(nm.first, c)) * Laurent::monomial(nm.second);
  return out;
}

std::string laurent_text(int n) {
  if (n == 0) return "1";
  std::string s = n > 0 ? "u" : "u*";
  if (std::abs(n) > 1) s += "^" + std::to_string(std::abs(n));
  return s;
}

namespace {

std::string coefficient_prefix(const Scalar& mag) {
  if (mag == 1) return "";
  if (mag.get_den() == 1) return mag.get_str() + " ";
  return "(" + mag.get_str() + ") ";
}

}  // namespace

std::string to_text(const Laurent& h) {
  if (h.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : h.terms()) {
    const bool negative = c < 0;
    const Scalar mag = negative ? Scalar(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    if (n == 0)
      os << (mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")");
    else
      os << coefficient_prefix(mag) << laurent_text(n);
    first = false;
  }
  return os.str();
}

NCPoly to_poly(const Laurent& h, const Presentation& u1) {
  const LetterId u = u1.alphabet()->id("u");
  const LetterId us = u1.alphabet()->star(u);
  NCPoly out(u1.alphabet());
  for (const auto& [n, c] : h.terms()) out.add_term(Word(std::string(std::abs(n), static_cast<char>(n >= 0 ? u : us))), c);
  return out;
}

Laurent from_poly(const NCPoly& f, const Presentation& u1) {
  const LetterId u = u1.alphabet()->id("u");
  Laurent out;
  for (const auto r = u1.nf(f); const auto& [w, c] : r.terms()) {
    int n = 0;
    bool pure = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
      n += w[i] == u ? 1 : -1;
      if (w[i] != w[0]) pure = false;
    }
    if (!pure) throw std::invalid_argument("not a Laurent monomial: " + to_text(w, *u1.alphabet()));
    out.add_term(n, c);
  }
  return out;
}

// ----------------------------------------------------------------- HTensor

HTensor HTensor::pure(const NCPoly& f, int n) {
  HTensor t(f.alphabet());
  t.add(n, f);
  return t;
}

NCPoly HTensor::leg(int n) const {
  auto it = legs_.find(n);
  return it == legs_.end() ? NCPoly(alphabet_) : it->second;
}

void HTensor::add(int n, const NCPoly& f) {
  if (!f.alphabet()->same_as(*alphabet_)) throw AlphabetMismatch("HTensor leg over a foreign alphabet");
  if (f.is_zero()) return;
  auto [it, inserted] = legs_.try_emplace(n, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) legs_.erase(it);
  }
}

int HTensor::degree() const {
  int d = -1;
  for (const auto& [n, f] : legs_) d = std::max(d, f.degree() + std::abs(n));
  return d;
}

HTensor HTensor::reduced(const Presentation& a) const {
  HTensor out(alphabet_);
  for (const auto& [n, f] : legs_) out.add(n, a.nf(f));
  return out;
}

HTensor HTensor::star() const {
  HTensor out(alphabet_);
  for (const auto& [n, f] : legs_) out.add(-n, f.star());
  return out;
}

HTensor& HTensor::operator+=(const HTensor& g) {
  for (const auto& [n, f] : g.legs_) add(n, f);
  return *this;
}

HTensor& HTensor::operator-=(const HTensor& g) {
  for (const auto& [n, f] : g.legs_) add(n, -f);
  return *this;
}

HTensor operator*(const Scalar& c, const HTensor& f) {
  HTensor out(f.alphabet_);
  for (const auto& [n, g] : f.legs_) out.add(n, c * g);
  return out;
}

HTensor operator*(const HTensor& f, const HTensor& g) {
  HTensor out(f.alphabet_);
  for (const auto& [n, a] : f.legs_)
    for (const auto& [m, b] : g.legs_) out.add(n + m, a * b);
  return out;
}

bool operator==(const HTensor& f, const HTensor& g) {
  return f.alphabet_->same_as(*g.alphabet_) && f.legs_ == g.legs_;
}

namespace {

std::string leg_text(const NCPoly& f) {
  const std::string s = to_text(f);
  return f.size() > 1 ? "(" + s + ")" : s;
}

template <class Map, class RightText>
std::string tensor_text(const Map& legs, RightText right) {
  if (legs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, f] : legs) {
    std::string left = leg_text(f);
    const bool negative = left.front() == '-';
    if (!first) os << (negative ? " - " : " + ") << (negative ? left.substr(1) : left);
    else os << left;
    os << " (x) " << right(k);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_text(const HTensor& t) { return tensor_text(t.legs(), [](int n) { return laurent_text(n); }); }

void HTensor2::add(int n, int m, const NCPoly& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = legs_.try_emplace({n, m}, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) legs_.erase(it);
  }
}

HTensor2 HTensor2::reduced(const Presentation& a) const {
  HTensor2 out(alphabet_);
  for (const auto& [k, f] : legs_) out.add(k.first, k.second, a.nf(f));
  return out;
}

bool operator==(const HTensor2& f, const HTensor2& g) {
  return f.alphabet_->same_as(*g.alphabet_) && f.legs_ == g.legs_;
}

std::string to_text(const HTensor2& t) {
  return tensor_text(t.legs(),
                     [](const std::pair<int, int>& k) { return laurent_text(k.first) + " (x) " + laurent_text(k.second); });
}

// ----------------------------------------------------------------- coaction

namespace {

void require_graded(const Presentation& p) {
  if (!p.alphabet()->graded()) throw UngradedError("algebra '" + p.name() + "' carries no winding grading");
}

}  // namespace

HTensor coaction(const NCPoly& f, const Presentation& p) {
  require_graded(p);
  HTensor out(p.alphabet());
  for (const auto r = p.nf(f); const auto& [w, c] : r.terms()) out.add(winding_degree(w, *p.alphabet()), NCPoly::monomial(p.alphabet(), w, c));
  return out;
}

HTensor coaction_by_substitution(const NCPoly& f, const Presentation& p) {
  require_graded(p);
  const auto& alphabet = *p.alphabet();
  HTensor out(p.alphabet());
  for (const auto& [w, c] : f.terms()) {
    HTensor acc = HTensor::pure(p.constant(c), 0);
    for (std::size_t i = 0; i < w.size(); ++i)
      acc = acc * HTensor::pure(NCPoly::monomial(p.alphabet(), Word::of(w[i])), alphabet.degree(w[i]));
    out += acc;
  }
  return out.reduced(p);
}

HTensor2 id_tensor_coproduct(const HTensor& t) {
  HTensor2 out(t.alphabet());
  for (const auto& [n, f] : t.legs()) out.add(n, n, f);
  return out;
}

HTensor2 coaction_tensor_id(const HTensor& t, const Presentation& p) {
  HTensor2 out(t.alphabet());
  for (const auto& [m, f] : t.legs())
    for (const auto co = coaction(f, p); const auto& [n, g] : co.legs()) out.add(n, m, g);
  return out;
}

NCPoly id_tensor_counit(const HTensor& t) {
  NCPoly out(t.alphabet());
  for (const auto& [n, f] : t.legs()) out += f;
  return out;
}

bool is_coinvariant(const NCPoly& f, const Presentation& p) {
  require_graded(p);
  for (const auto r = p.nf(f); const auto& [w, c] : r.terms())
    if (winding_degree(w, *p.alphabet()) != 0) return false;
  return true;
}

// ----------------------------------------------------------- express_in_base

NCPoly express_in_base(const NCPoly& f, int d, const AlgebraParams& params, int degree_cap) {
  // Images of sphere words of degree <= d have degree <= 2d in s3; complete
  // high enough that their normal forms are unique.
  const auto maps = StandardMaps::get(params, std::max({degree_cap, 2 * d, f.degree()}));
  const auto& s3 = *maps->algebras->s3;
  const auto& sphere = *maps->algebras->sphere;
  const NCPoly target = s3.nf(f.rebased(s3.alphabet()));
  if (!is_coinvariant(target, s3)) throw std::invalid_argument("express_in_base: input is not coinvariant");

  const auto words = basis_words_upto(sphere.system(), d);
  Eliminator<Word> elim;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const NCPoly img = maps->iota.apply(words[i]);
    elim.insert(SparseVec<Word>(img.terms().begin(), img.terms().end()), i);
  }
  const auto r = elim.reduce(SparseVec<Word>(target.terms().begin(), target.terms().end()));
  if (!r.residual.empty())
    throw NoSolution("no preimage among sphere words of degree <= " + std::to_string(d) + " for " + to_text(target));
  NCPoly g(sphere.alphabet());
  for (const auto& [i, c] : r.combination) g.add_term(words[i], c);
  return g;
}

}  // namespace qbundle
