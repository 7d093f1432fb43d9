#include "qbundle/ncpoly.hpp"

#include <algorithm>
#include <set>

namespace qbundle {

// ---------------------------------------------------------------- Alphabet

AlphabetPtr Alphabet::create(const std::vector<std::string>& order,
                             const std::vector<std::pair<std::string, std::string>>& star_pairs,
                             const std::map<std::string, int>& grading) {
  if (order.empty()) throw std::invalid_argument("alphabet must contain at least one letter");
  if (order.size() > 120) throw std::invalid_argument("alphabet too large");
  auto out = std::make_shared<Alphabet>();
  std::set<std::string> seen;
  for (const auto& n : order) {
    if (n.empty()) throw std::invalid_argument("empty letter name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate letter '" + n + "'");
    out->names_.push_back(n);
  }
  const auto n = out->names_.size();
  out->star_.resize(n);
  for (std::size_t i = 0; i < n; ++i) out->star_[i] = static_cast<LetterId>(i);
  std::vector<bool> paired(n, false);
  for (const auto& [x, y] : star_pairs) {
    const auto ix = out->find(x);
    const auto iy = out->find(y);
    if (!ix || !iy) throw std::invalid_argument("star pair refers to unknown letter '" + x + "'/'" + y + "'");
    if ((paired[*ix] && out->star_[*ix] != *iy) || (paired[*iy] && out->star_[*iy] != *ix))
      throw std::invalid_argument("letter paired twice in star_pairs: '" + x + "'");
    out->star_[*ix] = *iy;
    out->star_[*iy] = *ix;
    paired[*ix] = paired[*iy] = true;
  }
  out->degree_.assign(n, 0);
  out->graded_ = !grading.empty();
  for (const auto& [name, deg] : grading) {
    const auto id = out->find(name);
    if (!id) throw std::invalid_argument("grading refers to unknown letter '" + name + "'");
    const auto s = out->star_[*id];
    if (s == *id && deg != 0)
      throw std::invalid_argument("self-adjoint letter '" + name + "' must have winding degree 0");
    out->degree_[*id] = deg;
    out->degree_[s] = -deg;
  }
  return out;
}

Letter Alphabet::letter(LetterId id) const {
  const auto& n = names_.at(id);
  const auto s = star_.at(id);
  // The letter declared first in a star pair is the unstarred one.
  if (s < id) return {names_[s], true};
  return {n, false};
}

std::optional<LetterId> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<LetterId>(i);
  return std::nullopt;
}

LetterId Alphabet::id(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::out_of_range("unknown letter '" + std::string(name) + "'");
}

int Alphabet::degree(LetterId id) const {
  if (!graded_) throw std::logic_error("alphabet carries no winding grading");
  return degree_.at(id);
}

std::vector<LetterId> Alphabet::generators() const {
  std::vector<LetterId> out;
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (star_[i] >= i) out.push_back(static_cast<LetterId>(i));
  return out;
}

AlphabetPtr Alphabet::renamed(const std::map<std::string, std::string>& renames) const {
  auto out = std::make_shared<Alphabet>(*this);
  for (auto& n : out->names_)
    if (auto it = renames.find(n); it != renames.end()) n = it->second;
  std::set<std::string> seen(out->names_.begin(), out->names_.end());
  if (seen.size() != out->names_.size()) throw std::invalid_argument("renaming produces duplicate letters");
  return out;
}

bool Alphabet::same_as(const Alphabet& other) const {
  return this == &other ||
         (names_ == other.names_ && star_ == other.star_ && degree_ == other.degree_ && graded_ == other.graded_);
}

// -------------------------------------------------------------------- Word

Word Word::of(std::initializer_list<LetterId> ids) {
  std::string s;
  for (auto id : ids) s.push_back(static_cast<char>(id));
  return Word(std::move(s));
}

std::optional<std::size_t> Word::find(const Word& w, std::size_t from) const {
  const auto pos = ids_.find(w.ids_, from);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

Word Word::adjoint(const Alphabet& alphabet) const {
  std::string out(ids_.rbegin(), ids_.rend());
  for (auto& c : out) c = static_cast<char>(alphabet.star(static_cast<LetterId>(c)));
  return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  const int c = a.ids_.compare(b.ids_);
  return c <=> 0;
}

int winding_degree(const Word& w, const Alphabet& alphabet) {
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += alphabet.degree(w[i]);
  return d;
}

// ------------------------------------------------------------------ NCPoly

NCPoly NCPoly::constant(AlphabetPtr alphabet, const Scalar& c) {
  NCPoly f(std::move(alphabet));
  f.add_term(Word{}, c);
  return f;
}

NCPoly NCPoly::monomial(AlphabetPtr alphabet, Word w, const Scalar& c) {
  NCPoly f(std::move(alphabet));
  f.add_term(w, c);
  return f;
}

NCPoly NCPoly::letter(AlphabetPtr alphabet, std::string_view name) {
  const auto id = alphabet->id(name);
  return monomial(std::move(alphabet), Word::of(id));
}

const Word& NCPoly::leading_word() const {
  if (terms_.empty()) throw std::logic_error("leading word of the zero polynomial");
  return terms_.rbegin()->first;
}

const Scalar& NCPoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

Scalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

NCPoly NCPoly::star() const {
  NCPoly out(alphabet_);
  for (const auto& [w, c] : terms_) out.add_term(w.adjoint(*alphabet_), c);
  return out;
}

NCPoly NCPoly::homogeneous_part(int winding) const {
  NCPoly out(alphabet_);
  for (const auto& [w, c] : terms_)
    if (winding_degree(w, *alphabet_) == winding) out.terms_.emplace(w, c);
  return out;
}

NCPoly NCPoly::rebased(AlphabetPtr alphabet) const {
  if (alphabet->size() != alphabet_->size()) throw AlphabetMismatch("rebase onto an alphabet of different size");
  NCPoly out(std::move(alphabet));
  out.terms_ = terms_;
  return out;
}

void NCPoly::check_alphabet(const NCPoly& other) const {
  if (!alphabet_->same_as(*other.alphabet_))
    throw AlphabetMismatch("polynomials live over different alphabets");
}

NCPoly& NCPoly::operator+=(const NCPoly& g) {
  check_alphabet(g);
  for (const auto& [w, c] : g.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& g) {
  check_alphabet(g);
  for (const auto& [w, c] : g.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPoly operator*(const NCPoly& f, const NCPoly& g) {
  f.check_alphabet(g);
  NCPoly out(f.alphabet_);
  for (const auto& [u, a] : f.terms_)
    for (const auto& [v, b] : g.terms_) out.add_term(u + v, a * b);
  return out;
}

bool operator==(const NCPoly& f, const NCPoly& g) {
  return f.alphabet_->same_as(*g.alphabet_) && f.terms_ == g.terms_;
}

NCPoly add(const NCPoly& f, const NCPoly& g) { return f + g; }
NCPoly mul(const NCPoly& f, const NCPoly& g) { return f * g; }
NCPoly star(const NCPoly& f) { return f.star(); }

}  // namespace qbundle
