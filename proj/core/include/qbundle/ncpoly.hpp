#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbundle/scalar.hpp"

namespace qbundle {

/// Index of a letter in its alphabet. Ids follow the declared letter order,
/// so comparing ids compares letters.
using LetterId = std::uint8_t;

struct Letter {
  std::string name;
  bool starred = false;
};

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Finite involutive alphabet with a declared total order and an optional
/// integer grading (the winding degree of the U(1) coaction).
class Alphabet {
 public:
  /// `order` lists every display name ("a", "a*", "f_0", ...). Each pair in
  /// `star_pairs` names a letter and its adjoint; letters not mentioned in any
  /// pair are self-adjoint. `grading` assigns degrees to unstarred names;
  /// starred letters get the negated degree.
  static AlphabetPtr create(const std::vector<std::string>& order,
                            const std::vector<std::pair<std::string, std::string>>& star_pairs,
                            const std::map<std::string, int>& grading = {});

  std::size_t size() const { return names_.size(); }
  const std::string& name(LetterId id) const { return names_.at(id); }
  Letter letter(LetterId id) const;
  LetterId star(LetterId id) const { return star_.at(id); }
  bool self_adjoint(LetterId id) const { return star_.at(id) == id; }

  std::optional<LetterId> find(std::string_view name) const;
  /// Throws std::out_of_range when the name is unknown.
  LetterId id(std::string_view name) const;

  bool graded() const { return graded_; }
  /// Winding degree; throws std::logic_error on an ungraded alphabet.
  int degree(LetterId id) const;

  /// Letters that are not the adjoint of an earlier letter, in order.
  std::vector<LetterId> generators() const;

  /// New alphabet with letters renamed; ids, order and grading are kept.
  AlphabetPtr renamed(const std::map<std::string, std::string>& renames) const;

  bool same_as(const Alphabet& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<LetterId> star_;
  std::vector<int> degree_;
  bool graded_ = false;
};

/// Finite sequence of letters; the empty word is the unit monomial.
/// Ordered degree-first, then lexicographically by letter id.
class Word {
 public:
  Word() = default;
  explicit Word(std::string ids) : ids_(std::move(ids)) {}
  static Word of(LetterId id) { return Word(std::string(1, static_cast<char>(id))); }
  static Word of(std::initializer_list<LetterId> ids);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  LetterId operator[](std::size_t i) const { return static_cast<LetterId>(ids_[i]); }
  const std::string& ids() const { return ids_; }

  Word sub(std::size_t pos, std::size_t len = std::string::npos) const { return Word(ids_.substr(pos, len)); }
  bool starts_with(const Word& w) const { return ids_.starts_with(w.ids_); }
  bool ends_with(const Word& w) const { return ids_.ends_with(w.ids_); }
  std::optional<std::size_t> find(const Word& w, std::size_t from = 0) const;

  /// Reverse and star every letter.
  Word adjoint(const Alphabet& alphabet) const;

  friend Word operator+(const Word& a, const Word& b) { return Word(a.ids_ + b.ids_); }
  friend bool operator==(const Word& a, const Word& b) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::string ids_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return std::hash<std::string>{}(w.ids()); }
};

/// Sum of winding degrees of the letters.
int winding_degree(const Word& w, const Alphabet& alphabet);

class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of the free *-algebra: a finite map Word -> Scalar with no stored
/// zero coefficients. Terms are kept in ascending monomial order.
class NCPoly {
 public:
  using Terms = std::map<Word, Scalar>;

  explicit NCPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  static NCPoly constant(AlphabetPtr alphabet, const Scalar& c);
  static NCPoly monomial(AlphabetPtr alphabet, Word w, const Scalar& c = 1);
  static NCPoly letter(AlphabetPtr alphabet, std::string_view name);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }
  /// Largest word and its coefficient; the polynomial must be nonzero.
  const Word& leading_word() const;
  const Scalar& leading_coeff() const;
  Scalar coeff(const Word& w) const;

  /// Adds c*w, dropping the entry if the coefficient cancels.
  void add_term(const Word& w, const Scalar& c);

  NCPoly star() const;
  /// Homogeneous component of the given winding degree.
  NCPoly homogeneous_part(int winding) const;
  /// Same coefficients over another alphabet with identical letter ids.
  NCPoly rebased(AlphabetPtr alphabet) const;

  NCPoly& operator+=(const NCPoly& g);
  NCPoly& operator-=(const NCPoly& g);
  NCPoly& operator*=(const Scalar& c);

  friend NCPoly operator+(NCPoly f, const NCPoly& g) { return f += g; }
  friend NCPoly operator-(NCPoly f, const NCPoly& g) { return f -= g; }
  friend NCPoly operator-(NCPoly f) { return f *= Scalar(-1); }
  friend NCPoly operator*(NCPoly f, const Scalar& c) { return f *= c; }
  friend NCPoly operator*(const Scalar& c, NCPoly f) { return f *= c; }
  friend NCPoly operator*(const NCPoly& f, const NCPoly& g);
  friend bool operator==(const NCPoly& f, const NCPoly& g);

 private:
  void check_alphabet(const NCPoly& other) const;

  AlphabetPtr alphabet_;
  Terms terms_;
};

NCPoly add(const NCPoly& f, const NCPoly& g);
/// Free-algebra product: bilinear concatenation, no reduction.
NCPoly mul(const NCPoly& f, const NCPoly& g);
NCPoly star(const NCPoly& f);

}  // namespace qbundle
