#pragma once

#include <map>
#include <string>
#include <utility>

#include "qbundle/ncpoly.hpp"
#include "qbundle/presentation.hpp"

namespace qbundle {

/// Element sum_n c_n u^n of O(U(1)); u^-1 is u*.
class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(int n, const Scalar& c = 1);

  const std::map<int, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(int n) const;
  void add_term(int n, const Scalar& c);

  Laurent& operator+=(const Laurent& g);
  friend Laurent operator+(Laurent f, const Laurent& g) { return f += g; }
  friend Laurent operator-(Laurent f, const Laurent& g);
  friend Laurent operator*(const Laurent& f, const Laurent& g);
  friend Laurent operator*(const Scalar& c, Laurent f);
  friend bool operator==(const Laurent& f, const Laurent& g) = default;

 private:
  std::map<int, Scalar> terms_;
};

/// Element of H (x) H, keyed by the pair of exponents.
using Laurent2 = std::map<std::pair<int, int>, Scalar>;

Laurent2 coproduct(const Laurent& h);
Scalar counit(const Laurent& h);
Laurent antipode(const Laurent& h);
/// m o (S (x) id) o Delta.
Laurent antipode_convolution(const Laurent& h);

/// "u^3", "u*", "1"; sums ascend in the exponent, e.g. "-u* + 2 u".
std::string laurent_text(int n);
std::string to_text(const Laurent& h);

/// The same element inside the presented algebra hopf-u1 (or circle).
NCPoly to_poly(const Laurent& h, const Presentation& u1);
/// Inverse of to_poly on normal forms; throws std::invalid_argument when a
/// word is not a pure power of u or u*.
Laurent from_poly(const NCPoly& f, const Presentation& u1);

/// Element of A (x) O(U(1)) collected by Laurent degree: sum_n f_n (x) u^n.
class HTensor {
 public:
  explicit HTensor(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  static HTensor pure(const NCPoly& f, int n);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::map<int, NCPoly>& legs() const { return legs_; }
  bool is_zero() const { return legs_.empty(); }
  NCPoly leg(int n) const;
  void add(int n, const NCPoly& f);

  /// max over summands of (left degree + |n|), -1 when zero.
  int degree() const;

  HTensor reduced(const Presentation& a) const;
  /// (f (x) u^n)* = f* (x) u^-n.
  HTensor star() const;

  HTensor& operator+=(const HTensor& g);
  HTensor& operator-=(const HTensor& g);
  friend HTensor operator+(HTensor f, const HTensor& g) { return f += g; }
  friend HTensor operator-(HTensor f, const HTensor& g) { return f -= g; }
  friend HTensor operator*(const Scalar& c, const HTensor& f);
  /// Componentwise product in A (x) H, unreduced.
  friend HTensor operator*(const HTensor& f, const HTensor& g);
  friend bool operator==(const HTensor& f, const HTensor& g);

 private:
  AlphabetPtr alphabet_;
  std::map<int, NCPoly> legs_;
};

/// "a (x) u + (1/4) b (x) u*".
std::string to_text(const HTensor& t);

/// Element of A (x) H (x) H keyed by the two exponents.
class HTensor2 {
 public:
  explicit HTensor2(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  const std::map<std::pair<int, int>, NCPoly>& legs() const { return legs_; }
  void add(int n, int m, const NCPoly& f);
  HTensor2 reduced(const Presentation& a) const;
  friend bool operator==(const HTensor2& f, const HTensor2& g);

 private:
  AlphabetPtr alphabet_;
  std::map<std::pair<int, int>, NCPoly> legs_;
};

std::string to_text(const HTensor2& t);

class UngradedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Delta_R(f) = sum_n nf(f)_n (x) u^n, read off the winding grading.
HTensor coaction(const NCPoly& f, const Presentation& p);
/// Delta_R computed as the algebra map l -> l (x) u^deg(l) on every letter.
HTensor coaction_by_substitution(const NCPoly& f, const Presentation& p);
/// (id (x) Delta) applied to an element of A (x) H.
HTensor2 id_tensor_coproduct(const HTensor& t);
/// (Delta_R (x) id) applied to an element of A (x) H.
HTensor2 coaction_tensor_id(const HTensor& t, const Presentation& p);
/// (id (x) counit) applied to an element of A (x) H.
NCPoly id_tensor_counit(const HTensor& t);

/// Every word of nf(f) has winding degree 0.
bool is_coinvariant(const NCPoly& f, const Presentation& p);

class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes a coinvariant element of the total space through the base
/// generators: returns g over {f_0, f_1, f_1*} with nf(iota(g)) = nf(f),
/// searching sphere words of degree <= d. Throws NoSolution when f is not in
/// the image of that filtration and std::invalid_argument when f is not
/// coinvariant.
NCPoly express_in_base(const NCPoly& f, int d = 6, const AlgebraParams& params = AlgebraParams::defaults(),
                       int degree_cap = kDefaultDegreeCap);

}  // namespace qbundle
