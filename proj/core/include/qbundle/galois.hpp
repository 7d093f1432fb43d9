#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qbundle/hopf.hpp"
#include "qbundle/maps.hpp"
#include "qbundle/presentation.hpp"
#include "qbundle/report.hpp"

namespace qbundle {

/// Unbalanced element sum_i alpha_i (x) beta_i of P (x) P.
using LegPairs = std::vector<std::pair<NCPoly, NCPoly>>;

std::string to_text(const LegPairs& t);

/// Element of P (x)_B P in its swept form: every normal word of a left leg
/// has its longest coinvariant suffix moved into the right leg. The rule is
/// deterministic; it does not identify every pair of balanced-equal tensors.
class BalancedTensor {
 public:
  static BalancedTensor from_legs(const LegPairs& t, const Presentation& p);

  /// Left normal word -> right leg (normal form).
  const std::map<Word, NCPoly>& legs() const { return legs_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  friend bool operator==(const BalancedTensor& a, const BalancedTensor& b);

 private:
  explicit BalancedTensor(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  AlphabetPtr alphabet_;
  std::map<Word, NCPoly> legs_;
};

std::string to_text(const BalancedTensor& t);

/// can(p (x) p') = p p'_(0) (x) p'_(1), i.e. sum_n nf(p p'_n) (x) u^n.
HTensor canonical_map(const LegPairs& t, const Presentation& p);
HTensor canonical_map(const BalancedTensor& t, const Presentation& p);

/// Outcome of the exact search for l(u).
struct LiftDerivation {
  /// l(u) grouped by right generator, legs in normal form.
  LegPairs legs;
  /// Candidates g* w (x) g considered before the system became solvable.
  std::vector<std::string> ansatz;
  /// The solution is the only one supported on that ansatz.
  bool unique = false;
};

/// Solves m(l(u)) = 1 over the ansatz sum c_{g,w} g* w (x) g, where g runs
/// over the letters of winding +1 and w over coinvariant normal words
/// ordered by degree then monomial order; candidates are added one at a
/// time and the first solvable prefix wins.
LiftDerivation derive_lift(const Presentation& s3, int max_word_degree = 4);

/// The strong connection l on the basis u^n of O(U(1)):
///   l(1) = 1 (x) 1, l(u) from derive_lift, l(u^-1) obtained by transporting
///   the lift of the flipped algebra along a <-> b, and the sandwich
///   recursion l(u^{n+1}) = sum_i alpha_i l(u^n) beta_i (similarly for n < 0).
/// Normal forms are taken in the total space completed at
/// max(degree_cap, degree of the element), so they are unique.
class StrongConnection {
 public:
  explicit StrongConnection(const AlgebraParams& params = AlgebraParams::defaults(),
                            int degree_cap = kDefaultDegreeCap);

  const AlgebraParams& params() const { return params_; }
  /// Raw legs (alpha_i, beta_i), 2^|n| of them; memoised.
  const LegPairs& legs(int n);
  BalancedTensor balanced(int n);
  /// nf(sum_i alpha_i beta_i).
  NCPoly contraction(int n);
  const LiftDerivation& derivation(int sign);
  /// Images of the flipped algebra's relations under a <-> b (all must vanish).
  std::vector<std::pair<std::string, NCPoly>> flip_relation_images();

  /// Total space completed high enough for elements of degree `degree`.
  PresentationPtr s3_for(int degree) const;
  NCPoly reduce(const NCPoly& f) const;

 private:
  void ensure_base();

  AlgebraParams params_;
  int degree_cap_;
  std::mutex mutex_;
  std::map<int, LegPairs> table_;
  std::map<int, LiftDerivation> derivations_;
  std::vector<std::pair<std::string, NCPoly>> flip_images_;
};

/// Matrix E_ij = nf(beta_i alpha_j) built from l(u^n).
struct ProjectorMatrix {
  int n = 0;
  std::vector<std::vector<NCPoly>> entries;
  std::size_t size() const { return entries.size(); }
};

ProjectorMatrix projector(int n, StrongConnection& l);
/// Normal forms of the entries of E^2.
std::vector<std::vector<NCPoly>> projector_square(const ProjectorMatrix& e, const StrongConnection& l);
NCPoly matrix_trace(const ProjectorMatrix& e, const StrongConnection& l);
/// {"n":1,"size":2,"entries":[["a a*", ...], ...]}.
nlohmann::json to_json(const ProjectorMatrix& e);

/// Galois suite: derivation of l(u^{+-1}), can(l(u^n)) = 1 (x) u^n for
/// |n| <= max_winding, m(l(u^n)) = 1 and leg homogeneity for
/// |n| <= contraction_winding, E(n)^2 = E(n) with coinvariant entries for
/// |n| <= max_winding.
std::vector<CheckReport> verify_galois(int max_winding = 3, int contraction_winding = 5,
                                       const AlgebraParams& params = AlgebraParams::defaults(),
                                       int degree_cap = kDefaultDegreeCap);

}  // namespace qbundle
