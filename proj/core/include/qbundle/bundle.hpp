#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qbundle/hopf.hpp"
#include "qbundle/maps.hpp"
#include "qbundle/presentation.hpp"
#include "qbundle/report.hpp"

namespace qbundle {

/// Double overlap B_ij with the quotient maps pi^i_j : B_i -> B_ij and
/// pi^j_i : B_j -> B_ij (i < j).
struct Overlap {
  std::size_t i = 0;
  std::size_t j = 0;
  PresentationPtr algebra;
  AlgebraMap from_i;
  AlgebraMap from_j;
};

/// Transition function tau_ij : O(U(1)) -> B_ij, fixed by the images of u
/// and u*. For i == j the algebra is B_i itself.
struct Transition {
  std::size_t i = 0;
  std::size_t j = 0;
  PresentationPtr algebra;
  NCPoly u;
  NCPoly u_star;

  /// Normal form of tau_ij(u^n).
  NCPoly at(int n) const;
};

/// Triple overlap B_ijk with pi^{ij}_k, pi^{ik}_j and pi^{kj}_i.
struct TripleOverlap {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  PresentationPtr algebra;
  AlgebraMap from_ij;
  AlgebraMap from_ik;
  AlgebraMap from_kj;
};

struct TransitionData {
  std::vector<Transition> maps;
  std::vector<TripleOverlap> triples;

  /// nullptr when tau_ij is not part of the data.
  const Transition* find(std::size_t i, std::size_t j) const;
};

/// Covering of a base algebra X by chart maps X -> B_i (x) H. Without
/// transition data the charts are plain quotient maps: tuples live in
/// winding 0 and overlaps compare without a twist.
struct Covering {
  std::string name;
  PresentationPtr base;
  std::vector<ChartMap> charts;
  std::vector<Overlap> overlaps;
  std::optional<TransitionData> transitions;
};

/// Element (f_i) of the direct sum of the B_i (x) H.
struct GluedElement {
  std::vector<HTensor> components;
  friend bool operator==(const GluedElement&, const GluedElement&) = default;
};

std::string to_text(const GluedElement& g);

/// Certifies that the intersection of the chart kernels vanishes on the
/// degree <= d filtration: the images of all base basis words of degree
/// <= d are linearly independent. On failure the witness is a nonzero base
/// element mapped to 0 by every chart.
CheckReport check_covering(const Covering& c, int d);

/// Rank of the stacked chart images of the base basis words of degree <= d.
std::size_t covering_rank(const Covering& c, int d);

/// Every compatible tuple of degree <= d (degree of f (x) u^n counted as
/// deg f + |n|) is the image of a base element of degree <= lift_degree
/// (default 2d).
CheckReport check_completeness(const Covering& c, int d, std::optional<int> lift_degree = std::nullopt);

/// tau_ii = 1 eps, tau(u) tau(u*) = 1, centrality, tau_ji o S = tau_ij on
/// u^n for |n| <= max_power, and the triple-overlap cocycle condition.
std::vector<CheckReport> check_cocycle(const TransitionData& t, int max_power = 3);

/// The glued algebra {(f_i) | (pi^i_j (x) id) f_i = phi_ij (pi^j_i (x) id) f_j}
/// with phi_ij(b (x) u^n) = b tau_ji(u^n) (x) u^n.
class GluedAlgebra {
 public:
  /// `base_maps` are the quotient maps B -> B_i of the base algebra (used by iota).
  GluedAlgebra(Covering covering, std::vector<AlgebraMap> base_maps);

  const Covering& covering() const { return covering_; }

  /// One defect per overlap; all zero iff the tuple is compatible.
  std::vector<HTensor> defects(const GluedElement& f) const;
  bool is_compatible(const GluedElement& f) const;

  GluedElement zero() const;
  GluedElement add(const GluedElement& f, const GluedElement& g) const;
  GluedElement scale(const Scalar& c, const GluedElement& f) const;
  GluedElement mul(const GluedElement& f, const GluedElement& g) const;
  GluedElement star(const GluedElement& f) const;
  /// Delta_R((f_i)) = ((id (x) Delta) f_i).
  std::vector<HTensor2> coaction(const GluedElement& f) const;
  /// iota(b) = (pi_i(b) (x) 1).
  GluedElement iota(const NCPoly& b) const;
  /// Image of a base element under the chart maps.
  GluedElement embed(const NCPoly& f) const;

 private:
  Covering covering_;
  std::vector<AlgebraMap> base_maps_;
};

/// The glued bundle: the sphere covered by the two discs and the total space
/// covered by the two trivializations, glued over the circle with
/// tau_12(u) = u, tau_21(u) = u*.
struct StandardBundle {
  std::shared_ptr<const StandardMaps> maps;
  TransitionData transitions;
  Covering sphere_covering;
  Covering total_covering;
  GluedAlgebra glued;

  static std::shared_ptr<const StandardBundle> get(const AlgebraParams& params = AlgebraParams::defaults(),
                                                   int degree_cap = kDefaultDegreeCap);
};

/// (chi_p(f), chi_q(f)).
GluedElement pair_embedding(const NCPoly& f, const StandardBundle& bundle);
/// Exact dimension of the span of pair_embedding over the s3 basis words of
/// degree <= d.
std::size_t rank_of_image(int d, const StandardBundle& bundle);

/// (a) chi o iota = pi (x) 1 on f_0, f_1, f_1*; (b) right colinearity on
/// every generator; the defining relations of the total space map to 0.
std::vector<CheckReport> check_trivialization(const ChartMap& chi, const AlgebraMap& pi, const StandardMaps& maps);

/// Everything the `verify bundle` suite runs at degree d.
std::vector<CheckReport> verify_bundle(int d, const AlgebraParams& params = AlgebraParams::defaults(),
                                       int degree_cap = kDefaultDegreeCap);

}  // namespace qbundle
