#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qbundle/hopf.hpp"
#include "qbundle/presentation.hpp"

namespace qbundle {

/// *-homomorphism between presented algebras, fixed by the images of the
/// letters. Images of letters that are not given are obtained from their
/// adjoint's image by star; self-adjoint letters must be given.
class AlgebraMap {
 public:
  AlgebraMap(std::string name, PresentationPtr source, PresentationPtr target,
             const std::map<std::string, NCPoly>& images);
  /// Images as polynomial text over the target (p and q bound).
  static AlgebraMap from_text(std::string name, PresentationPtr source, PresentationPtr target,
                              const std::map<std::string, std::string>& images);

  const std::string& name() const { return name_; }
  const PresentationPtr& source() const { return source_; }
  const PresentationPtr& target() const { return target_; }
  const NCPoly& image(LetterId id) const { return images_.at(id); }

  /// Normal form in the target of the image of f.
  NCPoly apply(const NCPoly& f) const;
  NCPoly apply(const Word& w) const;

  /// Images of the source's defining relations, by relation name.
  std::vector<std::pair<std::string, NCPoly>> relation_images() const;

 private:
  std::string name_;
  PresentationPtr source_;
  PresentationPtr target_;
  std::vector<NCPoly> images_;
};

/// Algebra map into A (x) O(U(1)), fixed by letter images; used for the
/// trivializations and for quotient maps tensored with 1.
class ChartMap {
 public:
  ChartMap(std::string name, PresentationPtr source, PresentationPtr target,
           const std::map<std::string, HTensor>& images);
  /// Images as tensor text "x (x) u*" (right legs over u, u*).
  static ChartMap from_text(std::string name, PresentationPtr source, PresentationPtr target,
                            const std::map<std::string, std::string>& images);
  /// b -> pi(b) (x) 1.
  static ChartMap from_algebra_map(const AlgebraMap& pi);

  const std::string& name() const { return name_; }
  const PresentationPtr& source() const { return source_; }
  const PresentationPtr& target() const { return target_; }
  const HTensor& image(LetterId id) const { return images_.at(id); }

  HTensor apply(const NCPoly& f) const;
  HTensor apply(const Word& w) const;
  std::vector<std::pair<std::string, HTensor>> relation_images() const;

 private:
  std::string name_;
  PresentationPtr source_;
  PresentationPtr target_;
  std::vector<HTensor> images_;
};

/// The concrete maps of the glued bundle:
///   iota : sphere -> s3,         f_0 -> b b*, f_1 -> b a
///   pi_p : sphere -> D_p,        f_0 -> x x*, f_1 -> x
///   pi_q : sphere -> D_q,        f_0 -> 1,    f_1 -> y
///   boundary_p/q : D -> circle,  x -> u, y -> u
///   chi_p : s3 -> D_p (x) H,     a -> 1 (x) u, b -> x (x) u*
///   chi_q : s3 -> D_q (x) H,     a -> y (x) u, b -> 1 (x) u*
struct StandardMaps {
  std::shared_ptr<const BundleAlgebras> algebras;
  PresentationPtr u1;
  AlgebraMap iota;
  AlgebraMap pi_p;
  AlgebraMap pi_q;
  AlgebraMap boundary_p;
  AlgebraMap boundary_q;
  ChartMap chi_p;
  ChartMap chi_q;

  /// Memoised per parameter set and cap.
  static std::shared_ptr<const StandardMaps> get(const AlgebraParams& params = AlgebraParams::defaults(),
                                                 int degree_cap = kDefaultDegreeCap);
};

}  // namespace qbundle
