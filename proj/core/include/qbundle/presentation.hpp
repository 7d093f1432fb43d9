#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qbundle/ncpoly.hpp"
#include "qbundle/rewrite.hpp"
#include "qbundle/text.hpp"

namespace qbundle {

struct NamedRelation {
  std::string name;
  NCPoly poly;
};

/// A presented *-algebra: alphabet, defining relations and the completed
/// rewriting system that realises the quotient.
class Presentation {
 public:
  Presentation(std::string name, AlgebraParams params, AlphabetPtr alphabet, std::vector<NamedRelation> relations,
               RewriteSystem system);

  const std::string& name() const { return name_; }
  const AlgebraParams& params() const { return params_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<NamedRelation>& relations() const { return relations_; }
  const RewriteSystem& system() const { return system_; }
  int degree_cap() const { return system_.degree_cap(); }

  NCPoly nf(const NCPoly& f) const { return system_.normal_form(f); }
  /// Parses with p and q bound to this presentation's parameters. No reduction.
  NCPoly parse(std::string_view text) const;
  NCPoly letter(std::string_view name) const { return NCPoly::letter(alphabet_, name); }
  NCPoly one() const { return NCPoly::constant(alphabet_, 1); }
  NCPoly zero() const { return NCPoly(alphabet_); }
  NCPoly constant(const Scalar& c) const { return NCPoly::constant(alphabet_, c); }
  SymbolTable symbols() const;

  /// Same algebra with letters renamed.
  std::shared_ptr<const Presentation> renamed(const std::string& name,
                                              const std::map<std::string, std::string>& renames) const;

 private:
  std::string name_;
  AlgebraParams params_;
  AlphabetPtr alphabet_;
  std::vector<NamedRelation> relations_;
  RewriteSystem system_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Builds a presentation from its JSON document
///   {"letters", "star_pairs", "order", "grading"?, "rules": [{"lhs","rhs","name"?}], "params"}
/// A rule may instead carry {"relation": "..."}, oriented by its leading word.
/// and completes it at `degree_cap`. `params` overrides the document's
/// parameters; `symbols` rebinds expression symbols (e.g. q := p).
PresentationPtr load_presentation(const nlohmann::json& doc, const std::optional<AlgebraParams>& params = std::nullopt,
                                  int degree_cap = kDefaultDegreeCap, const SymbolTable& symbol_overrides = {});
PresentationPtr load_presentation_file(const std::filesystem::path& path,
                                       const std::optional<AlgebraParams>& params = std::nullopt,
                                       int degree_cap = kDefaultDegreeCap);

/// Bundled documents: disc, circle, sphere, s3, hopf-u1.
std::vector<std::string> builtin_presentation_names();
const nlohmann::json& builtin_document(std::string_view name);

/// Completed builtin presentation; memoised per (name, p, q, cap). Besides
/// the bundled names this accepts "disc-p" (the disc relation at parameter p).
PresentationPtr builtin_presentation(std::string_view name, const AlgebraParams& params = AlgebraParams::defaults(),
                                     int degree_cap = kDefaultDegreeCap);

/// The algebras of the U(1)-bundle over the glued quantum sphere:
/// the two discs D_p (letter x) and D_q (letter y), the circle, the sphere
/// and the total space.
struct BundleAlgebras {
  AlgebraParams params;
  int degree_cap = kDefaultDegreeCap;
  PresentationPtr disc_p;
  PresentationPtr disc_q;
  PresentationPtr circle;
  PresentationPtr sphere;
  PresentationPtr s3;

  /// Memoised per parameter set.
  static std::shared_ptr<const BundleAlgebras> get(const AlgebraParams& params = AlgebraParams::defaults(),
                                                   int degree_cap = kDefaultDegreeCap);
};

}  // namespace qbundle
