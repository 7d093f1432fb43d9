#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qbundle/ncpoly.hpp"

namespace qbundle {

inline constexpr int kDefaultDegreeCap = 8;

/// Oriented relation lhs -> rhs; every word of rhs is strictly smaller than
/// lhs in the degree-lex order.
struct RewriteRule {
  Word lhs;
  NCPoly rhs;

  /// lhs - rhs, the relation this rule encodes.
  NCPoly relation() const;
};

/// Overlap or inclusion ambiguity between two rule left-hand sides.
struct CriticalPair {
  Word overlap;
  std::size_t first = 0;
  std::size_t second = 0;
  bool inclusion = false;
  /// Difference of the two one-step reductions of `overlap`.
  NCPoly difference;
};

class TerminationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CompletionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotCompleted : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Rewriting system over a fixed alphabet with degree cap D. Normal forms are
/// unique for inputs of degree <= D once the system has been completed at D.
/// Reduction itself is sound at any degree (every rule is a consequence of
/// the defining relations) and is refused beyond 2D.
class RewriteSystem {
 public:
  struct Match {
    std::size_t rule = 0;
    std::size_t pos = 0;
  };

  explicit RewriteSystem(AlphabetPtr alphabet, int degree_cap = kDefaultDegreeCap);

  /// Orients a nonzero relation by its leading word (made monic). Throws
  /// CompletionError when the relation is a nonzero scalar.
  static RewriteRule orient(const NCPoly& relation);

  /// Inserts a rule after checking its termination certificate. Replaces an
  /// existing rule with the same lhs.
  void add_rule(RewriteRule rule);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool completed() const { return completed_; }
  int degree_cap() const { return degree_cap_; }
  int reduction_limit() const { return 2 * degree_cap_; }

  std::optional<Match> find_match(const Word& w) const;
  std::vector<Match> all_matches(const Word& w) const;
  bool is_irreducible(const Word& w) const { return !find_match(w); }

  /// Rewrites the occurrence described by `m` once.
  NCPoly rewrite_at(const Word& w, const Match& m) const;

  /// All results of rewriting a single occurrence in a single term of f.
  std::vector<NCPoly> single_step_reductions(const NCPoly& f) const;

  NCPoly normal_form(const NCPoly& f) const;

  /// All overlap and inclusion ambiguities whose word has degree <= D.
  std::vector<CriticalPair> critical_pairs() const;

  /// Removes and returns every rule whose lhs contains `w` as a subword.
  std::vector<RewriteRule> take_rules_containing(const Word& w);
  /// Brings every rhs to normal form with respect to the current rules.
  void interreduce();
  void mark_completed(bool v) { completed_ = v; }

 private:
  void reindex();

  AlphabetPtr alphabet_;
  int degree_cap_;
  bool completed_ = false;
  std::vector<RewriteRule> rules_;
  std::unordered_map<Word, std::size_t, WordHash> by_lhs_;
  std::set<std::size_t> lhs_lengths_;
};

NCPoly normal_form(const NCPoly& f, const RewriteSystem& system);
std::vector<CriticalPair> critical_pairs(const RewriteSystem& system);

/// Critical-pair completion up to degree cap D. The relation set is closed
/// under the involution while completing, so the resulting ideal is a
/// *-ideal. Completing a completed system returns it unchanged.
RewriteSystem complete(const RewriteSystem& system, int degree_cap = kDefaultDegreeCap);

/// Irreducible words of exactly degree d in monomial order. Throws
/// NotCompleted on an uncompleted system and DegreeOverflow when d exceeds
/// the cap.
std::vector<Word> basis_words(const RewriteSystem& system, int degree);
/// Irreducible words of degree <= d.
std::vector<Word> basis_words_upto(const RewriteSystem& system, int degree);

}  // namespace qbundle
