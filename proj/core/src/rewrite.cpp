#include "qbundle/rewrite.hpp"

#include <algorithm>
#include <deque>

#include "qbundle/text.hpp"

namespace qbundle {

NCPoly RewriteRule::relation() const {
  NCPoly r = NCPoly::monomial(rhs.alphabet(), lhs);
  r -= rhs;
  return r;
}

RewriteSystem::RewriteSystem(AlphabetPtr alphabet, int degree_cap)
    : alphabet_(std::move(alphabet)), degree_cap_(degree_cap) {
  if (degree_cap_ < 1) throw std::invalid_argument("degree cap must be positive");
}

RewriteRule RewriteSystem::orient(const NCPoly& relation) {
  if (relation.is_zero()) throw CompletionError("cannot orient the zero relation");
  const Word lead = relation.leading_word();
  if (lead.empty())
    throw CompletionError("non-orientable relation: reduces to the nonzero scalar " + to_text(relation) +
                          " (the ideal is the whole algebra)");
  NCPoly monic = relation * (Scalar(1) / relation.leading_coeff());
  NCPoly rhs = NCPoly::monomial(relation.alphabet(), lead) - monic;
  return {lead, std::move(rhs)};
}

void RewriteSystem::add_rule(RewriteRule rule) {
  if (!rule.rhs.alphabet()->same_as(*alphabet_)) throw AlphabetMismatch("rule over a foreign alphabet");
  if (rule.lhs.empty()) throw TerminationError("rule with empty left-hand side");
  for (const auto& [w, c] : rule.rhs.terms())
    if (!(w < rule.lhs))
      throw TerminationError("termination certificate fails: '" + to_text(w, *alphabet_) + "' is not below lhs '" +
                             to_text(rule.lhs, *alphabet_) + "'");
  if (auto it = by_lhs_.find(rule.lhs); it != by_lhs_.end()) {
    rules_[it->second] = std::move(rule);
  } else {
    rules_.push_back(std::move(rule));
  }
  reindex();
  completed_ = false;
}

void RewriteSystem::reindex() {
  std::sort(rules_.begin(), rules_.end(), [](const RewriteRule& a, const RewriteRule& b) { return a.lhs < b.lhs; });
  by_lhs_.clear();
  lhs_lengths_.clear();
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    by_lhs_.emplace(rules_[i].lhs, i);
    lhs_lengths_.insert(rules_[i].lhs.size());
  }
}

std::vector<RewriteRule> RewriteSystem::take_rules_containing(const Word& w) {
  std::vector<RewriteRule> taken;
  std::vector<RewriteRule> kept;
  for (auto& r : rules_) {
    if (r.lhs.find(w))
      taken.push_back(std::move(r));
    else
      kept.push_back(std::move(r));
  }
  rules_ = std::move(kept);
  reindex();
  completed_ = false;
  return taken;
}

void RewriteSystem::interreduce() {
  for (auto& r : rules_) r.rhs = normal_form(r.rhs);
}

std::optional<RewriteSystem::Match> RewriteSystem::find_match(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (auto len : lhs_lengths_) {
      if (pos + len > w.size()) break;
      if (auto it = by_lhs_.find(w.sub(pos, len)); it != by_lhs_.end()) return Match{it->second, pos};
    }
  }
  return std::nullopt;
}

std::vector<RewriteSystem::Match> RewriteSystem::all_matches(const Word& w) const {
  std::vector<Match> out;
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (auto len : lhs_lengths_) {
      if (pos + len > w.size()) break;
      if (auto it = by_lhs_.find(w.sub(pos, len)); it != by_lhs_.end()) out.push_back({it->second, pos});
    }
  return out;
}

NCPoly RewriteSystem::rewrite_at(const Word& w, const Match& m) const {
  const auto& rule = rules_.at(m.rule);
  const Word prefix = w.sub(0, m.pos);
  const Word suffix = w.sub(m.pos + rule.lhs.size());
  NCPoly out(alphabet_);
  for (const auto& [v, c] : rule.rhs.terms()) out.add_term(prefix + v + suffix, c);
  return out;
}

std::vector<NCPoly> RewriteSystem::single_step_reductions(const NCPoly& f) const {
  std::vector<NCPoly> out;
  for (const auto& [w, c] : f.terms()) {
    for (const auto& m : all_matches(w)) {
      NCPoly g = f;
      g.add_term(w, -c);
      g += c * rewrite_at(w, m);
      out.push_back(std::move(g));
    }
  }
  return out;
}

NCPoly RewriteSystem::normal_form(const NCPoly& f) const {
  if (!f.alphabet()->same_as(*alphabet_)) throw AlphabetMismatch("normal_form: polynomial over a foreign alphabet");
  if (f.degree() > reduction_limit())
    throw DegreeOverflow("normal_form: degree " + std::to_string(f.degree()) + " exceeds the reduction limit " +
                         std::to_string(reduction_limit()));
  NCPoly out(alphabet_);
  std::map<Word, Scalar> pending(f.terms().begin(), f.terms().end());
  while (!pending.empty()) {
    auto last = std::prev(pending.end());
    const Word w = last->first;
    const Scalar c = last->second;
    pending.erase(last);
    if (auto m = find_match(w)) {
      const auto& rule = rules_[m->rule];
      const Word prefix = w.sub(0, m->pos);
      const Word suffix = w.sub(m->pos + rule.lhs.size());
      for (const auto& [v, d] : rule.rhs.terms()) {
        auto [it, inserted] = pending.try_emplace(prefix + v + suffix, c * d);
        if (!inserted) {
          it->second += c * d;
          if (it->second == 0) pending.erase(it);
        }
      }
    } else {
      out.add_term(w, c);
    }
  }
  return out;
}

std::vector<CriticalPair> RewriteSystem::critical_pairs() const {
  std::vector<CriticalPair> out;
  const auto cap = static_cast<std::size_t>(degree_cap_);
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Word& u = rules_[i].lhs;
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      const Word& v = rules_[j].lhs;
      // Overlaps: u = s t, v = t w with s, t, w nonempty.
      for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
        if (u.size() + v.size() - k > cap) continue;
        if (u.sub(u.size() - k) != v.sub(0, k)) continue;
        const Word overlap = u + v.sub(k);
        const NCPoly left = rewrite_at(overlap, Match{i, 0});
        const NCPoly right = rewrite_at(overlap, Match{j, u.size() - k});
        out.push_back({overlap, i, j, false, left - right});
      }
      // Inclusions: v occurs inside u.
      if (i != j && v.size() <= u.size() && u.size() <= cap) {
        for (auto pos = u.find(v); pos; pos = u.find(v, *pos + 1)) {
          const NCPoly left = rewrite_at(u, Match{i, 0});
          const NCPoly right = rewrite_at(u, Match{j, *pos});
          out.push_back({u, i, j, true, left - right});
        }
      }
    }
  }
  return out;
}

NCPoly normal_form(const NCPoly& f, const RewriteSystem& system) { return system.normal_form(f); }
std::vector<CriticalPair> critical_pairs(const RewriteSystem& system) { return system.critical_pairs(); }

RewriteSystem complete(const RewriteSystem& system, int degree_cap) {
  RewriteSystem out(system.alphabet(), degree_cap);
  std::deque<NCPoly> pending;
  for (const auto& r : system.rules()) {
    pending.push_back(r.relation());
    pending.push_back(r.relation().star());
  }

  auto absorb = [&](const NCPoly& relation) {
    NCPoly g = out.normal_form(relation);
    if (g.is_zero()) return;
    RewriteRule rule = RewriteSystem::orient(g);
    for (auto& displaced : out.take_rules_containing(rule.lhs)) pending.push_back(displaced.relation());
    out.add_rule(std::move(rule));
    pending.push_back(g.star());
  };

  for (;;) {
    while (!pending.empty()) {
      NCPoly g = std::move(pending.front());
      pending.pop_front();
      absorb(g);
    }
    out.interreduce();
    for (const auto& cp : out.critical_pairs()) {
      NCPoly d = out.normal_form(cp.difference);
      if (!d.is_zero()) pending.push_back(std::move(d));
    }
    if (pending.empty()) break;
  }
  out.mark_completed(true);
  return out;
}

namespace {

void check_basis_request(const RewriteSystem& system, int degree) {
  if (!system.completed()) throw NotCompleted("basis_words requires a completed rewriting system");
  if (degree > system.degree_cap())
    throw DegreeOverflow("basis requested at degree " + std::to_string(degree) + " beyond the completion cap " +
                         std::to_string(system.degree_cap()));
}

// Irreducible words are closed under taking subwords, so extending an
// irreducible word by one letter only needs a suffix test.
bool has_reducible_suffix(const RewriteSystem& system, const Word& w) {
  for (const auto& r : system.rules())
    if (w.ends_with(r.lhs)) return true;
  return false;
}

}  // namespace

std::vector<Word> basis_words_upto(const RewriteSystem& system, int degree) {
  check_basis_request(system, degree);
  std::vector<Word> out;
  if (degree < 0) return out;
  std::vector<Word> layer{Word{}};
  out.push_back(Word{});
  const auto n = system.alphabet()->size();
  for (int d = 1; d <= degree; ++d) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (std::size_t l = 0; l < n; ++l) {
        Word ext = w + Word::of(static_cast<LetterId>(l));
        if (!has_reducible_suffix(system, ext)) next.push_back(std::move(ext));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> basis_words(const RewriteSystem& system, int degree) {
  auto all = basis_words_upto(system, degree);
  std::vector<Word> out;
  for (auto& w : all)
    if (static_cast<int>(w.size()) == degree) out.push_back(std::move(w));
  return out;
}

}  // namespace qbundle
