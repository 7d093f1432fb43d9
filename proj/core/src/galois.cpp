#include "qbundle/galois.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "qbundle/linalg.hpp"
#include "qbundle/text.hpp"

namespace qbundle {

namespace {

std::string leg_text(const NCPoly& f) {
  const std::string s = to_text(f);
  return f.size() > 1 ? "(" + s + ")" : s;
}

}  // namespace

std::string to_text(const LegPairs& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, r] : t) {
    if (l.is_zero() || r.is_zero()) continue;
    os << (first ? "" : " + ") << leg_text(l) << " (x) " << leg_text(r);
    first = false;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------- BalancedTensor

BalancedTensor BalancedTensor::from_legs(const LegPairs& t, const Presentation& p) {
  const auto& alphabet = *p.alphabet();
  BalancedTensor out(p.alphabet());
  for (const auto& [alpha, beta] : t) {
    const NCPoly right = p.nf(beta);
    for (const auto r = p.nf(alpha); const auto& [w, c] : r.terms()) {
      std::size_t k = 0;
      while (k < w.size() && winding_degree(w.sub(k), alphabet) != 0) ++k;
      NCPoly moved = p.nf(NCPoly::monomial(p.alphabet(), w.sub(k)) * right) * c;
      if (moved.is_zero()) continue;
      const Word prefix = w.sub(0, k);
      auto [it, inserted] = out.legs_.try_emplace(prefix, moved);
      if (!inserted) {
        it->second += moved;
        if (it->second.is_zero()) out.legs_.erase(it);
      }
    }
  }
  return out;
}

bool operator==(const BalancedTensor& a, const BalancedTensor& b) {
  return a.alphabet_->same_as(*b.alphabet_) && a.legs_ == b.legs_;
}

std::string to_text(const BalancedTensor& t) {
  LegPairs pairs;
  for (const auto& [w, r] : t.legs()) pairs.emplace_back(NCPoly::monomial(t.alphabet(), w), r);
  return to_text(pairs);
}

HTensor canonical_map(const LegPairs& t, const Presentation& p) {
  HTensor out(p.alphabet());
  for (const auto& [alpha, beta] : t)
    for (const auto co = coaction(beta, p); const auto& [n, bn] : co.legs()) out.add(n, p.nf(alpha * bn));
  return out;
}

HTensor canonical_map(const BalancedTensor& t, const Presentation& p) {
  LegPairs pairs;
  for (const auto& [w, r] : t.legs()) pairs.emplace_back(NCPoly::monomial(t.alphabet(), w), r);
  return canonical_map(pairs, p);
}

// ------------------------------------------------------------- derive_lift

LiftDerivation derive_lift(const Presentation& s3, int max_word_degree) {
  const auto& A = *s3.alphabet();
  std::vector<LetterId> right;
  for (std::size_t l = 0; l < A.size(); ++l)
    if (A.degree(static_cast<LetterId>(l)) == 1) right.push_back(static_cast<LetterId>(l));

  std::vector<Word> coinvariant;
  for (auto& w : basis_words_upto(s3.system(), max_word_degree))
    if (winding_degree(w, A) == 0) coinvariant.push_back(std::move(w));

  const SparseVec<Word> target{{Word{}, Scalar(1)}};
  Eliminator<Word> elim;
  std::vector<std::pair<LetterId, NCPoly>> candidates;
  LiftDerivation out;
  for (const auto& w : coinvariant) {
    for (const LetterId g : right) {
      const NCPoly left = s3.nf(NCPoly::monomial(s3.alphabet(), Word::of(A.star(g)) + w));
      const NCPoly column = s3.nf(left * NCPoly::monomial(s3.alphabet(), Word::of(g)));
      elim.insert(SparseVec<Word>(column.terms().begin(), column.terms().end()), candidates.size());
      candidates.emplace_back(g, left);
      out.ansatz.push_back(leg_text(left) + " (x) " + A.name(g));
      const auto r = elim.reduce(target);
      if (!r.residual.empty()) continue;
      out.unique = elim.kernel().empty();
      for (const LetterId h : right) {
        NCPoly leg = s3.zero();
        for (const auto& [i, c] : r.combination)
          if (candidates[i].first == h) leg += c * candidates[i].second;
        if (!leg.is_zero()) out.legs.emplace_back(s3.nf(leg), NCPoly::monomial(s3.alphabet(), Word::of(h)));
      }
      return out;
    }
  }
  throw NoSolution("no lift of u among left legs g* w with deg w <= " + std::to_string(max_word_degree));
}

// -------------------------------------------------------- StrongConnection

StrongConnection::StrongConnection(const AlgebraParams& params, int degree_cap)
    : params_(params), degree_cap_(degree_cap) {
  params_.validate();
}

PresentationPtr StrongConnection::s3_for(int degree) const {
  return builtin_presentation("s3", params_, std::max(degree_cap_, degree));
}

NCPoly StrongConnection::reduce(const NCPoly& f) const { return s3_for(f.degree())->nf(f); }

void StrongConnection::ensure_base() {
  if (!table_.empty()) return;
  const auto s3 = s3_for(degree_cap_);
  table_[0] = {{s3->one(), s3->one()}};

  auto up = derive_lift(*s3);
  table_[1] = up.legs;
  derivations_[1] = std::move(up);

  // l(u^-1): derive l(u) for the algebra with p and q exchanged and carry it
  // back along a <-> b, which reverses the winding.
  const auto flipped = builtin_presentation("s3", params_.swapped(), degree_cap_);
  auto down = derive_lift(*flipped);
  const auto sigma = AlgebraMap::from_text("flip", flipped, s3, {{"a", "b"}, {"b", "a"}});
  LegPairs legs;
  for (const auto& [alpha, beta] : down.legs) legs.emplace_back(sigma.apply(alpha), sigma.apply(beta));
  down.legs = legs;
  table_[-1] = std::move(legs);
  derivations_[-1] = std::move(down);
  flip_images_ = sigma.relation_images();
}

const LegPairs& StrongConnection::legs(int n) {
  std::lock_guard lock(mutex_);
  ensure_base();
  const int sign = n >= 0 ? 1 : -1;
  for (int m = 2; m <= std::abs(n); ++m) {
    const int key = sign * m;
    if (table_.count(key)) continue;
    const LegPairs& outer = table_.at(sign);
    const LegPairs& inner = table_.at(sign * (m - 1));
    LegPairs next;
    for (const auto& [alpha, beta] : outer)
      for (const auto& [alpha2, beta2] : inner) next.emplace_back(reduce(alpha * alpha2), reduce(beta2 * beta));
    table_[key] = std::move(next);
  }
  return table_.at(n);
}

BalancedTensor StrongConnection::balanced(int n) {
  return BalancedTensor::from_legs(legs(n), *s3_for(4 * std::abs(n)));
}

NCPoly StrongConnection::contraction(int n) {
  const auto& l = legs(n);
  NCPoly sum = s3_for(degree_cap_)->zero();
  for (const auto& [alpha, beta] : l) sum += reduce(alpha * beta);
  return sum;
}

const LiftDerivation& StrongConnection::derivation(int sign) {
  std::lock_guard lock(mutex_);
  ensure_base();
  return derivations_.at(sign >= 0 ? 1 : -1);
}

std::vector<std::pair<std::string, NCPoly>> StrongConnection::flip_relation_images() {
  std::lock_guard lock(mutex_);
  ensure_base();
  return flip_images_;
}

// --------------------------------------------------------------- projector

ProjectorMatrix projector(int n, StrongConnection& l) {
  const auto& legs = l.legs(n);
  ProjectorMatrix e;
  e.n = n;
  for (const auto& [ai, bi] : legs) {
    std::vector<NCPoly> row;
    for (const auto& [aj, bj] : legs) row.push_back(l.reduce(bi * aj));
    e.entries.push_back(std::move(row));
  }
  return e;
}

std::vector<std::vector<NCPoly>> projector_square(const ProjectorMatrix& e, const StrongConnection& l) {
  const std::size_t k = e.size();
  std::vector<std::vector<NCPoly>> out;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<NCPoly> row;
    for (std::size_t j = 0; j < k; ++j) {
      NCPoly s = e.entries[i][j] - e.entries[i][j];
      for (std::size_t m = 0; m < k; ++m) s += l.reduce(e.entries[i][m] * e.entries[m][j]);
      row.push_back(std::move(s));
    }
    out.push_back(std::move(row));
  }
  return out;
}

NCPoly matrix_trace(const ProjectorMatrix& e, const StrongConnection& l) {
  NCPoly t = e.entries.at(0).at(0) - e.entries[0][0];
  for (std::size_t i = 0; i < e.size(); ++i) t += e.entries[i][i];
  return l.reduce(t);
}

nlohmann::json to_json(const ProjectorMatrix& e) {
  auto rows = nlohmann::json::array();
  for (const auto& r : e.entries) {
    auto row = nlohmann::json::array();
    for (const auto& x : r) row.push_back(to_text(x));
    rows.push_back(std::move(row));
  }
  return {{"n", e.n}, {"size", e.size()}, {"entries", std::move(rows)}};
}

// ------------------------------------------------------------ verify_galois

std::vector<CheckReport> verify_galois(int max_winding, int contraction_winding, const AlgebraParams& params,
                                       int degree_cap) {
  std::vector<CheckReport> out;
  StrongConnection l(params, degree_cap);
  const auto base = l.s3_for(degree_cap);
  const auto& A = *base->alphabet();

  for (int sign : {1, -1}) {
    const auto& d = l.derivation(sign);
    const NCPoly m = l.contraction(sign);
    const bool ok = d.unique && m == base->one();
    out.push_back(make_report("lift_derivation", sign > 0 ? "u" : "u*", 1, ok,
                              ok ? std::nullopt
                                 : std::optional<std::string>(d.unique ? "m(l) = " + to_text(m)
                                                                       : "solution not unique on the ansatz"),
                              {{"lift", to_text(d.legs)}, {"ansatz", d.ansatz}}));
  }
  {
    std::optional<std::string> w;
    for (const auto& [name, img] : l.flip_relation_images())
      if (!img.is_zero()) {
        w = "relation '" + name + "' maps to " + to_text(img);
        break;
      }
    out.push_back(make_report("flip_homomorphism", "a<->b", 4, !w, w));
  }

  for (int n = -max_winding; n <= max_winding; ++n) {
    const auto p = l.s3_for(4 * std::abs(n));
    const HTensor can = canonical_map(l.balanced(n), *p);
    const HTensor can_raw = canonical_map(l.legs(n), *p);
    const HTensor expected = HTensor::pure(p->one(), n);
    const bool ok = can == expected && can_raw == expected;
    out.push_back(make_report("canonical_map", "l(" + laurent_text(n) + ")", std::abs(n), ok,
                              ok ? std::nullopt : std::optional<std::string>("can(l) = " + to_text(can))));
  }

  for (int n = -contraction_winding; n <= contraction_winding; ++n) {
    const NCPoly m = l.contraction(n);
    const bool ok = m == base->one();
    out.push_back(make_report("contraction", "l(" + laurent_text(n) + ")", std::abs(n), ok,
                              ok ? std::nullopt : std::optional<std::string>("m(l) = " + to_text(m)),
                              {{"terms", l.legs(n).size()}}));
    std::optional<std::string> w;
    for (const auto& [alpha, beta] : l.legs(n)) {
      for (const auto& [word, c] : alpha.terms())
        if (winding_degree(word, A) != -n) w = "left leg word " + to_text(word, A) + " has the wrong winding";
      for (const auto& [word, c] : beta.terms())
        if (winding_degree(word, A) != n) w = "right leg word " + to_text(word, A) + " has the wrong winding";
      if (w) break;
    }
    out.push_back(make_report("homogeneity", "l(" + laurent_text(n) + ")", std::abs(n), !w, w));
  }

  for (int n = -max_winding; n <= max_winding; ++n) {
    const ProjectorMatrix e = projector(n, l);
    const auto sq = projector_square(e, l);
    std::optional<std::string> wi;
    std::optional<std::string> wc;
    const auto p = l.s3_for(4 * std::abs(n));
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (!wi && sq[i][j] != e.entries[i][j])
          wi = "(E^2 - E)[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + to_text(sq[i][j] - e.entries[i][j]);
        if (!wc && !is_coinvariant(e.entries[i][j], *p))
          wc = "entry [" + std::to_string(i) + "][" + std::to_string(j) + "] = " + to_text(e.entries[i][j]);
      }
    out.push_back(make_report("projector_idempotent", "E(" + std::to_string(n) + ")", std::abs(n), !wi, wi,
                              {{"size", e.size()}}));
    out.push_back(make_report("projector_coinvariant", "E(" + std::to_string(n) + ")", std::abs(n), !wc, wc));
  }

  {
    // can(p b (x) p') = can(p (x) b p') on sample coinvariant b.
    std::optional<std::string> w;
    const char* ps[] = {"a", "b*", "a* b", "1"};
    const char* bs[] = {"b b*", "b a", "a a*", "a* b*", "a a* b b*"};
    const char* qs[] = {"a", "b*", "a^2 b", "a* a"};
    for (const char* ptxt : ps)
      for (const char* btxt : bs)
        for (const char* qtxt : qs) {
          if (w) break;
          const NCPoly pp = base->parse(ptxt), bb = base->parse(btxt), qq = base->parse(qtxt);
          const LegPairs left{{pp * bb, qq}};
          const LegPairs right{{pp, bb * qq}};
          if (canonical_map(left, *base) != canonical_map(right, *base))
            w = std::string("p = ") + ptxt + ", b = " + btxt + ", p' = " + qtxt;
        }
    out.push_back(make_report("balanced_well_defined", "samples", 4, !w, w));
  }
  return out;
}

}  // namespace qbundle
