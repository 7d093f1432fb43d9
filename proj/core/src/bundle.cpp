#include "qbundle/bundle.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <tuple>

#include "qbundle/linalg.hpp"
#include "qbundle/text.hpp"

namespace qbundle {

namespace {

using TupleKey = std::tuple<std::size_t, int, Word>;

HTensor map_legs(const AlgebraMap& m, const HTensor& t) {
  HTensor out(m.target()->alphabet());
  for (const auto& [n, f] : t.legs()) out.add(n, m.apply(f));
  return out;
}

void add_keyed(SparseVec<TupleKey>& v, std::size_t slot, const HTensor& t, const Scalar& c = 1) {
  for (const auto& [n, f] : t.legs())
    for (const auto& [w, a] : f.terms()) {
      auto [it, inserted] = v.try_emplace(TupleKey{slot, n, w}, c * a);
      if (!inserted) {
        it->second += c * a;
        if (it->second == 0) v.erase(it);
      }
    }
}

SparseVec<TupleKey> chart_vector(const Covering& c, const Word& w) {
  SparseVec<TupleKey> v;
  for (std::size_t i = 0; i < c.charts.size(); ++i) add_keyed(v, i, c.charts[i].apply(w));
  return v;
}

// phi_ij on B_ij (x) H: b (x) u^n -> b tau_ji(u^n) (x) u^n.
HTensor twist(const Covering& c, const Overlap& o, const HTensor& t) {
  if (!c.transitions) return t;
  const Transition* tau = c.transitions->find(o.j, o.i);
  if (!tau) throw std::invalid_argument("covering '" + c.name + "' lacks a transition for an overlap");
  HTensor out(o.algebra->alphabet());
  for (const auto& [n, f] : t.legs()) out.add(n, o.algebra->nf(f * tau->at(n)));
  return out;
}

std::string element_text(const PresentationPtr& p, const SparseVec<std::size_t>& combo, const std::vector<Word>& words) {
  NCPoly f(p->alphabet());
  for (const auto& [i, c] : combo) f.add_term(words[i], c);
  return to_text(f);
}

}  // namespace

std::string to_text(const GluedElement& g) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < g.components.size(); ++i) os << (i ? ", " : "") << to_text(g.components[i]);
  os << ')';
  return os.str();
}

NCPoly Transition::at(int n) const {
  NCPoly acc = algebra->one();
  const NCPoly& g = n >= 0 ? u : u_star;
  for (int k = 0; k < std::abs(n); ++k) acc = algebra->nf(acc * g);
  return acc;
}

const Transition* TransitionData::find(std::size_t i, std::size_t j) const {
  for (const auto& t : maps)
    if (t.i == i && t.j == j) return &t;
  return nullptr;
}

// ------------------------------------------------------------------ checks

std::size_t covering_rank(const Covering& c, int d) {
  const auto words = basis_words_upto(c.base->system(), d);
  Eliminator<TupleKey> elim;
  for (std::size_t i = 0; i < words.size(); ++i) elim.insert(chart_vector(c, words[i]), i);
  return elim.rank();
}

CheckReport check_covering(const Covering& c, int d) {
  const auto words = basis_words_upto(c.base->system(), d);
  Eliminator<TupleKey> elim;
  for (std::size_t i = 0; i < words.size(); ++i) elim.insert(chart_vector(c, words[i]), i);
  std::optional<std::string> witness;
  if (!elim.kernel().empty())
    witness = "nonzero element in every chart kernel: " + element_text(c.base, elim.kernel().front(), words);
  return make_report("covering", c.name, d, elim.kernel().empty(), witness,
                     {{"basis_dimension", words.size()}, {"image_rank", elim.rank()}});
}

CheckReport check_completeness(const Covering& c, int d, std::optional<int> lift_degree) {
  const int lift = lift_degree.value_or(2 * d);
  const bool graded = c.transitions.has_value();

  // Basis of the tuple space in the degree <= d filtration.
  std::vector<TupleKey> tuple_basis;
  for (std::size_t i = 0; i < c.charts.size(); ++i) {
    const auto& sys = c.charts[i].target()->system();
    const int span = graded ? d : 0;
    for (int n = -span; n <= span; ++n)
      for (auto& w : basis_words_upto(sys, d - std::abs(n))) tuple_basis.emplace_back(i, n, std::move(w));
  }

  // Overlap defects of each basis tuple; the kernel is the compatible space.
  Eliminator<TupleKey> defects;
  for (std::size_t t = 0; t < tuple_basis.size(); ++t) {
    const auto& [chart, n, w] = tuple_basis[t];
    SparseVec<TupleKey> v;
    for (std::size_t o = 0; o < c.overlaps.size(); ++o) {
      const auto& ov = c.overlaps[o];
      const HTensor leg = HTensor::pure(NCPoly::monomial(c.charts[chart].target()->alphabet(), w), n);
      if (chart == ov.i) add_keyed(v, o, map_legs(ov.from_i, leg));
      if (chart == ov.j) add_keyed(v, o, twist(c, ov, map_legs(ov.from_j, leg)), Scalar(-1));
    }
    defects.insert(v, t);
  }

  const auto words = basis_words_upto(c.base->system(), lift);
  Eliminator<TupleKey> image;
  for (std::size_t i = 0; i < words.size(); ++i) image.insert(chart_vector(c, words[i]), i);

  std::size_t unlifted = 0;
  std::optional<std::string> witness;
  for (const auto& kv : defects.kernel()) {
    SparseVec<TupleKey> tuple;
    for (const auto& [t, coef] : kv) tuple[tuple_basis[t]] = coef;
    if (image.in_span(tuple)) continue;
    ++unlifted;
    if (!witness) {
      GluedElement g;
      for (const auto& chart : c.charts) g.components.emplace_back(chart.target()->alphabet());
      for (const auto& [key, coef] : tuple) {
        const auto& [chart, n, w] = key;
        g.components[chart].add(n, NCPoly::monomial(c.charts[chart].target()->alphabet(), w, coef));
      }
      witness = "compatible tuple without a preimage of degree <= " + std::to_string(lift) + ": " + to_text(g);
    }
  }
  return make_report("completeness", c.name, d, unlifted == 0, witness,
                     {{"compatible_dimension", defects.kernel().size()},
                      {"tuple_dimension", tuple_basis.size()},
                      {"lift_degree", lift},
                      {"image_rank", image.rank()},
                      {"unlifted", unlifted}});
}

std::vector<CheckReport> check_cocycle(const TransitionData& t, int max_power) {
  std::vector<CheckReport> out;
  auto label = [](const Transition& tr) {
    return "tau_" + std::to_string(tr.i + 1) + std::to_string(tr.j + 1);
  };
  for (const auto& tr : t.maps) {
    const auto& b = *tr.algebra;
    if (tr.i == tr.j) {
      const bool ok = b.nf(tr.u) == b.one() && b.nf(tr.u_star) == b.one();
      out.push_back(make_report("tau_ii_counit", label(tr), 1, ok,
                                ok ? std::nullopt
                                   : std::optional<std::string>("tau(u) = " + to_text(b.nf(tr.u)) + ", expected 1")));
    }
    const NCPoly left = b.nf(tr.u * tr.u_star) - b.one();
    const NCPoly right = b.nf(tr.u_star * tr.u) - b.one();
    const bool unitary = left.is_zero() && right.is_zero();
    out.push_back(make_report("tau_homomorphism", label(tr), 2, unitary,
                              unitary ? std::nullopt
                                      : std::optional<std::string>("tau(u) tau(u*) - 1 = " + to_text(left) +
                                                                   ", tau(u*) tau(u) - 1 = " + to_text(right))));
    std::optional<std::string> central_witness;
    for (std::size_t l = 0; l < b.alphabet()->size() && !central_witness; ++l) {
      const NCPoly g = NCPoly::monomial(b.alphabet(), Word::of(static_cast<LetterId>(l)));
      for (const NCPoly* v : {&tr.u, &tr.u_star}) {
        const NCPoly comm = b.nf(*v * g - g * *v);
        if (!comm.is_zero()) {
          central_witness = "[" + to_text(*v) + ", " + b.alphabet()->name(static_cast<LetterId>(l)) + "] = " + to_text(comm);
          break;
        }
      }
    }
    out.push_back(make_report("tau_central", label(tr), 1, !central_witness, central_witness));
  }
  for (const auto& tr : t.maps) {
    const Transition* back = t.find(tr.j, tr.i);
    if (!back || tr.i == tr.j) continue;
    std::optional<std::string> witness;
    for (int n = -max_power; n <= max_power && !witness; ++n) {
      // tau_ji(S(u^n)) = tau_ij(u^n)
      const NCPoly lhs = back->at(-n);
      const NCPoly rhs = tr.at(n);
      if (lhs != rhs)
        witness = "u^" + std::to_string(n) + ": tau_ji(S u^n) = " + to_text(lhs) + " but tau_ij(u^n) = " + to_text(rhs);
    }
    out.push_back(make_report("tau_antipode", label(tr), max_power, !witness, witness));
  }
  std::optional<std::string> triple_witness;
  for (const auto& tri : t.triples) {
    const Transition* ij = t.find(tri.i, tri.j);
    const Transition* ik = t.find(tri.i, tri.k);
    const Transition* kj = t.find(tri.k, tri.j);
    if (!ij || !ik || !kj) {
      triple_witness = "missing transition for a triple overlap";
      break;
    }
    for (int n = -max_power; n <= max_power && !triple_witness; ++n) {
      const NCPoly lhs = tri.from_ij.apply(ij->at(n));
      const NCPoly rhs = tri.algebra->nf(tri.from_ik.apply(ik->at(n)) * tri.from_kj.apply(kj->at(n)));
      if (lhs != rhs)
        triple_witness = "triple (" + std::to_string(tri.i + 1) + "," + std::to_string(tri.j + 1) + "," +
                         std::to_string(tri.k + 1) + ") at u^" + std::to_string(n) + ": " + to_text(lhs) +
                         " != " + to_text(rhs);
    }
    if (triple_witness) break;
  }
  out.push_back(make_report("cocycle_triple", t.triples.empty() ? "vacuous" : "triples", max_power, !triple_witness,
                            triple_witness, {{"triples", t.triples.size()}}));
  return out;
}

// ------------------------------------------------------------ GluedAlgebra

GluedAlgebra::GluedAlgebra(Covering covering, std::vector<AlgebraMap> base_maps)
    : covering_(std::move(covering)), base_maps_(std::move(base_maps)) {
  if (!base_maps_.empty() && base_maps_.size() != covering_.charts.size())
    throw std::invalid_argument("one base map per chart is required");
}

std::vector<HTensor> GluedAlgebra::defects(const GluedElement& f) const {
  if (f.components.size() != covering_.charts.size()) throw std::invalid_argument("tuple has the wrong length");
  std::vector<HTensor> out;
  for (const auto& o : covering_.overlaps) {
    HTensor d = map_legs(o.from_i, f.components[o.i]);
    d -= twist(covering_, o, map_legs(o.from_j, f.components[o.j]));
    out.push_back(d.reduced(*o.algebra));
  }
  return out;
}

bool GluedAlgebra::is_compatible(const GluedElement& f) const {
  if (!covering_.transitions)
    for (const auto& c : f.components)
      for (const auto& [n, g] : c.legs())
        if (n != 0) return false;
  for (const auto& d : defects(f))
    if (!d.is_zero()) return false;
  return true;
}

GluedElement GluedAlgebra::zero() const {
  GluedElement out;
  for (const auto& c : covering_.charts) out.components.emplace_back(c.target()->alphabet());
  return out;
}

GluedElement GluedAlgebra::add(const GluedElement& f, const GluedElement& g) const {
  GluedElement out = f;
  for (std::size_t i = 0; i < out.components.size(); ++i)
    out.components[i] = (out.components[i] + g.components.at(i)).reduced(*covering_.charts[i].target());
  return out;
}

GluedElement GluedAlgebra::scale(const Scalar& c, const GluedElement& f) const {
  GluedElement out;
  for (const auto& comp : f.components) out.components.push_back(c * comp);
  return out;
}

GluedElement GluedAlgebra::mul(const GluedElement& f, const GluedElement& g) const {
  GluedElement out;
  for (std::size_t i = 0; i < f.components.size(); ++i)
    out.components.push_back((f.components[i] * g.components.at(i)).reduced(*covering_.charts[i].target()));
  return out;
}

GluedElement GluedAlgebra::star(const GluedElement& f) const {
  GluedElement out;
  for (std::size_t i = 0; i < f.components.size(); ++i)
    out.components.push_back(f.components[i].star().reduced(*covering_.charts[i].target()));
  return out;
}

std::vector<HTensor2> GluedAlgebra::coaction(const GluedElement& f) const {
  std::vector<HTensor2> out;
  for (const auto& c : f.components) out.push_back(id_tensor_coproduct(c));
  return out;
}

GluedElement GluedAlgebra::iota(const NCPoly& b) const {
  if (base_maps_.empty()) throw std::logic_error("glued algebra has no base maps");
  GluedElement out;
  for (const auto& pi : base_maps_) out.components.push_back(HTensor::pure(pi.apply(b), 0));
  return out;
}

GluedElement GluedAlgebra::embed(const NCPoly& f) const {
  GluedElement out;
  for (const auto& chart : covering_.charts) out.components.push_back(chart.apply(f));
  return out;
}

// ---------------------------------------------------------- StandardBundle

std::shared_ptr<const StandardBundle> StandardBundle::get(const AlgebraParams& params, int degree_cap) {
  using Key = std::tuple<std::string, std::string, int>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const StandardBundle>> cache;
  const Key key{params.p.get_str(), params.q.get_str(), degree_cap};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const auto maps = StandardMaps::get(params, degree_cap);
  const auto& alg = *maps->algebras;
  const auto& circle = alg.circle;

  TransitionData transitions;
  transitions.maps.push_back({0, 1, circle, circle->parse("u"), circle->parse("u*")});
  transitions.maps.push_back({1, 0, circle, circle->parse("u*"), circle->parse("u")});
  transitions.maps.push_back({0, 0, alg.disc_p, alg.disc_p->one(), alg.disc_p->one()});
  transitions.maps.push_back({1, 1, alg.disc_q, alg.disc_q->one(), alg.disc_q->one()});

  const Overlap overlap{0, 1, circle, maps->boundary_p, maps->boundary_q};
  Covering sphere_covering{"sphere",
                           alg.sphere,
                           {ChartMap::from_algebra_map(maps->pi_p), ChartMap::from_algebra_map(maps->pi_q)},
                           {overlap},
                           std::nullopt};
  Covering total_covering{"s3", alg.s3, {maps->chi_p, maps->chi_q}, {overlap}, transitions};
  GluedAlgebra glued(total_covering, {maps->pi_p, maps->pi_q});

  auto out = std::make_shared<const StandardBundle>(
      StandardBundle{maps, transitions, std::move(sphere_covering), std::move(total_covering), std::move(glued)});
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(out)).first->second;
}

GluedElement pair_embedding(const NCPoly& f, const StandardBundle& bundle) { return bundle.glued.embed(f); }

std::size_t rank_of_image(int d, const StandardBundle& bundle) { return covering_rank(bundle.total_covering, d); }

std::vector<CheckReport> check_trivialization(const ChartMap& chi, const AlgebraMap& pi, const StandardMaps& maps) {
  std::vector<CheckReport> out;
  const auto& sphere = *maps.algebras->sphere;
  const auto& s3 = *maps.algebras->s3;

  std::optional<std::string> wa;
  for (const char* g : {"f_0", "f_1", "f_1*"}) {
    const NCPoly f = sphere.letter(g);
    const HTensor lhs = chi.apply(maps.iota.apply(f));
    const HTensor rhs = HTensor::pure(pi.apply(f), 0);
    if (lhs != rhs) {
      wa = std::string(g) + ": chi(iota) = " + to_text(lhs) + " but pi (x) 1 = " + to_text(rhs);
      break;
    }
  }
  out.push_back(make_report("trivialization_a", chi.name(), 1, !wa, wa));

  std::optional<std::string> wb;
  for (std::size_t l = 0; l < s3.alphabet()->size() && !wb; ++l) {
    const NCPoly g = NCPoly::monomial(s3.alphabet(), Word::of(static_cast<LetterId>(l)));
    HTensor2 lhs(chi.target()->alphabet());
    for (const auto co = coaction(g, s3); const auto& [n, gn] : co.legs())
      for (const auto img = chi.apply(gn); const auto& [m, h] : img.legs()) lhs.add(m, n, h);
    const HTensor2 rhs = id_tensor_coproduct(chi.apply(g));
    if (!(lhs == rhs))
      wb = s3.alphabet()->name(static_cast<LetterId>(l)) + ": (chi (x) id) Delta_R = " + to_text(lhs) +
           " but (id (x) Delta) chi = " + to_text(rhs);
  }
  out.push_back(make_report("trivialization_b", chi.name(), 1, !wb, wb));

  std::optional<std::string> wr;
  std::size_t count = 0;
  for (const auto& [name, img] : chi.relation_images()) {
    ++count;
    if (!img.is_zero() && !wr) wr = "relation '" + name + "' maps to " + to_text(img);
  }
  out.push_back(make_report("trivialization_relations", chi.name(), 4, !wr, wr, {{"relations", count}}));
  return out;
}

std::vector<CheckReport> verify_bundle(int d, const AlgebraParams& params, int degree_cap) {
  std::vector<CheckReport> out;
  const auto bundle = StandardBundle::get(params, std::max(degree_cap, 2 * d));
  const auto& maps = *bundle->maps;
  const auto& s3 = *maps.algebras->s3;

  for (const AlgebraMap* m : {&maps.iota, &maps.pi_p, &maps.pi_q, &maps.boundary_p, &maps.boundary_q}) {
    std::optional<std::string> w;
    for (const auto& [name, img] : m->relation_images())
      if (!img.is_zero()) {
        w = "relation '" + name + "' maps to " + to_text(img);
        break;
      }
    out.push_back(make_report("well_defined", m->name(), 0, !w, w));
  }

  out.push_back(check_covering(bundle->sphere_covering, d));
  out.push_back(check_completeness(bundle->sphere_covering, d));
  for (auto& r : check_cocycle(bundle->transitions)) out.push_back(std::move(r));
  for (auto& r : check_trivialization(maps.chi_p, maps.pi_p, maps)) out.push_back(std::move(r));
  for (auto& r : check_trivialization(maps.chi_q, maps.pi_q, maps)) out.push_back(std::move(r));

  for (int k = 1; k <= d; ++k) {
    const std::size_t basis = basis_words_upto(s3.system(), k).size();
    const std::size_t rank = rank_of_image(k, *bundle);
    out.push_back(make_report("pair_embedding_rank", "s3", k, rank == basis,
                              rank == basis ? std::nullopt
                                            : std::optional<std::string>("rank " + std::to_string(rank) +
                                                                         " < basis size " + std::to_string(basis)),
                              {{"basis_dimension", basis}, {"image_rank", rank}}));
  }
  out.push_back(check_completeness(bundle->total_covering, std::min(d, 3)));

  std::optional<std::string> wg;
  for (const char* g : {"a", "a*", "b", "b*"}) {
    const auto e = bundle->glued.embed(s3.letter(g));
    if (!bundle->glued.is_compatible(e)) {
      wg = std::string("image of ") + g + " is incompatible: " + to_text(e);
      break;
    }
  }
  for (const char* f : {"f_0", "f_1"}) {
    if (wg) break;
    const NCPoly b = maps.algebras->sphere->letter(f);
    if (bundle->glued.iota(b) != bundle->glued.embed(maps.iota.apply(b)))
      wg = std::string("iota(") + f + ") disagrees with the image of its embedding";
  }
  out.push_back(make_report("glue", "s3", 1, !wg, wg));
  return out;
}

}  // namespace qbundle
