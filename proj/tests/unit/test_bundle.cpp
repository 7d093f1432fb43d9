#include <doctest.h>

#include <array>

#include "generators.hpp"
#include "qbundle/bundle.hpp"
#include "qbundle/text.hpp"

using namespace qbundle;

namespace {

std::shared_ptr<const StandardBundle> bundle() { return StandardBundle::get(); }

AlgebraMap identity(const PresentationPtr& p) {
  std::map<std::string, NCPoly> images;
  for (const auto id : p->alphabet()->generators()) images.emplace(p->alphabet()->name(id), NCPoly::monomial(p->alphabet(), Word::of(id)));
  return AlgebraMap("id", p, p, images);
}

bool has_failure(const std::vector<CheckReport>& rs, const std::string& check) {
  for (const auto& r : rs)
    if (r.check == check && !r.passed) return true;
  return false;
}

// Three charts over the circle glued by u -> u^(c_j - c_i); exponents stay
// small enough for the reduction limit of the circle.
TransitionData coboundary(const std::array<int, 3>& c, int perturb_13 = 0) {
  const auto circle = builtin_presentation("circle");
  const auto u1 = circle;
  TransitionData t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      int k = c[j] - c[i];
      if (i == 0 && j == 2) k += perturb_13;
      if (i == 2 && j == 0) k -= perturb_13;
      t.maps.push_back({i, j, circle, to_poly(Laurent::monomial(k), *u1), to_poly(Laurent::monomial(-k), *u1)});
    }
  const AlgebraMap id = identity(circle);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        if (i != j && j != k && i != k) t.triples.push_back({i, j, k, circle, id, id, id});
  return t;
}

}  // namespace

TEST_CASE("the maps of the bundle respect all relations") {
  const auto& m = *bundle()->maps;
  for (const AlgebraMap* f : {&m.iota, &m.pi_p, &m.pi_q, &m.boundary_p, &m.boundary_q})
    for (const auto& [name, img] : f->relation_images()) REQUIRE_MESSAGE(img.is_zero(), f->name() << " " << name);
}

TEST_CASE("sphere covering: zero intersection and completeness at degree 4") {
  const auto b = bundle();
  const CheckReport cov = check_covering(b->sphere_covering, 4);
  CHECK(cov.passed);
  CHECK(cov.details.at("basis_dimension") == 1 + 3 + 6 + 9 + 12);
  CHECK(check_completeness(b->sphere_covering, 4).passed);
}

TEST_CASE("trivial covering {0}") {
  const auto sphere = builtin_presentation("sphere");
  const Covering c{"zero", sphere, {ChartMap::from_algebra_map(identity(sphere))}, {}, std::nullopt};
  for (int d = 0; d <= 4; ++d) CHECK(check_covering(c, d).passed);
  CHECK(check_completeness(c, 2).passed);
}

TEST_CASE("covering {J, J} fails with a witness in J") {
  const auto& m = *bundle()->maps;
  const auto sphere = m.algebras->sphere;
  const ChartMap chart = ChartMap::from_algebra_map(m.pi_q);
  const Covering c{"JJ", sphere, {chart, chart}, {}, std::nullopt};
  const CheckReport r = check_covering(c, 2);
  REQUIRE_FALSE(r.passed);
  REQUIRE(r.witness.has_value());
  const auto colon = r.witness->find(": ");
  REQUIRE(colon != std::string::npos);
  const NCPoly w = sphere->parse(r.witness->substr(colon + 2));
  CHECK_FALSE(sphere->nf(w).is_zero());
  CHECK(m.pi_q.apply(w).is_zero());
}

TEST_CASE("the transition functions of the bundle form a cocycle") {
  const auto rs = check_cocycle(bundle()->transitions);
  for (const auto& r : rs) CHECK_MESSAGE(r.passed, r.summary());
  bool vacuous = false;
  for (const auto& r : rs) vacuous = vacuous || (r.check == "cocycle_triple" && r.instance == "vacuous");
  CHECK(vacuous);
  CHECK(bundle()->transitions.find(0, 0)->at(1) == bundle()->maps->algebras->disc_p->one());
}

TEST_CASE("synthetic three-chart cocycle") {
  for (const auto& r : check_cocycle(coboundary({0, 1, 2}))) CHECK_MESSAGE(r.passed, r.summary());
  const auto broken = check_cocycle(coboundary({0, 1, 2}, 1));
  CHECK(has_failure(broken, "cocycle_triple"));
  CHECK_FALSE(has_failure(broken, "tau_antipode"));

  TransitionData bad = coboundary({0, 1, 2});
  bad.maps[0].u = bad.maps[1].u;  // tau_11(u) = u
  bad.maps[0].u_star = bad.maps[1].u_star;
  CHECK(has_failure(check_cocycle(bad), "tau_ii_counit"));

  TransitionData skew = coboundary({0, 1, 2});
  for (auto& tr : skew.maps)
    if (tr.i == 0 && tr.j == 1) std::swap(tr.u, tr.u_star);
  CHECK(has_failure(check_cocycle(skew), "tau_antipode"));
}

TEST_CASE("trivializations") {
  const auto& m = *bundle()->maps;
  for (const auto& r : check_trivialization(m.chi_p, m.pi_p, m)) CHECK_MESSAGE(r.passed, r.summary());
  for (const auto& r : check_trivialization(m.chi_q, m.pi_q, m)) CHECK_MESSAGE(r.passed, r.summary());
  const auto& s3 = *m.algebras->s3;
  const HTensor img = m.chi_p.apply(s3.parse("b* b - p b b* - (1 - p)"));
  CHECK(img.is_zero());
  // A wrong trivialization is caught.
  const ChartMap wrong = ChartMap::from_text("wrong", m.algebras->s3, m.algebras->disc_p,
                                             {{"a", "1 (x) u"}, {"b", "x (x) u"}});
  CHECK(has_failure(check_trivialization(wrong, m.pi_p, m), "trivialization_b"));
}

TEST_CASE("total covering by the chart kernels is complete at degree 3") {
  const CheckReport r = check_completeness(bundle()->total_covering, 3);
  CHECK(r.passed);
  CHECK(r.details.at("unlifted") == 0);
}

TEST_CASE("glued tuples") {
  const auto b = bundle();
  const auto& alg = *b->maps->algebras;
  const auto& g = b->glued;
  const GluedElement image_a{{HTensor::pure(alg.disc_p->one(), 1), HTensor::pure(alg.disc_q->letter("y"), 1)}};
  const GluedElement image_b{{HTensor::pure(alg.disc_p->letter("x"), -1), HTensor::pure(alg.disc_q->one(), -1)}};
  const GluedElement broken{{HTensor::pure(alg.disc_p->one(), 1), HTensor(alg.disc_q->alphabet())}};
  CHECK(g.is_compatible(image_a));
  CHECK(g.is_compatible(image_b));
  CHECK_FALSE(g.is_compatible(broken));
  CHECK(pair_embedding(alg.s3->letter("a"), *b) == image_a);
  CHECK(pair_embedding(alg.s3->letter("b"), *b) == image_b);
  CHECK(g.is_compatible(g.mul(image_a, image_b)));
  CHECK(g.is_compatible(g.star(image_a)));
}

TEST_CASE("every s3 relation embeds to (0, 0)") {
  const auto b = bundle();
  const auto& s3 = *b->maps->algebras->s3;
  REQUIRE(s3.relations().size() == 7);
  for (const auto& r : s3.relations()) REQUIRE(pair_embedding(r.poly, *b) == b->glued.zero());
  CHECK(pair_embedding(s3.parse("(1 - a a*)(1 - b b*)"), *b) == b->glued.zero());
}

TEST_CASE("rank of the glued image equals the basis size for d <= 6") {
  const auto b = bundle();
  std::size_t cumulative = 0;
  for (int d = 1; d <= 6; ++d) {
    if (d == 1) cumulative = 1;
    cumulative += qtest::s3_basis_count(d);
    REQUIRE(rank_of_image(d, *b) == cumulative);
  }
  CHECK(rank_of_image(1, *b) == 5);
}

TEST_CASE("the embedding is a *-homomorphism of comodule algebras") {
  const auto b = bundle();
  const auto& s3 = *b->maps->algebras->s3;
  const auto& g = b->glued;
  qtest::Gen gen(41);
  for (int i = 0; i < 100; ++i) {
    const NCPoly f = gen.poly(s3.alphabet(), 2), h = gen.poly(s3.alphabet(), 2);
    const GluedElement ef = g.embed(f), eh = g.embed(h);
    REQUIRE(g.is_compatible(ef));
    REQUIRE(g.embed(f * h) == g.mul(ef, eh));
    REQUIRE(g.embed(f + h) == g.add(ef, eh));
    REQUIRE(g.embed(star(f)) == g.star(ef));
    const auto co = g.coaction(ef);
    const HTensor delta = coaction(f, s3);
    for (std::size_t c = 0; c < b->total_covering.charts.size(); ++c) {
      const auto& chart = b->total_covering.charts[c];
      HTensor2 expected(chart.target()->alphabet());
      for (const auto& [n, fn] : delta.legs())
        for (const auto img = chart.apply(fn); const auto& [m, leg] : img.legs()) expected.add(m, n, leg);
      REQUIRE(co[c] == expected.reduced(*chart.target()));
    }
  }
}

TEST_CASE("iota agrees with the embedding of its image") {
  const auto b = bundle();
  const auto& m = *b->maps;
  qtest::Gen gen(42);
  for (int i = 0; i < 50; ++i) {
    const NCPoly f = gen.poly(m.algebras->sphere->alphabet(), 2);
    REQUIRE(b->glued.iota(f) == b->glued.embed(m.iota.apply(f)));
  }
}

TEST_CASE("verify_bundle passes at degree 4") {
  const auto rs = verify_bundle(4);
  for (const auto& r : rs) CHECK_MESSAGE(r.passed, r.summary());
}
