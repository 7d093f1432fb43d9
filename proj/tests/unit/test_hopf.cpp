#include <doctest.h>

#include "generators.hpp"
#include "qbundle/galois.hpp"
#include "qbundle/hopf.hpp"
#include "qbundle/maps.hpp"
#include "qbundle/presentation.hpp"
#include "qbundle/text.hpp"

using namespace qbundle;

TEST_CASE("Laurent coproduct, counit and antipode examples") {
  const Laurent u = Laurent::monomial(1);
  CHECK(coproduct(u) == Laurent2{{{1, 1}, Scalar(1)}});
  CHECK(antipode(Laurent::monomial(3)) == Laurent::monomial(-3));
  CHECK(counit(Scalar(2) * u - Laurent::monomial(-1)) == 1);
  CHECK(laurent_text(-2) == "u*^2");
  CHECK(laurent_text(0) == "1");
  CHECK(to_text(Scalar(2) * u - Laurent::monomial(-1)) == "-u* + 2 u");
}

TEST_CASE("Hopf axioms on u^n for |n| <= 10") {
  for (int n = -10; n <= 10; ++n) {
    const Laurent h = Laurent::monomial(n);
    REQUIRE(antipode_convolution(h) == Laurent::monomial(0, counit(h)));
    // (eps (x) id) Delta = id = (id (x) eps) Delta
    for (const auto& [nm, c] : coproduct(h)) {
      REQUIRE(nm.first == n);
      REQUIRE(nm.second == n);
      REQUIRE(c == 1);
    }
    REQUIRE(antipode(antipode(h)) == h);
    REQUIRE(h * antipode(h) == Laurent::monomial(0));
  }
}

TEST_CASE("Laurent elements round-trip through the presented algebra") {
  const auto u1 = builtin_presentation("hopf-u1");
  qtest::Gen gen(31);
  for (int i = 0; i < 200; ++i) {
    Laurent h;
    for (int t = 0; t < 4; ++t) h.add_term(gen.uniform(-5, 5), gen.coeff());
    REQUIRE(from_poly(to_poly(h, *u1), *u1) == h);
  }
  CHECK(from_poly(u1->parse("u u* u"), *u1) == Laurent::monomial(1));
}

TEST_CASE("coaction examples") {
  const auto s3 = builtin_presentation("s3");
  CHECK(to_text(coaction(s3->letter("a"), *s3)) == "a (x) u");
  CHECK(coaction(s3->parse("b a"), *s3) == HTensor::pure(s3->nf(s3->parse("b a")), 0));
  CHECK(coaction(s3->parse("a^2 b*"), *s3) == HTensor::pure(s3->nf(s3->parse("a^2 b*")), 3));
}

TEST_CASE("coinvariance examples") {
  const auto s3 = builtin_presentation("s3");
  CHECK(is_coinvariant(s3->parse("b b*"), *s3));
  CHECK_FALSE(is_coinvariant(s3->letter("a"), *s3));
  CHECK(is_coinvariant(s3->parse("a a* b b*"), *s3));
}

TEST_CASE("coaction by grading equals coaction by substitution") {
  const auto s3 = builtin_presentation("s3");
  qtest::Gen gen(32);
  for (int i = 0; i < 500; ++i) {
    const NCPoly f = gen.poly(s3->alphabet(), 6);
    REQUIRE(coaction(f, *s3) == coaction_by_substitution(f, *s3));
  }
}

TEST_CASE("coassociativity and counit on every basis word of degree <= 8") {
  const auto s3 = builtin_presentation("s3");
  for (const auto& w : basis_words_upto(s3->system(), 8)) {
    const NCPoly f = NCPoly::monomial(s3->alphabet(), w);
    const HTensor d = coaction(f, *s3);
    REQUIRE(coaction_tensor_id(d, *s3) == id_tensor_coproduct(d));
    REQUIRE(id_tensor_counit(d) == f);
  }
}

TEST_CASE("coaction is multiplicative on reduced forms") {
  const auto s3 = builtin_presentation("s3");
  qtest::Gen gen(33);
  for (int i = 0; i < 300; ++i) {
    const NCPoly f = gen.poly(s3->alphabet(), 4), g = gen.poly(s3->alphabet(), 4);
    REQUIRE(coaction(f * g, *s3) == (coaction(f, *s3) * coaction(g, *s3)).reduced(*s3));
  }
}

TEST_CASE("an ungraded algebra has no coaction") {
  const auto plain = load_presentation(nlohmann::json::parse(R"({"name":"plain","letters":["s","s*"],
      "star_pairs":[["s","s*"]],"order":["s","s*"],"rules":[],"params":{"p":"1/2","q":"1/4"}})"));
  CHECK_THROWS_AS(coaction(plain->letter("s"), *plain), UngradedError);
  CHECK_THROWS_AS(coaction_by_substitution(plain->letter("s"), *plain), UngradedError);
}

TEST_CASE("express_in_base examples") {
  const auto s3 = builtin_presentation("s3");
  const auto sphere = builtin_presentation("sphere");
  CHECK(express_in_base(s3->parse("b b*")) == sphere->letter("f_0"));
  CHECK(express_in_base(s3->parse("b a")) == sphere->letter("f_1"));
  CHECK(express_in_base(s3->parse("a a*")) == sphere->parse("1 - f_0 + f_1 f_1*"));
  CHECK_THROWS_AS(express_in_base(s3->letter("a")), std::invalid_argument);
}

TEST_CASE("express_in_base is a section of iota") {
  const auto maps = StandardMaps::get();
  const auto& s3 = *maps->algebras->s3;
  // iota doubles degrees; compare in a system completed high enough.
  const auto s3_high = builtin_presentation("s3", AlgebraParams::defaults(), 12);
  qtest::Gen gen(34);
  for (int i = 0; i < 40; ++i) {
    const NCPoly f = s3.nf(gen.coinvariant(s3.alphabet(), 4, 3));
    const NCPoly g = express_in_base(f);
    REQUIRE(s3_high->nf(maps->iota.apply(g)) == s3_high->nf(f));
  }
}

TEST_CASE("projector entries lie in the image of iota for |n| <= 2") {
  StrongConnection l;
  const auto maps = StandardMaps::get();
  for (int n = -2; n <= 2; ++n) {
    const ProjectorMatrix e = projector(n, l);
    for (const auto& row : e.entries)
      for (const auto& f : row) {
        const NCPoly g = express_in_base(f);
        REQUIRE(l.reduce(maps->iota.apply(g).rebased(f.alphabet())) == l.reduce(f));
      }
  }
}
