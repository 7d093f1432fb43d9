#include <doctest.h>

#include "generators.hpp"
#include "qbundle/ncpoly.hpp"
#include "qbundle/presentation.hpp"
#include "qbundle/text.hpp"

using namespace qbundle;

namespace {

AlphabetPtr s3_letters() { return builtin_presentation("s3")->alphabet(); }

bool no_zero_coefficients(const NCPoly& f) {
  for (const auto& [w, c] : f.terms())
    if (c == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("add: identity, inverse and the disc right-hand side") {
  const auto disc = builtin_presentation("disc");
  const NCPoly x = disc->letter("x");
  CHECK(x + disc->zero() == x);
  const NCPoly xsx = disc->parse("x* x");
  CHECK((xsx + Scalar(-1) * xsx).is_zero());
  const NCPoly rhs = Scalar(1, 4) * disc->parse("x x*") + Scalar(3, 4) * disc->one();
  CHECK(to_text(rhs) == "(3/4) + (1/4) x x*");
  CHECK(rhs == disc->parse("q x x* + (1 - q)"));
}

TEST_CASE("mul: unit, concatenation, no reduction") {
  const auto A = s3_letters();
  const NCPoly a = NCPoly::letter(A, "a");
  const NCPoly b = NCPoly::letter(A, "b");
  CHECK(NCPoly::constant(A, 1) * a == a);
  CHECK(to_text(a * b) == "a b");
  const NCPoly prod = mul(a + b, a - b);
  CHECK(prod.size() == 4);
  CHECK(prod == parse_poly("a^2 - a b + b a - b^2", A));
}

TEST_CASE("star: antiautomorphism and involution") {
  const auto A = s3_letters();
  CHECK(to_text(star(parse_poly("a b", A))) == "b* a*");
  const auto sphere = builtin_presentation("sphere");
  CHECK(star(star(sphere->letter("f_1"))) == sphere->letter("f_1"));
  CHECK(star(sphere->letter("f_0")) == sphere->letter("f_0"));
}

TEST_CASE("ring axioms on random triples agree with the reference arithmetic") {
  qtest::Gen gen(11);
  const auto A = s3_letters();
  for (int i = 0; i < 1000; ++i) {
    const NCPoly f = gen.poly(A, 3), g = gen.poly(A, 3), h = gen.poly(A, 3);
    REQUIRE((f * g) * h == f * (g * h));
    REQUIRE(f * (g + h) == f * g + f * h);
    REQUIRE((f + g) * h == f * h + g * h);
    REQUIRE(f + g == g + f);
    REQUIRE(qtest::to_oracle(f * g) == qtest::oracle_mul(qtest::to_oracle(f), qtest::to_oracle(g)));
    REQUIRE(qtest::to_oracle(f + g) == qtest::oracle_add(qtest::to_oracle(f), qtest::to_oracle(g)));
    REQUIRE(no_zero_coefficients(f * g));
    REQUIRE(no_zero_coefficients(f + g - g));
    REQUIRE(no_zero_coefficients(f - f));
  }
}

TEST_CASE("star reverses products on 1000 random pairs") {
  qtest::Gen gen(12);
  const auto A = s3_letters();
  for (int i = 0; i < 1000; ++i) {
    const NCPoly f = gen.poly(A, 4), g = gen.poly(A, 4);
    REQUIRE(star(f * g) == star(g) * star(f));
    REQUIRE(star(star(f)) == f);
    REQUIRE(qtest::to_oracle(star(f)) == qtest::oracle_star(qtest::to_oracle(f), *A));
  }
}

TEST_CASE("parse and print round-trip") {
  qtest::Gen gen(13);
  for (const char* name : {"s3", "sphere", "disc", "circle"}) {
    const auto A = builtin_presentation(name)->alphabet();
    for (int i = 0; i < 300; ++i) {
      const NCPoly f = gen.poly(A, 5, 5);
      REQUIRE(parse_poly(to_text(f), A) == f);
    }
  }
  const auto A = s3_letters();
  CHECK(parse_poly("aa*", A) == parse_poly("a a*", A));
  CHECK(parse_poly("a*^2", A) == parse_poly("a* a*", A));
  CHECK(to_text(NCPoly(A)) == "0");
}

TEST_CASE("parse errors carry a position") {
  const auto A = s3_letters();
  try {
    parse_poly("a + + b", A);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_poly("a c", A), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0", A), std::exception);
}

TEST_CASE("foreign alphabets are rejected") {
  const NCPoly a = NCPoly::letter(s3_letters(), "a");
  const NCPoly x = builtin_presentation("disc")->letter("x");
  CHECK_THROWS_AS(a + x, AlphabetMismatch);
}
