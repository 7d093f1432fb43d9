#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "generators.hpp"
#include "qbundle/presentation.hpp"
#include "qbundle/rewrite.hpp"
#include "qbundle/text.hpp"

using namespace qbundle;

namespace {

std::set<std::string> word_texts(const std::vector<Word>& ws, const Alphabet& A) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(to_text(w, A));
  return out;
}

// The defining relations oriented but not completed.
RewriteSystem raw_system(const Presentation& p) {
  RewriteSystem sys(p.alphabet(), p.degree_cap());
  for (const auto& r : p.relations()) sys.add_rule(RewriteSystem::orient(r.poly));
  return sys;
}

}  // namespace

TEST_CASE("normal forms of the documented examples") {
  const auto disc = builtin_presentation("disc");
  CHECK(to_text(disc->nf(disc->parse("x* x"))) == "(3/4) + (1/4) x x*");
  CHECK(disc->nf(disc->parse("x* x")) == disc->parse("(1 - q) + q x x*"));

  const auto s3 = builtin_presentation("s3");
  CHECK(s3->nf(s3->one()) == s3->one());
  // (1 - q + q a a*)(1 - p + p b b*) with a a* b b* = a a* + b b* - 1
  const NCPoly expected = s3->parse("(1 - p - q) + q a a* + p b b*");
  CHECK(s3->nf(s3->parse("a* a b* b")) == expected);
  CHECK(to_text(s3->nf(s3->parse("a* a b* b"))) == "(1/4) + (1/4) a a* + (1/2) b b*");

  // Symbolic identity at other parameters.
  const AlgebraParams other{Scalar(2, 3), Scalar(1, 5)};
  const auto s3b = builtin_presentation("s3", other);
  CHECK(s3b->nf(s3b->parse("a* a b* b")) == s3b->parse("(1 - p - q) + q a a* + p b b*"));
}

TEST_CASE("completion adds the a a*^2 b b* rule") {
  const auto s3 = builtin_presentation("s3");
  const auto& sys = s3->system();
  const Word lhs = parse_word("a a*^2 b b*", s3->alphabet());
  const auto m = sys.find_match(lhs);
  REQUIRE(m.has_value());
  CHECK(sys.rules()[m->rule].lhs == lhs);
  CHECK(sys.rules()[m->rule].rhs == s3->parse("a a*^2 + a* b b* - a*"));
}

TEST_CASE("uncompleted s3 has an unresolved critical pair; completion resolves all") {
  const auto s3 = builtin_presentation("s3");
  const RewriteSystem raw = raw_system(*s3);
  bool nonzero = false;
  for (const auto& cp : raw.critical_pairs()) nonzero = nonzero || !raw.normal_form(cp.difference).is_zero();
  CHECK(nonzero);
  const RewriteSystem done = complete(raw, 8);
  CHECK(done.completed());
  for (const auto& cp : done.critical_pairs()) REQUIRE(done.normal_form(cp.difference).is_zero());
}

TEST_CASE("disc and hopf-u1 are confluent as given") {
  for (const char* name : {"disc", "hopf-u1"}) {
    const auto p = builtin_presentation(name);
    const RewriteSystem raw = raw_system(*p);
    for (const auto& cp : raw.critical_pairs()) REQUIRE(raw.normal_form(cp.difference).is_zero());
    CHECK(p->system().rules().size() == raw.rules().size());
  }
}

TEST_CASE("completion is idempotent") {
  for (const auto& name : builtin_presentation_names()) {
    const auto p = builtin_presentation(name);
    const RewriteSystem again = complete(p->system(), p->degree_cap());
    REQUIRE(again.rules().size() == p->system().rules().size());
    for (std::size_t i = 0; i < again.rules().size(); ++i) {
      REQUIRE(again.rules()[i].lhs == p->system().rules()[i].lhs);
      REQUIRE(again.rules()[i].rhs == p->system().rules()[i].rhs);
    }
  }
}

TEST_CASE("termination certificate on every rule and at insertion") {
  for (const auto& name : builtin_presentation_names()) {
    const auto p = builtin_presentation(name);
    for (const auto& r : p->system().rules())
      for (const auto& [w, c] : r.rhs.terms()) REQUIRE(w < r.lhs);
  }
  const auto s3 = builtin_presentation("s3");
  RewriteSystem sys(s3->alphabet());
  const Word small = parse_word("a", s3->alphabet());
  RewriteRule bad{small, s3->parse("a a*")};
  CHECK_THROWS_AS(sys.add_rule(bad), TerminationError);
}

TEST_CASE("every critical pair of every builtin algebra resolves at D = 8") {
  for (const auto& name : builtin_presentation_names()) {
    const auto p = builtin_presentation(name);
    for (const auto& cp : p->system().critical_pairs()) REQUIRE(p->nf(cp.difference).is_zero());
  }
}

TEST_CASE("local confluence on random words: all one-step reductions meet") {
  qtest::Gen gen(21);
  for (const char* name : {"s3", "sphere"}) {
    const auto p = builtin_presentation(name);
    for (int i = 0; i < 400; ++i) {
      const NCPoly w = NCPoly::monomial(p->alphabet(), gen.word(*p->alphabet(), gen.uniform(2, 8)));
      const NCPoly target = p->nf(w);
      for (const auto& g : p->system().single_step_reductions(w)) REQUIRE(p->nf(g) == target);
    }
  }
}

TEST_CASE("star-stability on 1000 random polynomials") {
  qtest::Gen gen(22);
  for (const char* name : {"s3", "sphere", "disc", "circle"}) {
    const auto p = builtin_presentation(name);
    for (int i = 0; i < 1000; ++i) {
      const NCPoly f = gen.poly(p->alphabet(), 8);
      REQUIRE(p->nf(star(f)) == p->nf(star(p->nf(f))));
    }
  }
}

TEST_CASE("normal form is multiplicative") {
  qtest::Gen gen(23);
  const auto s3 = builtin_presentation("s3");
  for (int i = 0; i < 500; ++i) {
    const NCPoly f = gen.poly(s3->alphabet(), 4), g = gen.poly(s3->alphabet(), 4);
    REQUIRE(s3->nf(f * g) == s3->nf(s3->nf(f) * s3->nf(g)));
    REQUIRE(s3->nf(s3->nf(f)) == s3->nf(f));
  }
}

TEST_CASE("reduction beyond 2D is refused") {
  const auto disc = builtin_presentation("disc");
  const NCPoly big = NCPoly::monomial(disc->alphabet(), parse_word("x*^17", disc->alphabet()));
  CHECK_THROWS_AS(disc->nf(big), DegreeOverflow);
}

TEST_CASE("basis words") {
  const auto s3 = builtin_presentation("s3");
  CHECK(basis_words(s3->system(), 0) == std::vector<Word>{Word()});
  CHECK(word_texts(basis_words(s3->system(), 1), *s3->alphabet()) == std::set<std::string>{"a", "a*", "b", "b*"});
  const auto disc = builtin_presentation("disc");
  CHECK(word_texts(basis_words(disc->system(), 2), *disc->alphabet()) ==
        std::set<std::string>{"x^2", "x x*", "x*^2"});
  for (int d = 0; d <= 8; ++d) REQUIRE(basis_words(s3->system(), d).size() == qtest::s3_basis_count(d));
  const std::vector<std::size_t> first{1, 4, 10, 20, 34, 52, 74};
  for (int d = 0; d < 7; ++d) CHECK(basis_words(s3->system(), d).size() == first[d]);
  CHECK_THROWS_AS(basis_words(s3->system(), 9), DegreeOverflow);
}

TEST_CASE("the sphere basis grows linearly") {
  const auto sphere = builtin_presentation("sphere");
  CHECK(basis_words(sphere->system(), 0).size() == 1);
  for (int d = 1; d <= 8; ++d) REQUIRE(basis_words(sphere->system(), d).size() == static_cast<std::size_t>(3 * d));
}

namespace {

using M2 = std::array<std::array<Scalar, 2>, 2>;

M2 mat_mul(const M2& x, const M2& y) {
  M2 z{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) z[i][j] += x[i][k] * y[k][j];
  return z;
}

M2 eval2(const NCPoly& f, const std::vector<M2>& letters) {
  M2 out{};
  for (const auto& [w, c] : f.terms()) {
    M2 acc{{{c, 0}, {0, c}}};
    for (std::size_t i = 0; i < w.size(); ++i) acc = mat_mul(acc, letters.at(w[i]));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out[i][j] += acc[i][j];
  }
  return out;
}

bool is_zero(const M2& m) { return m[0][0] == 0 && m[0][1] == 0 && m[1][0] == 0 && m[1][1] == 0; }

}  // namespace

TEST_CASE("the fiber relation is independent of the cone and gluing relations") {
  const auto sphere = builtin_presentation("sphere");
  const Scalar p = sphere->params().p, q = sphere->params().q;
  CHECK(sphere->nf(sphere->parse("f_0 f_1 - p f_1 f_0 - (1 - p) f_1")).is_zero());

  // Upper-triangular 2x2 matrices (f_1* not the adjoint of f_1) satisfying
  // cone and gluing but not the fiber relation.
  const Scalar t = (p - q) / (1 - q);
  const M2 f0{{{1, 1}, {0, 1}}};
  const M2 f1{{{1, t}, {0, 1}}};
  const M2 f1s{{{1, 0}, {0, 1}}};
  std::vector<M2> letters(sphere->alphabet()->size());
  letters[sphere->alphabet()->id("f_0")] = f0;
  letters[sphere->alphabet()->id("f_1")] = f1;
  letters[sphere->alphabet()->id("f_1*")] = f1s;
  for (const auto& r : sphere->relations()) {
    const M2 v = eval2(r.poly, letters);
    if (r.name == "fiber") {
      CHECK_FALSE(is_zero(v));
      CHECK(v[0][1] == 1 - p);
    } else {
      CHECK(is_zero(v));
    }
  }
}
