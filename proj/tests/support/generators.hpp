#pragma once

// Hand-rolled generators and small independent oracles shared by the unit
// and acceptance tests.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qbundle/ncpoly.hpp"
#include "qbundle/presentation.hpp"

namespace qtest {

using qbundle::AlphabetPtr;
using qbundle::NCPoly;
using qbundle::Scalar;
using qbundle::Word;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  // Small nonzero rational, numerator in [-5,5], denominator in [1,6].
  Scalar coeff() {
    int n = 0;
    while (n == 0) n = uniform(-5, 5);
    Scalar c(n, uniform(1, 6));
    c.canonicalize();
    return c;
  }

  Word word(const qbundle::Alphabet& alphabet, int length) {
    std::string ids;
    for (int i = 0; i < length; ++i) ids.push_back(static_cast<char>(uniform(0, static_cast<int>(alphabet.size()) - 1)));
    return Word(ids);
  }

  NCPoly poly(const AlphabetPtr& alphabet, int max_degree, int max_terms = 4) {
    NCPoly f(alphabet);
    const int terms = uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) f.add_term(word(*alphabet, uniform(0, max_degree)), coeff());
    return f;
  }

  // Random element of winding degree 0 (graded alphabets only).
  NCPoly coinvariant(const AlphabetPtr& alphabet, int max_degree, int max_terms = 4) {
    NCPoly f(alphabet);
    while (f.is_zero()) f = poly(alphabet, max_degree, max_terms + 2).homogeneous_part(0);
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

// Reference free-algebra arithmetic on letter-name sequences, kept apart
// from NCPoly so ring identities can be checked against it.
using OracleWord = std::vector<std::string>;
using OraclePoly = std::map<OracleWord, Scalar>;

inline OraclePoly to_oracle(const NCPoly& f) {
  OraclePoly out;
  for (const auto& [w, c] : f.terms()) {
    OracleWord ow;
    for (std::size_t i = 0; i < w.size(); ++i) ow.push_back(f.alphabet()->name(w[i]));
    out[ow] = c;
  }
  return out;
}

inline void oracle_add_term(OraclePoly& f, const OracleWord& w, const Scalar& c) {
  Scalar& slot = f[w];
  slot += c;
  if (slot == 0) f.erase(w);
}

inline OraclePoly oracle_mul(const OraclePoly& f, const OraclePoly& g) {
  OraclePoly out;
  for (const auto& [u, c] : f)
    for (const auto& [v, d] : g) {
      OracleWord w = u;
      w.insert(w.end(), v.begin(), v.end());
      oracle_add_term(out, w, c * d);
    }
  return out;
}

inline OraclePoly oracle_add(const OraclePoly& f, const OraclePoly& g) {
  OraclePoly out = f;
  for (const auto& [w, c] : g) oracle_add_term(out, w, c);
  return out;
}

// Star of a letter name: "a" <-> "a*"; self-adjoint names are fixed.
inline std::string oracle_star_name(const std::string& n, const qbundle::Alphabet& alphabet) {
  if (n.ends_with("*")) return n.substr(0, n.size() - 1);
  return alphabet.find(n + "*") ? n + "*" : n;
}

inline OraclePoly oracle_star(const OraclePoly& f, const qbundle::Alphabet& alphabet) {
  OraclePoly out;
  for (const auto& [w, c] : f) {
    OracleWord r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(oracle_star_name(*it, alphabet));
    oracle_add_term(out, r, c);
  }
  return out;
}

// Number of normal words of exact degree d for the 3-sphere: monomials
// a^i a*^j b^k b*^l, minus those carrying both an a a* and a b b* block.
inline std::size_t s3_basis_count(int d) {
  auto choose3 = [](long n) { return n < 3 ? 0L : n * (n - 1) * (n - 2) / 6; };
  return static_cast<std::size_t>(choose3(d + 3) - choose3(d - 1));
}

}  // namespace qtest
