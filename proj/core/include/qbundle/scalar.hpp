#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qbundle {

/// Exact rational coefficient. Every symbolic identity in the workbench is
/// checked over Q, so there is no floating point below the oper layer.
using Scalar = mpq_class;

/// Parses "3/4", "-2", "7". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& s);

inline double to_double(const Scalar& s) { return s.get_d(); }

/// Deformation parameters of the quantum discs. Both must lie in (0, 1).
struct AlgebraParams {
  Scalar p{1, 2};
  Scalar q{1, 4};

  static AlgebraParams defaults() { return {}; }

  /// Throws std::invalid_argument unless 0 < p < 1 and 0 < q < 1.
  void validate() const;

  /// Same parameters with p and q exchanged.
  AlgebraParams swapped() const { return {q, p}; }

  friend bool operator==(const AlgebraParams& a, const AlgebraParams& b) {
    return a.p == b.p && a.q == b.q;
  }
};

}  // namespace qbundle
