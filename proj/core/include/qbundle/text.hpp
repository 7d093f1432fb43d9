#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbundle/ncpoly.hpp"

namespace qbundle {

/// Named rational constants usable inside expressions ("p", "q").
using SymbolTable = std::map<std::string, Scalar, std::less<>>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Polynomial syntax: letters are identifiers, a `*` suffix takes the
/// adjoint, `^k` is a power, juxtaposition multiplies and rational literals
/// are written `3/4`. Runs of known letters may be written without spaces
/// ("aa*", "f_1f_1*"); the longest known prefix wins.
NCPoly parse_poly(std::string_view text, const AlphabetPtr& alphabet, const SymbolTable& symbols = {});

/// Parses a single monomial word such as "a* a" or "a a*^2 b"; rejects
/// coefficients and sums.
Word parse_word(std::string_view text, const AlphabetPtr& alphabet);

/// Canonical text: terms ascending in monomial order, non-integer
/// coefficients parenthesised, repeated letters folded into powers.
/// parse_poly(to_text(f)) == f.
std::string to_text(const NCPoly& f);
std::string to_text(const Word& w, const Alphabet& alphabet);

using TensorTerms = std::vector<std::pair<NCPoly, NCPoly>>;

/// Tensor syntax `p (x) h + c q (x) k`; left legs over `left`, right legs
/// over `right`. Inside tensor text the token "(x)" is always the tensor
/// sign.
TensorTerms parse_tensor(std::string_view text, const AlphabetPtr& left, const AlphabetPtr& right,
                         const SymbolTable& symbols = {});
std::string tensor_to_text(const TensorTerms& terms);

}  // namespace qbundle
