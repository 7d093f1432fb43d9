#include "qbundle/scalar.hpp"

#include <cctype>

namespace qbundle {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class numerator(n, 10);
  mpz_class denominator(std::string(den), 10);
  if (denominator == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar out(numerator, denominator);
  out.canonicalize();
  return out;
}

std::string to_string(const Scalar& s) { return s.get_str(10); }

void AlgebraParams::validate() const {
  auto in_unit_interval = [](const Scalar& v) { return v > 0 && v < 1; };
  if (!in_unit_interval(p) || !in_unit_interval(q))
    throw std::invalid_argument("deformation parameters must satisfy 0 < p, q < 1 (got p = " + to_string(p) +
                                ", q = " + to_string(q) + ")");
}

}  // namespace qbundle
