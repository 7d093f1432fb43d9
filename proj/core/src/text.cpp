#include "qbundle/text.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace qbundle {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"), position_(position) {}

namespace {

enum class Tok { Number, Letter, Symbol, Star, Caret, Slash, LParen, RParen, Plus, Minus, Tensor, End };

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;
  std::size_t end = 0;
  std::string text;
  LetterId letter = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, AlphabetPtr alphabet, const SymbolTable& symbols, bool tensor_mode)
      : text_(text), alphabet_(std::move(alphabet)), symbols_(symbols), tensor_mode_(tensor_mode) {}

  void switch_alphabet(AlphabetPtr alphabet) {
    if (peeked_) {
      pos_ = peeked_->pos;
      peeked_.reset();
    }
    alphabet_ = std::move(alphabet);
  }

  const Token& peek() {
    if (!peeked_) peeked_ = lex();
    return *peeked_;
  }

  Token next() {
    Token t = peek();
    peeked_.reset();
    return t;
  }

  Token expect(Tok kind, const char* what) {
    Token t = next();
    if (t.kind != kind) throw ParseError(std::string("expected ") + what, t.pos);
    return t;
  }

  NCPoly sum() {
    NCPoly out(alphabet_);
    bool first = true;
    for (;;) {
      Scalar sign = 1;
      const auto& t = peek();
      if (t.kind == Tok::Plus || t.kind == Tok::Minus) {
        sign = t.kind == Tok::Minus ? -1 : 1;
        next();
      } else if (!first) {
        break;
      }
      out += sign * product();
      first = false;
    }
    return out;
  }

  NCPoly product() {
    if (!starts_factor(peek().kind)) throw ParseError("expected a term", peek().pos);
    NCPoly out = NCPoly::constant(alphabet_, 1);
    while (starts_factor(peek().kind)) out = out * factor();
    return out;
  }

  TensorTerms tensor(const AlphabetPtr& left, const AlphabetPtr& right) {
    TensorTerms out;
    bool first = true;
    for (;;) {
      switch_alphabet(left);
      Scalar sign = 1;
      const auto& t = peek();
      if (t.kind == Tok::Plus || t.kind == Tok::Minus) {
        sign = t.kind == Tok::Minus ? -1 : 1;
        next();
      } else if (!first) {
        break;
      }
      NCPoly l = sign * product();
      expect(Tok::Tensor, "'(x)'");
      switch_alphabet(right);
      NCPoly r = product();
      out.emplace_back(std::move(l), std::move(r));
      first = false;
    }
    return out;
  }

  void finish() {
    const auto& t = peek();
    if (t.kind != Tok::End) throw ParseError("unexpected '" + t.text + "'", t.pos);
  }

 private:
  static bool starts_factor(Tok k) {
    return k == Tok::Number || k == Tok::Letter || k == Tok::Symbol || k == Tok::LParen;
  }

  NCPoly factor() {
    NCPoly base = atom();
    for (;;) {
      const auto& t = peek();
      if (t.kind == Tok::Star) {
        next();
        base = base.star();
      } else if (t.kind == Tok::Caret) {
        next();
        Token e = expect(Tok::Number, "an exponent");
        const long k = std::stol(e.text);
        NCPoly p = NCPoly::constant(alphabet_, 1);
        for (long i = 0; i < k; ++i) p = p * base;
        base = std::move(p);
      } else {
        break;
      }
    }
    return base;
  }

  NCPoly atom() {
    Token t = next();
    switch (t.kind) {
      case Tok::Number: {
        Scalar value(mpz_class(t.text, 10));
        if (peek().kind == Tok::Slash) {
          next();
          Token d = expect(Tok::Number, "a denominator");
          mpz_class den(d.text, 10);
          if (den == 0) throw ParseError("zero denominator", d.pos);
          value /= Scalar(den);
        }
        return NCPoly::constant(alphabet_, value);
      }
      case Tok::Letter:
        return NCPoly::monomial(alphabet_, Word::of(t.letter));
      case Tok::Symbol:
        return NCPoly::constant(alphabet_, symbols_.find(t.text)->second);
      case Tok::LParen: {
        NCPoly inner = sum();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t.pos);
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Longest prefix of `ident` naming an unstarred letter or a symbol.
  std::optional<Token> resolve_prefix(std::string_view ident, std::size_t at) const {
    for (std::size_t len = ident.size(); len > 0; --len) {
      const auto cand = ident.substr(0, len);
      if (auto id = alphabet_->find(cand)) {
        Token t{Tok::Letter, at, at + len, std::string(cand), *id};
        return t;
      }
      if (auto it = symbols_.find(cand); it != symbols_.end()) {
        Token t{Tok::Symbol, at, at + len, std::string(cand), 0};
        return t;
      }
    }
    return std::nullopt;
  }

  Token lex() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return Token{Tok::End, start, start, "", 0};
    const char c = text_[pos_];
    if (tensor_mode_ && c == '(') {
      std::size_t k = pos_ + 1;
      while (k < text_.size() && text_[k] == ' ') ++k;
      if (k < text_.size() && text_[k] == 'x') {
        ++k;
        while (k < text_.size() && text_[k] == ' ') ++k;
        if (k < text_.size() && text_[k] == ')') {
          pos_ = k + 1;
          return Token{Tok::Tensor, start, pos_, "(x)", 0};
        }
      }
    }
    auto single = [&](Tok k) {
      ++pos_;
      return Token{k, start, pos_, std::string(1, c), 0};
    };
    switch (c) {
      case '*': return single(Tok::Star);
      case '^': return single(Tok::Caret);
      case '/': return single(Tok::Slash);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '+': return single(Tok::Plus);
      case '-': return single(Tok::Minus);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Token{Tok::Number, start, pos_, std::string(text_.substr(start, pos_ - start)), 0};
    }
    if (ident_start(c)) {
      std::size_t k = pos_;
      while (k < text_.size() && ident_char(text_[k])) ++k;
      const auto ident = text_.substr(pos_, k - pos_);
      auto t = resolve_prefix(ident, start);
      if (!t) throw ParseError("unknown identifier '" + std::string(ident) + "'", start);
      pos_ = t->end;
      return *t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

  std::string_view text_;
  AlphabetPtr alphabet_;
  const SymbolTable& symbols_;
  bool tensor_mode_;
  std::size_t pos_ = 0;
  std::optional<Token> peeked_;
};

std::string coefficient_text(const Scalar& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "(" + c.get_str() + ")";
}

}  // namespace

NCPoly parse_poly(std::string_view text, const AlphabetPtr& alphabet, const SymbolTable& symbols) {
  Parser parser(text, alphabet, symbols, false);
  NCPoly out = parser.sum();
  parser.finish();
  return out;
}

Word parse_word(std::string_view text, const AlphabetPtr& alphabet) {
  const NCPoly f = parse_poly(text, alphabet);
  if (f.size() != 1 || f.leading_coeff() != 1)
    throw ParseError("expected a single monomial word, got '" + std::string(text) + "'", 0);
  return f.leading_word();
}

std::string to_text(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) os << ' ';
    os << alphabet.name(w[i]);
    if (j - i > 1) os << '^' << (j - i);
    first = false;
    i = j;
  }
  return os.str();
}

std::string to_text(const NCPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    const bool negative = c < 0;
    const Scalar mag = negative ? Scalar(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (w.empty()) {
      os << coefficient_text(mag);
    } else {
      if (mag != 1) os << coefficient_text(mag) << ' ';
      os << to_text(w, *f.alphabet());
    }
    first = false;
  }
  return os.str();
}

TensorTerms parse_tensor(std::string_view text, const AlphabetPtr& left, const AlphabetPtr& right,
                         const SymbolTable& symbols) {
  Parser parser(text, left, symbols, true);
  auto out = parser.tensor(left, right);
  parser.finish();
  return out;
}

std::string tensor_to_text(const TensorTerms& terms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, r] : terms) {
    if (l.is_zero() || r.is_zero()) continue;
    std::string left = to_text(l);
    std::string right = r.size() > 1 ? "(" + to_text(r) + ")" : to_text(r);
    if (l.size() > 1) left = "(" + left + ")";
    const bool negative = left.front() == '-';
    if (first) {
      os << left;
    } else {
      os << (negative ? " - " : " + ") << (negative ? left.substr(1) : left);
    }
    os << " (x) " << right;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace qbundle
