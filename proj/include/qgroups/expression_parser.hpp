#pragma once

// Recursive-descent parser shared by the scalar, U_q(sl2) and O_q(SL2)
// expression grammars.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor | factor)*      juxtaposition multiplies
//   factor  := '-' factor | primary ['^' exponent]
//   exponent:= ['-'|'+'] INT | '(' ['-'|'+'] INT ')'
//   primary := INT | ATOM | '(' expr ')'
//
// ATOMs are the generator names of the algebra, matched longest-first, so
// "EFK^-1" reads as E*F*K^-1.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgroups/errors.hpp"
#include "qgroups/qscalar.hpp"

namespace qgroups {

namespace detail {

enum class TokenKind { Number, Atom, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view src, std::vector<std::string_view> atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](std::string_view a, std::string_view b) { return a.size() > b.size(); });
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({TokenKind::Number, std::string(src.substr(i, j - i)), i});
      i = j;
      continue;
    }
    TokenKind k = TokenKind::End;
    switch (ch) {
      case '+': k = TokenKind::Plus; break;
      case '-': k = TokenKind::Minus; break;
      case '*': k = TokenKind::Star; break;
      case '/': k = TokenKind::Slash; break;
      case '^': k = TokenKind::Caret; break;
      case '(': k = TokenKind::LParen; break;
      case ')': k = TokenKind::RParen; break;
      default: break;
    }
    if (k != TokenKind::End) {
      out.push_back({k, std::string(1, ch), i});
      ++i;
      continue;
    }
    bool matched = false;
    for (auto a : atoms) {
      if (src.substr(i, a.size()) == a) {
        out.push_back({TokenKind::Atom, std::string(a), i});
        i += a.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      std::size_t j = i;
      while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
      if (j == i) j = i + 1;
      throw parse_error("unknown generator '" + std::string(src.substr(i, j - i)) + "'", i);
    }
  }
  out.push_back({TokenKind::End, "", src.size()});
  return out;
}

template <class Algebra>
class Parser {
 public:
  using value_type = typename Algebra::value_type;

  explicit Parser(std::string_view src) : tokens_(tokenize(src, Algebra::atoms())) {}

  value_type parse() {
    value_type v = expr();
    if (peek().kind != TokenKind::End) throw parse_error("unexpected '" + peek().text + "'", peek().pos);
    return v;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t at_ = 0;

  const Token& peek() const { return tokens_[at_]; }
  const Token& next() { return tokens_[at_++]; }
  bool accept(TokenKind k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }

  value_type expr() {
    value_type acc;
    bool negate = false;
    if (accept(TokenKind::Minus))
      negate = true;
    else
      accept(TokenKind::Plus);
    acc = term();
    if (negate) acc = Algebra::negate(acc);
    for (;;) {
      if (accept(TokenKind::Plus))
        acc = Algebra::add(acc, term());
      else if (accept(TokenKind::Minus))
        acc = Algebra::add(acc, Algebra::negate(term()));
      else
        return acc;
    }
  }

  static bool starts_factor(TokenKind k) {
    return k == TokenKind::Number || k == TokenKind::Atom || k == TokenKind::LParen;
  }

  value_type term() {
    value_type acc = factor();
    for (;;) {
      if (accept(TokenKind::Star)) {
        acc = Algebra::mul(acc, factor());
      } else if (peek().kind == TokenKind::Slash) {
        const std::size_t pos = next().pos;
        const value_type d = factor();
        const std::optional<QScalar> s = Algebra::as_scalar(d);
        if (!s) throw parse_error("division by a non-scalar", pos);
        if (s->is_zero()) throw parse_error("division by zero", pos);
        acc = Algebra::mul(acc, Algebra::from_scalar(s->inverse()));
      } else if (starts_factor(peek().kind)) {
        acc = Algebra::mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  value_type factor() {
    if (accept(TokenKind::Minus)) return Algebra::negate(factor());
    value_type base = primary();
    if (peek().kind != TokenKind::Caret) return base;
    const std::size_t pos = next().pos;
    const long e = exponent();
    return power(base, e, pos);
  }

  long exponent() {
    const bool paren = accept(TokenKind::LParen);
    long sign = 1;
    if (accept(TokenKind::Minus))
      sign = -1;
    else
      accept(TokenKind::Plus);
    const Token& t = peek();
    if (t.kind != TokenKind::Number) throw parse_error("expected integer exponent", t.pos);
    ++at_;
    if (t.text.size() > 6) throw parse_error("exponent too large", t.pos);
    const long e = sign * std::stol(t.text);
    if (paren && !accept(TokenKind::RParen)) throw parse_error("expected ')'", peek().pos);
    return e;
  }

  static value_type power(const value_type& base, long e, std::size_t pos) {
    value_type b = base;
    if (e < 0) {
      std::optional<value_type> inv = Algebra::inverse(base);
      if (!inv) throw parse_error("negative power of a non-invertible element", pos);
      b = *inv;
      e = -e;
    }
    value_type r = Algebra::from_scalar(QScalar(1));
    while (e > 0) {
      if (e & 1) r = Algebra::mul(r, b);
      e >>= 1;
      if (e > 0) b = Algebra::mul(b, b);
    }
    return r;
  }

  value_type primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number:
        ++at_;
        return Algebra::from_scalar(QScalar(mpz_class(t.text)));
      case TokenKind::Atom:
        ++at_;
        return Algebra::atom(t.text);
      case TokenKind::LParen: {
        ++at_;
        value_type v = expr();
        if (!accept(TokenKind::RParen)) throw parse_error("expected ')'", peek().pos);
        return v;
      }
      case TokenKind::End:
        throw parse_error("unexpected end of input", t.pos);
      default:
        throw parse_error("unexpected '" + t.text + "'", t.pos);
    }
  }
};

}  // namespace detail

/// Parses `text` in the grammar of `Algebra`.
template <class Algebra>
typename Algebra::value_type parse_expression(std::string_view text) {
  return detail::Parser<Algebra>(text).parse();
}

/// Grammar of Q(q) itself: integers, q, + - * / ^ and parentheses.
struct ScalarAlgebra {
  using value_type = QScalar;
  static std::vector<std::string_view> atoms() { return {"q"}; }
  static QScalar atom(std::string_view) { return QScalar::q(); }
  static QScalar from_scalar(const QScalar& s) { return s; }
  static QScalar add(const QScalar& a, const QScalar& b) { return a + b; }
  static QScalar mul(const QScalar& a, const QScalar& b) { return a * b; }
  static QScalar negate(const QScalar& a) { return -a; }
  static std::optional<QScalar> as_scalar(const QScalar& a) { return a; }
  static std::optional<QScalar> inverse(const QScalar& a) {
    if (a.is_zero()) return std::nullopt;
    return a.inverse();
  }
};

inline QScalar parse_scalar(std::string_view text) { return parse_expression<ScalarAlgebra>(text); }

/// Renders a linear combination as "c1*m1 + c2*m2 - ...", with
/// `monomial_text` returning "1" for the unit monomial.
template <class Combination, class MonomialText>
std::string render_combination(const Combination& x, MonomialText&& monomial_text) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x) {
    const bool negative = c.renders_negative();
    const QScalar mag = negative ? -c : c;
    const std::string ms = monomial_text(m);
    std::string body;
    if (mag.is_one()) {
      body = ms;
    } else {
      body = mag.is_atomic() ? mag.to_string() : "(" + mag.to_string() + ")";
      if (ms != "1") body += "*" + ms;
    }
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace qgroups
