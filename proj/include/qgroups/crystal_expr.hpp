#pragma once

// Rank-1 crystal expressions for the command line:
//
//   union   := tensor ('(+)' tensor)*
//   tensor  := unary ('(x)' unary)*
//   unary   := 'B(' INT ')' | 'T(' INT ')' | 'Binf(' INT ')'
//            | 'dual(' union ')' | '(' union ')'
//
// "(x)" is the tensor product and "(+)" the disjoint union.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "qgroups/crystal.hpp"
#include "qgroups/errors.hpp"

namespace qgroups {

namespace detail {

class CrystalExprParser {
 public:
  explicit CrystalExprParser(std::string_view src) : src_(src) {}

  Crystal parse() {
    Crystal c = parse_union();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return c;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  // Matches "(<op>)" with optional inner spaces.
  bool accept_operator(char op) {
    skip_space();
    std::size_t p = pos_;
    if (p >= src_.size() || src_[p] != '(') return false;
    ++p;
    while (p < src_.size() && src_[p] == ' ') ++p;
    if (p >= src_.size() || src_[p] != op) return false;
    ++p;
    while (p < src_.size() && src_[p] == ' ') ++p;
    if (p >= src_.size() || src_[p] != ')') return false;
    pos_ = p + 1;
    return true;
  }

  void expect(char ch) {
    skip_space();
    if (pos_ >= src_.size() || src_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer");
    }
    if (pos_ - digits > 6) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stol(std::string(src_.substr(start, pos_ - start)));
  }

  Crystal parse_union() {
    std::vector<Crystal> parts{parse_tensor()};
    while (accept_operator('+')) parts.push_back(parse_tensor());
    return parts.size() == 1 ? parts.front() : disjoint_union(parts);
  }

  Crystal parse_tensor() {
    Crystal c = parse_unary();
    while (accept_operator('x')) c = tensor(c, parse_unary());
    return c;
  }

  Crystal parse_unary() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < src_.size() && src_[pos_] == '(') {
      ++pos_;
      Crystal c = parse_union();
      expect(')');
      return c;
    }
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string name(src_.substr(start, pos_ - start));
    if (name.empty()) fail(pos_ < src_.size() ? "unexpected '" + std::string(1, src_[pos_]) + "'"
                                              : std::string("unexpected end of input"));
    expect('(');
    Crystal c;
    if (name == "dual") {
      c = dual(parse_union());
    } else {
      const std::size_t arg_pos = pos_;
      const long n = integer();
      if (name == "B") {
        if (n < 0) {
          pos_ = arg_pos;
          fail("B(n) needs n >= 0");
        }
        c = b_n(n);
      } else if (name == "T") {
        c = t_lambda(n);
      } else if (name == "Binf") {
        if (n < 0) {
          pos_ = arg_pos;
          fail("Binf(depth) needs depth >= 0");
        }
        c = b_infinity_truncated(n);
      } else {
        pos_ = start;
        fail("unknown crystal '" + name + "'");
      }
    }
    expect(')');
    return c;
  }
};

}  // namespace detail

inline Crystal parse_crystal(std::string_view text) { return detail::CrystalExprParser(text).parse(); }

}  // namespace qgroups
