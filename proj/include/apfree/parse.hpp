#pragma once

// Parser for exact numeric input. Grammar:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | primary
//   primary := INTEGER | 'sqrt' '(' expr ')' | '(' expr ')'
//
// so "3/4", "-2", "sqrt(2)/10", "(1+sqrt(5))/2" all read exactly. Decimal
// points are rejected by design: every accepted literal is exact.

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "certified_real.hpp"
#include "rational.hpp"

namespace apfree {

namespace detail {

class exact_parser {
 public:
  explicit exact_parser(std::string_view text) : s_(text) {}

  certified_real run() {
    certified_real v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

 private:
  certified_real expr() {
    certified_real v = term();
    for (;;) {
      skip_ws();
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  certified_real term() {
    certified_real v = unary();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        certified_real d = unary();
        if (d.sign() == 0) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  certified_real unary() {
    skip_ws();
    if (eat('-')) return -unary();
    return primary();
  }

  certified_real primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      certified_real v = expr();
      skip_ws();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (s_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      skip_ws();
      if (!eat('(')) fail("sqrt requires parentheses");
      certified_real arg = expr();
      skip_ws();
      if (!eat(')')) fail("missing ')' after sqrt argument");
      if (!arg.is_rational())
        fail("sqrt argument must be rational (nested radicals unsupported)");
      if (arg.as_rational().sign() < 0) fail("sqrt of negative value");
      return certified_real::sqrt_rational(arg.as_rational());
    }
    if (c == '.') fail("decimal literals are not accepted; use exact fractions");
    fail(std::string("unexpected character '") + c + "'");
  }

  certified_real number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '.')
      fail("decimal literals are not accepted; use exact fractions");
    return certified_real(rational(parse_integer(s_.substr(start, pos_ - start))));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + " in \"" +
                                std::string(s_) + "\": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline certified_real parse_exact(std::string_view text) {
  return detail::exact_parser(text).run();
}

inline rational parse_rational(std::string_view text) {
  certified_real v = parse_exact(text);
  if (!v.is_rational())
    throw std::invalid_argument("expected a rational value, got \"" + std::string(text) + "\"");
  return v.as_rational();
}

// A point is either a single expression or a tuple "(e1,e2,...)" whose outer
// parentheses span the whole string. "(1+sqrt(5))/2" is a scalar (the group
// does not reach the end); "(1/2, 1/2)" is a 2-vector.
inline std::vector<certified_real> parse_point(std::string_view text) {
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  std::string_view s = text.substr(a, b - a);
  if (!s.empty() && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    std::vector<std::size_t> commas;
    bool spans = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      else if (s[i] == ')') {
        --depth;
        if (depth == 0 && i + 1 != s.size()) { spans = false; break; }
      } else if (s[i] == ',' && depth == 1) {
        commas.push_back(i);
      }
    }
    if (spans && !commas.empty()) {
      std::vector<certified_real> out;
      std::size_t start = 1;
      commas.push_back(s.size() - 1);
      for (std::size_t c : commas) {
        out.push_back(parse_exact(s.substr(start, c - start)));
        start = c + 1;
      }
      return out;
    }
  }
  return {parse_exact(s)};
}

}  // namespace apfree
