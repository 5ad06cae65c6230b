#pragma once

// Text grammar for tangle and link expressions.
//
//   link   := "N(" sum ")" | "D(" sum ")"
//           | "C(" sum ")" | "C+(" sum ")" | "C-(" sum ")"
//           | sum
//   sum    := prod ('+' prod)*
//   prod   := unary ('*' unary)*
//   unary  := "neg(" sum ")" | "rho(" sum ")" | "rot(" sum ")"
//           | "(" sum ")" | atom
//   atom   := integer | "inf" | "TA" | "TB" | "TC" | "T0" [ "(" n ")" ]
//
// Whitespace-insensitive; precedence unary > '*' > '+'.  A leading '-'
// always starts a negative integer atom (there is no binary minus).
// Tangle expressions parse to unoriented tangles; callers orient as the
// operation at hand requires.  Closure forms yield link diagrams.

#include <cctype>
#include <stdexcept>
#include <string>
#include <variant>

#include "skein/families.hpp"
#include "skein/tangle.hpp"

namespace skein {

struct ExprError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  Tangle parse_all() {
    Tangle t = parse_sum();
    skip_ws();
    if (pos_ != s_.size())
      throw ExprError("trailing input at position " + std::to_string(pos_));
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c))
      throw ExprError(std::string("expected '") + c + "' " + what +
                      " at position " + std::to_string(pos_));
  }

  bool eat_word(std::string_view w) {
    skip_ws();
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    size_t end = pos_ + w.size();
    if (end < s_.size() && std::isalnum((unsigned char)s_[end]))
      return false;  // longer identifier, not this word
    pos_ = end;
    return true;
  }

  Tangle parse_sum() {
    Tangle t = parse_prod();
    while (eat('+')) t = Tangle::sum(t, parse_prod());
    return t;
  }

  Tangle parse_prod() {
    Tangle t = parse_unary();
    while (eat('*')) t = Tangle::star(t, parse_unary());
    return t;
  }

  Tangle parse_group(const char* what) {
    expect('(', what);
    Tangle t = parse_sum();
    expect(')', what);
    return t;
  }

  Tangle parse_unary() {
    if (eat_word("neg")) return parse_group("after neg").negated();
    if (eat_word("rho")) return parse_group("after rho").rho();
    if (eat_word("rot")) return parse_group("after rot").rotated90cw();
    if (eat('(')) {
      Tangle t = parse_sum();
      expect(')', "to close group");
      return t;
    }
    return parse_atom();
  }

  Tangle parse_atom() {
    skip_ws();
    if (eat_word("inf")) return Tangle::infinity_tangle();
    if (eat_word("TA")) return t_A().forget_orientation();
    if (eat_word("TB")) return t_B().forget_orientation();
    if (eat_word("TC")) return t_C().forget_orientation();
    if (eat_word("T0")) {
      int n = 1;
      size_t mark = pos_;
      if (eat('(')) {
        n = (int)parse_integer();
        if (n < 1 || !eat(')')) {
          pos_ = mark;  // not an argument list; leave for the caller
          n = 1;
        }
      }
      return t_zero(n).forget_orientation();
    }
    return Tangle::integer_tangle((int)parse_integer());
  }

  long parse_integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
    if (pos_ == digits)
      throw ExprError("expected a tangle atom at position " +
                      std::to_string(start));
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace detail

// Parse a pure tangle expression (no closure forms).
inline Tangle parse_tangle(std::string_view text) {
  return detail::ExprParser(text).parse_all();
}

using LinkExpr = std::variant<Tangle, LinkDiagram>;

// Parse a full expression: either a tangle or one of the closure forms
// N(...), D(...), C(...), C+(...), C-(...) applied to a tangle.
inline LinkExpr parse_expr(std::string_view text) {
  size_t a = text.find_first_not_of(" \t\n\r");
  size_t b = text.find_last_not_of(" \t\n\r");
  if (a == std::string_view::npos) throw ExprError("empty expression");
  std::string_view body = text.substr(a, b - a + 1);

  auto closure = [&](std::string_view head) -> std::string_view {
    if (body.size() > head.size() + 1 &&
        body.compare(0, head.size(), head) == 0 && body.back() == ')')
      return body.substr(head.size(), body.size() - head.size() - 1);
    return {};
  };

  if (auto in = closure("N("); !in.empty())
    return parse_tangle(in).numerator();
  if (auto in = closure("D("); !in.empty())
    return parse_tangle(in).denominator();
  if (auto in = closure("C+("); !in.empty())
    return c_of(parse_tangle(in).oriented_as(OrientClass::left_right),
                COrient::plus);
  if (auto in = closure("C-("); !in.empty())
    return c_of(parse_tangle(in).oriented_as(OrientClass::left_right),
                COrient::minus);
  if (auto in = closure("C("); !in.empty()) return c_of(parse_tangle(in));
  return parse_tangle(body);
}

}  // namespace skein
