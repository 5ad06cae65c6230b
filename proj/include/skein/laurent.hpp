#pragma once

// Exact single-variable Laurent polynomials over arbitrary-precision integers.
// Values are immutable in spirit: every operation returns a new polynomial in
// canonical form (no zero coefficients stored), so structural equality is
// mathematical equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace skein {

using BigInt = boost::multiprecision::cpp_int;

class LaurentPoly {
 public:
  using Terms = std::map<int64_t, BigInt>;

  LaurentPoly() = default;

  explicit LaurentPoly(BigInt constant) {
    if (constant != 0) terms_[0] = std::move(constant);
  }

  LaurentPoly(int64_t value) : LaurentPoly(BigInt(value)) {}

  static LaurentPoly monomial(int64_t exponent, BigInt coeff = 1) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exponent] = std::move(coeff);
    return p;
  }

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(BigInt(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coeff(int64_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  // (c * x^e)^k, defined for negative k only when |c| == 1.
  static LaurentPoly monomial_pow(int64_t base_exp, BigInt coeff, int64_t k) {
    if (k < 0 && coeff != 1 && coeff != -1)
      throw std::domain_error(
          "monomial_pow: negative power of a non-unit coefficient");
    BigInt c = (k % 2 == 0) ? BigInt(1) : coeff;  // |coeff| == 1 when k < 0
    if (k >= 0) {
      c = 1;
      for (int64_t i = 0; i < k; ++i) c *= coeff;
    }
    return monomial(base_exp * k, c);
  }

  // Substitute x -> x^-1 (mirror).
  LaurentPoly invert_variable() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  // Substitute x -> x^s for a nonzero integer stretch s (used for A = q^-1
  // and for rendering q-exponents as quarters of t).
  LaurentPoly stretch(int64_t s) const {
    if (s == 0) throw std::domain_error("stretch: zero scale");
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e * s] = c;
    return r;
  }

  std::pair<int64_t, BigInt> leading_term() const {
    require_nonzero("leading_term");
    auto it = terms_.rbegin();
    return {it->first, it->second};
  }

  std::pair<int64_t, BigInt> trailing_term() const {
    require_nonzero("trailing_term");
    auto it = terms_.begin();
    return {it->first, it->second};
  }

  int64_t span() const {
    require_nonzero("span");
    return terms_.rbegin()->first - terms_.begin()->first;
  }

  // Exact division; nullopt when the divisor does not divide exactly.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("divide_exact: by zero");
    LaurentPoly rem = *this;
    LaurentPoly quot;
    auto [de, dc] = divisor.leading_term();
    while (!rem.is_zero()) {
      auto [re, rc] = rem.leading_term();
      if (rc % dc != 0) return std::nullopt;
      LaurentPoly t = monomial(re - de, rc / dc);
      quot += t;
      rem -= t * divisor;
      if (!rem.is_zero() && rem.leading_term().first >= re) return std::nullopt;
    }
    return quot;
  }

  // Text form like "A^8 + 2 + A^-8", descending exponents. When
  // quarter_exponents is set the exponents are printed as exact quarters,
  // e.g. q^10 with variable "t" prints as t^(5/2).
  std::string to_string(const std::string& var = "A",
                        bool quarter_exponents = false) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) out << "-";
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      if (e == 0) {
        out << mag.str();
      } else {
        if (mag != 1) out << mag.str();
        out << var;
        if (quarter_exponents) {
          int64_t q = e;
          if (q % 4 == 0) {
            if (q / 4 != 1) out << "^" << q / 4;
          } else if (q % 2 == 0) {
            out << "^(" << q / 2 << "/2)";
          } else {
            out << "^(" << q << "/4)";
          }
        } else if (e != 1) {
          out << "^" << e;
        }
      }
    }
    return out.str();
  }

  // JSON: [[exponent, "coefficient"], ...] sorted by descending exponent.
  std::string to_json() const {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) out << ",";
      first = false;
      out << "[" << it->first << ",\"" << it->second.str() << "\"]";
    }
    out << "]";
    return out.str();
  }

 private:
  void add_term(int64_t e, const BigInt& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else if (it->second == 0) {
      terms_.erase(it);
    }
  }

  void require_nonzero(const char* who) const {
    if (terms_.empty())
      throw std::domain_error(std::string(who) + ": zero polynomial");
  }

  Terms terms_;
};

// delta = -A^2 - A^-2, the bracket value of an extra disjoint circle.
inline const LaurentPoly& bracket_delta() {
  static const LaurentPoly d =
      LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
  return d;
}

}  // namespace skein
