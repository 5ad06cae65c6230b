#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "skein/laurent.hpp"

using skein::BigInt;
using skein::LaurentPoly;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int max_terms = 6) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expo(-12, 12);
  std::uniform_int_distribution<int> coeff(-9, 9);
  LaurentPoly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(expo(rng), coeff(rng));
  return p;
}

}  // namespace

TEST_CASE("constructors and canonical form") {
  CHECK(LaurentPoly().is_zero());
  CHECK(LaurentPoly::monomial(3, 0).is_zero());
  CHECK(LaurentPoly(BigInt(5)).coeff(0) == 5);
  CHECK(LaurentPoly::monomial(-2, 7).coeff(-2) == 7);

  LaurentPoly p = LaurentPoly::monomial(1) - LaurentPoly::monomial(1);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
}

TEST_CASE("leading and trailing terms, span") {
  LaurentPoly p = LaurentPoly::monomial(5, 2) + LaurentPoly::monomial(-3, -1);
  CHECK(p.leading_term() == std::pair<int64_t, BigInt>{5, 2});
  CHECK(p.trailing_term() == std::pair<int64_t, BigInt>{-3, -1});
  CHECK(p.span() == 8);
  CHECK_THROWS(LaurentPoly().leading_term());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng),
                c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a * LaurentPoly::one() == a);
  }
}

TEST_CASE("monomial_pow") {
  CHECK(LaurentPoly::monomial_pow(3, -1, 2) == LaurentPoly::monomial(6));
  CHECK(LaurentPoly::monomial_pow(3, -1, 3) == LaurentPoly::monomial(9, -1));
  CHECK(LaurentPoly::monomial_pow(3, -1, -2) == LaurentPoly::monomial(-6));
  CHECK(LaurentPoly::monomial_pow(2, 1, 0) == LaurentPoly::one());
}

TEST_CASE("invert_variable is an involution and a ring map") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK(a.invert_variable().invert_variable() == a);
    CHECK((a * b).invert_variable() ==
          a.invert_variable() * b.invert_variable());
    CHECK((a + b).invert_variable() ==
          a.invert_variable() + b.invert_variable());
  }
}

TEST_CASE("divide_exact") {
  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    auto q = (a * b).divide_exact(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  // Non-exact division reports failure.
  LaurentPoly two(BigInt(2)), three(BigInt(3));
  CHECK_FALSE(three.divide_exact(two).has_value());
}

TEST_CASE("rendering") {
  LaurentPoly p = LaurentPoly::monomial(8) + LaurentPoly(BigInt(2)) +
                  LaurentPoly::monomial(-8);
  CHECK(p.to_string("A") == "A^8 + 2 + A^-8");
  LaurentPoly j = LaurentPoly::monomial(10, -1) + LaurentPoly::monomial(2, -1);
  CHECK(j.to_string("t", /*quarter_exponents=*/true) ==
        "-t^(5/2) - t^(1/2)");
  CHECK(LaurentPoly().to_string("A") == "0");
}

TEST_CASE("big coefficients stay exact") {
  // (A + 1)^64 has a central coefficient with 19 digits.
  LaurentPoly base = LaurentPoly::monomial(1) + LaurentPoly::one();
  LaurentPoly p = LaurentPoly::one();
  for (int i = 0; i < 64; ++i) p *= base;
  BigInt expected("1832624140942590534");  // C(64, 32)
  CHECK(p.coeff(32) == expected);
  CHECK(p.span() == 64);
}
