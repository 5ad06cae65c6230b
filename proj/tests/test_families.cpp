#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "skein/families.hpp"

using namespace skein;

namespace {

LaurentPoly A(int64_t e, int64_t c = 1) { return LaurentPoly::monomial(e, c); }

Tangle random_tangle(std::mt19937& rng, int max_crossings = 8) {
  std::uniform_int_distribution<int> twist(-3, 3);
  std::uniform_int_distribution<int> op(0, 3);
  Tangle t = Tangle::integer_tangle(twist(rng));
  while ((int)t.crossing_count() < max_crossings) {
    switch (op(rng)) {
      case 0: t = Tangle::sum(t, Tangle::integer_tangle(twist(rng))); break;
      case 1: t = Tangle::star(t, Tangle::integer_tangle(twist(rng))); break;
      case 2: t = t.rho(); break;
      default: return t;
    }
  }
  return t;
}

}  // namespace

TEST_CASE("brackets of C(0) and C(infinity)") {
  // <C(0)> = <H>, with the clasp contributing the -A^6 - A^-6 weight, and
  // <C(infinity)> picks up the split-delta variant.
  LaurentPoly c0 = kauffman_bracket(c_of(Tangle::zero_tangle()));
  LaurentPoly cinf = kauffman_bracket(c_of(Tangle::infinity_tangle()));
  LaurentPoly delta = A(2, -1) + A(-2, -1);
  CHECK(c0 == kauffman_bracket(h_link()));
  // Closing formula weights: <C(T)> = (-A^6-A^-6)<T^N> + (-A^4-A^-4+2)<T^D>.
  LaurentPoly wn = A(6, -1) + A(-6, -1);
  LaurentPoly wd = A(4, -1) + A(-4, -1) + A(0, 2);
  CHECK(c0 == wn * delta + wd);
  CHECK(cinf == wn + wd * delta);
}

TEST_CASE("closing formula for C(T) on random tangles") {
  std::mt19937 rng(51);
  for (int i = 0; i < 25; ++i) {
    Tangle t = random_tangle(rng);
    CHECK(kauffman_bracket(c_of(t)) == bracket_C_formula(t));
  }
}

TEST_CASE("Jones polynomial of the basic 2-sky link H") {
  Tangle zero_lr = Tangle::zero_tangle().oriented_as(OrientClass::left_right);
  LaurentPoly v = jones_polynomial(c_of(zero_lr, COrient::plus));
  CHECK(jones_to_string(v) == "t^5 + 2t^3 + t");
  CHECK(kauffman_bracket(h_link()).span() == 16);
}

TEST_CASE("U(n, m) bracket spans") {
  for (int n = 1; n <= 3; ++n)
    CHECK(kauffman_bracket(u(n, -n)).span() == 8 * n + 24);
  for (int n = 2; n <= 4; ++n)
    CHECK(kauffman_bracket(u(n, 0)).span() == 4 * n + 20);
  for (int m = 1; m <= 2; ++m)
    CHECK(kauffman_bracket(u(m + 1, -m)).span() == 8 * m + 28);
}

TEST_CASE("closed forms for TU(n, m) closures") {
  for (auto [n, m] : {std::pair{0, 0}, {1, 0}, {1, -1}, {2, 0}, {2, -2},
                      {3, -1}}) {
    Tangle t = tu(n, m);
    BracketVector v = bracket_vector(t);
    CHECK(bracket_denominator(v) == closed_form_TU_D(n, m));
    CHECK(bracket_numerator(v) == closed_form_TU_N(n, m));
  }
  // Span of the denominator-closure closed form.
  for (auto [n, m] : {std::pair{1, -1}, {2, -1}, {3, -1}, {2, -2}})
    CHECK(closed_form_TU_D(n, m).span() == 4 * n - 4 * m + 16);
  // Assembled closed form for <U(n, m)>.
  for (auto [n, m] : {std::pair{0, 2}, {0, 3}, {1, 2}, {1, 3}})
    CHECK(closed_form_U(n, m).span() == 4 * (n + m) + 27);
}

TEST_CASE("section-5 summand fractions") {
  CHECK(tangle_fraction(t_A()) ==
        TangleFraction{LaurentPoly::one(), LaurentPoly::monomial(1)});
  CHECK(tangle_fraction(t_B()) ==
        TangleFraction{LaurentPoly::monomial(1, 3), LaurentPoly::one()});
  CHECK(tangle_fraction(t_C()) ==
        TangleFraction{LaurentPoly::monomial(1, -3), LaurentPoly::one()});
  // The denominator closure of t_C is an unknot diagram.
  CHECK(kauffman_bracket(t_C().denominator()).terms().size() == 1);
}

TEST_CASE("T0(n) is Conway-invisible") {
  for (int n = 1; n <= 4; ++n) {
    TangleFraction f = t_zero_fraction(n);
    CHECK(f.num.is_zero());
    CHECK(f.den == LaurentPoly::one());
  }
  // Direct check for n = 1.
  Tangle t = t_zero(1);
  CHECK(tangle_fraction(t) == t_zero_fraction(1));
}

TEST_CASE("compositional bracket vector matches the direct one") {
  for (int n = 1; n <= 2; ++n)
    CHECK(t_zero_bracket_vector(n) == bracket_vector(t_zero(n)));
}

TEST_CASE("bracket extremes of T0(n)") {
  for (int n = 1; n <= 4; ++n) {
    BracketVector v = t_zero_bracket_vector(n);
    CHECK(v.f.leading_term() == std::pair<int64_t, BigInt>{40 * n, 1});
    CHECK(v.f.trailing_term() ==
          std::pair<int64_t, BigInt>{-52 * n, n % 2 ? -1 : 1});
    CHECK(v.g.leading_term() == std::pair<int64_t, BigInt>{40 * n - 6, -n});
    CHECK(v.g.trailing_term() ==
          std::pair<int64_t, BigInt>{-60 * n + 2, n % 2 ? 1 : -1});
  }
}

TEST_CASE("bracket span of C(1 * T0(n)) grows linearly") {
  for (int n = 1; n <= 4; ++n) {
    LaurentPoly br = js_bracket(n);
    CHECK(br.span() == 100 * n + 16);
    CHECK(br.leading_term() ==
          std::pair<int64_t, BigInt>{40 * n + 11, -1});
    CHECK(br.trailing_term() ==
          std::pair<int64_t, BigInt>{-60 * n - 5,
                                     n % 2 ? 1 : -1});
  }
  // The small case agrees with the direct diagram computation.
  CHECK(js_bracket(1) == kauffman_bracket(js_link(1)));
}

TEST_CASE("Conway polynomial cannot see the difference") {
  // Every C+-/C--closure of 1 * T0(n) has the Conway polynomial of H.
  Tangle zero_lr = Tangle::zero_tangle().oriented_as(OrientClass::left_right);
  LaurentPoly z2 = LaurentPoly::monomial(2);
  CHECK(conway_polynomial(c_of(zero_lr, COrient::plus)) == z2);
  CHECK(conway_polynomial(c_of(zero_lr, COrient::minus)) == z2);
  for (int n = 1; n <= 3; ++n) {
    CHECK(js_conway(n, COrient::plus) == z2);
    CHECK(js_conway(n, COrient::minus) == z2);
  }
  // Direct diagram check for n = 1.
  CHECK(conway_polynomial(c_of(one_star_t0(1), COrient::plus)) == z2);
}

TEST_CASE("remark 5.4 variant") {
  CHECK(remark_5_4_check());
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS(t_zero(0), std::domain_error);
  CHECK_THROWS_AS(one_star_t0(0), std::domain_error);
  CHECK_THROWS_AS(js_conway(1, COrient::unoriented), std::invalid_argument);
}
