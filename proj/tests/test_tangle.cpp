#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "skein/bracket.hpp"
#include "skein/tangle.hpp"

using skein::bracket_vector;
using skein::BracketVector;
using skein::kauffman_bracket;
using skein::LaurentPoly;
using skein::OrientClass;
using skein::Tangle;

namespace {

LaurentPoly delta() {
  return LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
}

Tangle random_tangle(std::mt19937& rng, int max_crossings = 10) {
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

TEST_CASE("trivial tangles and their closures") {
  Tangle zero = Tangle::zero_tangle();
  Tangle inf = Tangle::infinity_tangle();
  CHECK(zero.numerator().components() == 2);
  CHECK(zero.denominator().components() == 1);
  CHECK(inf.numerator().components() == 1);
  CHECK(inf.denominator().components() == 2);
  CHECK(bracket_vector(zero) == BracketVector{LaurentPoly::one(),
                                              LaurentPoly::zero()});
  CHECK(bracket_vector(inf) == BracketVector{LaurentPoly::zero(),
                                             LaurentPoly::one()});
}

TEST_CASE("integer tangles") {
  for (int k : {-3, -2, -1, 1, 2, 3, 4}) {
    Tangle t = Tangle::integer_tangle(k);
    CHECK(t.crossing_count() == (size_t)std::abs(k));
    // Denominator closure is an unknot (with kinks).
    CHECK(t.denominator().components() == 1);
    CHECK(kauffman_bracket(t.denominator()).terms().size() == 1);
    // Numerator closure alternates between knots and two-component links.
    CHECK(t.numerator().components() == (k % 2 == 0 ? 2 : 1));
  }
  CHECK(Tangle::integer_tangle(-2).crossings() !=
        Tangle::integer_tangle(2).crossings());
}

TEST_CASE("bracket vector reproduces closure brackets") {
  std::mt19937 rng(41);
  for (int i = 0; i < 40; ++i) {
    Tangle t = random_tangle(rng);
    BracketVector v = bracket_vector(t);
    CHECK(kauffman_bracket(t.numerator()) == skein::bracket_numerator(v));
    CHECK(kauffman_bracket(t.denominator()) == skein::bracket_denominator(v));
  }
}

TEST_CASE("bracket vector solve inverts the closure map") {
  std::mt19937 rng(42);
  for (int i = 0; i < 30; ++i) {
    Tangle t = random_tangle(rng);
    BracketVector v = bracket_vector(t);
    CHECK(skein::bracket_vector_solve(skein::bracket_numerator(v),
                                      skein::bracket_denominator(v)) == v);
  }
}

TEST_CASE("sum rule for bracket vectors") {
  std::mt19937 rng(43);
  for (int i = 0; i < 30; ++i) {
    Tangle a = random_tangle(rng, 6), b = random_tangle(rng, 6);
    CHECK(bracket_vector(Tangle::sum(a, b)) ==
          skein::bracket_vector_sum(bracket_vector(a), bracket_vector(b)));
  }
}

TEST_CASE("star rule for bracket vectors") {
  std::mt19937 rng(44);
  for (int i = 0; i < 30; ++i) {
    Tangle a = random_tangle(rng, 6), b = random_tangle(rng, 6);
    CHECK(bracket_vector(Tangle::star(a, b)) ==
          skein::bracket_vector_star(bracket_vector(a), bracket_vector(b)));
  }
}

TEST_CASE("rho and rotation swap the bracket basis") {
  std::mt19937 rng(45);
  for (int i = 0; i < 30; ++i) {
    Tangle t = random_tangle(rng);
    BracketVector v = bracket_vector(t);
    BracketVector w = skein::bracket_vector_swapped(v);
    CHECK(bracket_vector(t.rho()) == w);
    CHECK(bracket_vector(t.rotated90cw()) == w);
  }
}

TEST_CASE("rho is an involution, rotation has order four") {
  std::mt19937 rng(46);
  for (int i = 0; i < 15; ++i) {
    Tangle t = random_tangle(rng, 6);
    CHECK(bracket_vector(t.rho().rho()) == bracket_vector(t));
    Tangle r4 = t.rotated90cw().rotated90cw().rotated90cw().rotated90cw();
    CHECK(r4.numerator().canonical_key() == t.numerator().canonical_key());
  }
}

TEST_CASE("negation mirrors the bracket") {
  std::mt19937 rng(47);
  for (int i = 0; i < 20; ++i) {
    Tangle t = random_tangle(rng);
    BracketVector v = bracket_vector(t);
    BracketVector m = bracket_vector(t.negated());
    CHECK(m.f == v.f.invert_variable());
    CHECK(m.g == v.g.invert_variable());
  }
}

TEST_CASE("Reidemeister 2 cancellation") {
  std::mt19937 rng(48);
  for (int i = 0; i < 15; ++i) {
    Tangle t = random_tangle(rng, 6);
    Tangle padded = Tangle::sum(
        Tangle::sum(t, Tangle::integer_tangle(1)), Tangle::integer_tangle(-1));
    CHECK(bracket_vector(padded) == bracket_vector(t));
  }
}

TEST_CASE("orientation classes") {
  // Even integer tangles orient diagonally and left-right.
  Tangle two = Tangle::integer_tangle(2);
  CHECK_NOTHROW(two.oriented_as(OrientClass::diagonal_a));
  CHECK_NOTHROW(two.oriented_as(OrientClass::left_right));
  // Odd ones orient left-right but not diagonally.
  Tangle three = Tangle::integer_tangle(3);
  CHECK_NOTHROW(three.oriented_as(OrientClass::left_right));
  CHECK_THROWS(three.oriented_as(OrientClass::diagonal_a));
  // The infinity tangle has no left-right orientation.
  CHECK_THROWS(
      Tangle::infinity_tangle().oriented_as(OrientClass::left_right));

  // rho turns a diagonal_a tangle into the other basis role but keeps it
  // diagonal; rotation swaps diagonal_a and diagonal_b.
  Tangle d = two.oriented_as(OrientClass::diagonal_a);
  CHECK(d.rotated90cw().oclass() == OrientClass::diagonal_b);
  CHECK(d.rho().oclass() == OrientClass::diagonal_a);
}

TEST_CASE("sum refuses incoherent orientations") {
  Tangle a = Tangle::integer_tangle(2).oriented_as(OrientClass::diagonal_a);
  Tangle b = Tangle::integer_tangle(2).oriented_as(OrientClass::diagonal_b);
  CHECK_THROWS_AS(Tangle::sum(a, b), std::invalid_argument);
  CHECK_NOTHROW(Tangle::sum(a, a));
}

TEST_CASE("left-right tangles have no oriented denominator closure") {
  Tangle t = Tangle::integer_tangle(2).oriented_as(OrientClass::left_right);
  CHECK_THROWS_AS(t.denominator(), std::invalid_argument);
  CHECK_NOTHROW(t.numerator());
}

TEST_CASE("free loops contribute delta factors") {
  Tangle t = Tangle::zero_tangle();
  Tangle with_loop = Tangle::from_parts({}, t.corners(), /*free_loops=*/1);
  BracketVector v = bracket_vector(with_loop);
  CHECK(v.f == delta());
  CHECK(v.g == LaurentPoly::zero());
}
