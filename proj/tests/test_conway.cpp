#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "skein/conway.hpp"
#include "skein/diagram.hpp"
#include "skein/tangle.hpp"

using skein::conway_polynomial;
using skein::LaurentPoly;
using skein::LinkDiagram;
using skein::OrientClass;
using skein::Tangle;

namespace {

LaurentPoly z(int64_t e, int64_t c = 1) { return LaurentPoly::monomial(e, c); }

Tangle lr(const Tangle& t) { return t.oriented_as(OrientClass::left_right); }

bool has_closed_component(const Tangle& t) {
  return std::min(t.numerator().components(), t.denominator().components()) >
         1;
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

TEST_CASE("Conway polynomial of basic links") {
  CHECK(conway_polynomial(LinkDiagram::unknot().all_orientations().front()) ==
        LaurentPoly::one());
  // Split links have vanishing Conway polynomial.
  CHECK(conway_polynomial(LinkDiagram::unknot(2).all_orientations().front())
            .is_zero());

  LinkDiagram tref = lr(Tangle::integer_tangle(3)).numerator();
  CHECK(conway_polynomial(tref) == z(2) + z(0));
  CHECK(conway_polynomial(tref.mirror()) == z(2) + z(0));

  LinkDiagram hopf = lr(Tangle::integer_tangle(2)).numerator();
  CHECK(conway_polynomial(hopf) == z(1));
  CHECK(conway_polynomial(hopf.mirror()) == z(1, -1));
}

TEST_CASE("Conway polynomial needs an orientation") {
  CHECK_THROWS_AS(
      conway_polynomial(Tangle::integer_tangle(3).numerator()),
      std::invalid_argument);
}

TEST_CASE("orientation reversal preserves nabla") {
  std::mt19937 rng(31);
  for (int i = 0; i < 20; ++i) {
    Tangle t = random_tangle(rng);
    if (has_closed_component(t)) continue;
    Tangle o;
    try {
      o = t.oriented_as(OrientClass::left_right);
    } catch (...) {
      continue;
    }
    LinkDiagram d = o.numerator();
    CHECK(conway_polynomial(d.reverse_all()) == conway_polynomial(d));
  }
}

TEST_CASE("skein relation holds at every crossing") {
  std::mt19937 rng(32);
  int done = 0;
  while (done < 15) {
    Tangle t = random_tangle(rng, 8);
    if (has_closed_component(t)) continue;
    Tangle o;
    try {
      o = t.oriented_as(OrientClass::left_right);
    } catch (...) {
      continue;
    }
    LinkDiagram d = o.numerator();
    if (d.crossing_count() == 0) continue;
    ++done;
    for (size_t i = 0; i < d.crossing_count(); ++i) {
      auto s = d.oriented_skein(i);
      CHECK(conway_polynomial(s.plus) - conway_polynomial(s.minus) ==
            z(1) * conway_polynomial(s.zero));
    }
  }
}

TEST_CASE("connected sum multiplies nabla") {
  LinkDiagram tref = lr(Tangle::integer_tangle(3)).numerator();
  LinkDiagram hopf = lr(Tangle::integer_tangle(2)).numerator();
  LinkDiagram s = LinkDiagram::connected_sum(
      tref, tref.crossings()[0].arc[0], hopf, hopf.crossings()[0].arc[0]);
  CHECK(conway_polynomial(s) ==
        conway_polynomial(tref) * conway_polynomial(hopf));
}

TEST_CASE("torus twist closures") {
  // Numerator closures of even integer tangles are (2,2k) torus links with
  // the diagonal (antiparallel) orientation: nabla = -k z.
  for (int k = 1; k <= 4; ++k) {
    Tangle t = Tangle::integer_tangle(2 * k).oriented_as(
        OrientClass::diagonal_a);
    CHECK(conway_polynomial(t.numerator()) == z(1, -k));
    CHECK(conway_polynomial(t.denominator()) == LaurentPoly::one());
  }
}

TEST_CASE("tangle fraction of integer tangles") {
  for (int k = 1; k <= 3; ++k) {
    Tangle t = Tangle::integer_tangle(2 * k).oriented_as(
        OrientClass::diagonal_a);
    skein::TangleFraction f = skein::tangle_fraction(t);
    CHECK(f.num == z(1, -k));
    CHECK(f.den == LaurentPoly::one());
  }
}

TEST_CASE("fraction sum rule on random diagonal tangles") {
  std::mt19937 rng(33);
  int done = 0;
  while (done < 25) {
    Tangle a = random_tangle(rng, 6), b = random_tangle(rng, 6);
    if (has_closed_component(a) || has_closed_component(b)) continue;
    Tangle oa, ob, s;
    try {
      oa = a.oriented_as(OrientClass::diagonal_a);
      ob = b.oriented_as(OrientClass::diagonal_a);
      s = Tangle::sum(oa, ob);
    } catch (...) {
      continue;
    }
    if (has_closed_component(s)) continue;
    ++done;
    CHECK(skein::tangle_fraction(s) ==
          skein::fraction_sum(skein::tangle_fraction(oa),
                              skein::tangle_fraction(ob)));
  }
}

TEST_CASE("conway vector sum rule") {
  std::mt19937 rng(34);
  int done = 0;
  while (done < 25) {
    Tangle a = random_tangle(rng, 6), b = random_tangle(rng, 6);
    if (has_closed_component(a) || has_closed_component(b)) continue;
    Tangle oa, ob, s;
    try {
      oa = a.oriented_as(OrientClass::left_right);
      ob = b.oriented_as(OrientClass::left_right);
      s = Tangle::sum(oa, ob);
    } catch (...) {
      continue;
    }
    // The closed-component probe uses the (unoriented) denominator closure.
    if (has_closed_component(Tangle::sum(a, b))) continue;
    ++done;
    CHECK(skein::conway_vector(s) ==
          skein::conway_vector_sum(skein::conway_vector(oa),
                                   skein::conway_vector(ob)));
  }
}

TEST_CASE("diagonal expansion of a closure") {
  // nabla(C(T)) expands over the tangle fraction of T against the closures
  // of the zero and infinity tangles placed in the same surrounding link.
  std::mt19937 rng(35);
  Tangle zero = Tangle::zero_tangle().oriented_as(OrientClass::diagonal_a);
  int done = 0;
  while (done < 10) {
    Tangle t = random_tangle(rng, 8);
    if (has_closed_component(t)) continue;
    Tangle o;
    try {
      o = t.oriented_as(OrientClass::diagonal_a);
    } catch (...) {
      continue;
    }
    ++done;
    skein::TangleFraction f = skein::tangle_fraction(o);
    LaurentPoly n0 = conway_polynomial(zero.numerator());
    LaurentPoly ninf = conway_polynomial(zero.denominator());
    // For the bare numerator closure: L^0 = N(0), L^infinity = D(0).
    CHECK(conway_polynomial(o.numerator()) ==
          skein::diagonal_expand(f, n0, ninf));
  }
}
