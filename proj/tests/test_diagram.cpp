#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "skein/diagram.hpp"
#include "skein/tangle.hpp"

using skein::Crossing;
using skein::LinkDiagram;
using skein::Tangle;

namespace {

LinkDiagram trefoil() {
  return Tangle::integer_tangle(3).numerator();
}

LinkDiagram hopf() {
  return Tangle::integer_tangle(2).numerator();
}

LinkDiagram oriented_trefoil() {
  return Tangle::integer_tangle(3)
      .oriented_as(skein::OrientClass::left_right)
      .numerator();
}

}  // namespace

TEST_CASE("unknot and free loops") {
  CHECK(LinkDiagram::unknot().components() == 1);
  CHECK(LinkDiagram::unknot(3).components() == 3);
  CHECK(LinkDiagram::unknot().crossing_count() == 0);
}

TEST_CASE("component counts of closures") {
  CHECK(trefoil().components() == 1);
  CHECK(hopf().components() == 2);
  CHECK(Tangle::integer_tangle(4).numerator().components() == 2);
  CHECK(Tangle::integer_tangle(5).numerator().components() == 1);
  // Denominator closures of integer tangles are unknots.
  for (int k = 1; k <= 5; ++k)
    CHECK(Tangle::integer_tangle(k).denominator().components() == 1);
}

TEST_CASE("writhe and crossing signs need orientation") {
  CHECK_THROWS(trefoil().writhe());
  LinkDiagram t = oriented_trefoil();
  REQUIRE(t.oriented());
  CHECK(std::abs(t.writhe()) == 3);
  int sum = 0;
  for (size_t i = 0; i < t.crossing_count(); ++i) sum += t.crossing_sign(i);
  CHECK(sum == t.writhe());
}

TEST_CASE("mirror flips writhe, reverse_all keeps it") {
  LinkDiagram t = oriented_trefoil();
  CHECK(t.mirror().writhe() == -t.writhe());
  CHECK(t.reverse_all().writhe() == t.writhe());
  CHECK(t.mirror().mirror().canonical_key() == t.canonical_key());
}

TEST_CASE("smoothings drop one crossing") {
  LinkDiagram t = trefoil();
  auto [a, b] = t.smoothings(0);
  CHECK(a.crossing_count() == t.crossing_count() - 1);
  CHECK(b.crossing_count() == t.crossing_count() - 1);
  // The two smoothings of a trefoil crossing have different loop counts:
  // one closes off an extra circle relative to the other.
  CHECK(a.components() != b.components());
}

TEST_CASE("kink detection and removal") {
  // A numerator closure of the one-crossing tangle is a kinked unknot.
  LinkDiagram d = Tangle::one_crossing(true).numerator();
  REQUIRE(d.crossing_count() == 1);
  CHECK(d.is_kink(0));
  LinkDiagram r = d.kink_removed(0);
  CHECK(r.crossing_count() == 0);
  CHECK(r.components() == 1);
  CHECK_FALSE(trefoil().is_kink(0));
}

TEST_CASE("switching a crossing is an involution") {
  LinkDiagram t = trefoil();
  CHECK(t.with_switched_crossing(1).with_switched_crossing(1)
            .canonical_key() == t.canonical_key());
}

TEST_CASE("oriented skein triple") {
  LinkDiagram t = oriented_trefoil();
  for (size_t i = 0; i < t.crossing_count(); ++i) {
    auto s = t.oriented_skein(i);
    CHECK(s.plus.crossing_sign(i) == 1);
    CHECK(s.minus.crossing_sign(i) == -1);
    CHECK(s.zero.crossing_count() == t.crossing_count() - 1);
    CHECK(s.zero.oriented());
    // One of L+ / L- is the original diagram.
    std::string k = t.canonical_key();
    CHECK((s.plus.canonical_key() == k || s.minus.canonical_key() == k));
  }
}

TEST_CASE("connected sum adds crossing counts and preserves components") {
  LinkDiagram a = oriented_trefoil();
  LinkDiagram b = oriented_trefoil().mirror();
  int arc_a = a.crossings()[0].arc[0];
  int arc_b = b.crossings()[0].arc[0];
  LinkDiagram s = LinkDiagram::connected_sum(a, arc_a, b, arc_b);
  CHECK(s.crossing_count() == 6);
  CHECK(s.components() == 1);
  CHECK(s.oriented());
  CHECK(s.writhe() == a.writhe() + b.writhe());
}

TEST_CASE("PD round trip, unoriented and oriented") {
  for (const LinkDiagram& d :
       {trefoil(), hopf(), oriented_trefoil(),
        Tangle::integer_tangle(-4).numerator()}) {
    LinkDiagram back = LinkDiagram::parse_pd(d.render_pd());
    CHECK(back.canonical_key() == d.canonical_key());
    CHECK(back.oriented() == d.oriented());
  }
}

TEST_CASE("parse_pd rejects malformed input") {
  CHECK_THROWS_AS(LinkDiagram::parse_pd("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(LinkDiagram::parse_pd("PD sideways 0"),
                  std::invalid_argument);
  CHECK_THROWS_AS(LinkDiagram::parse_pd("PD unoriented 0\nX 1 2 3"),
                  std::invalid_argument);
  // Arc used three times.
  CHECK_THROWS_AS(
      LinkDiagram::parse_pd("PD unoriented 0\nX 1 1 1 2\nX 2 3 3 4\nX 4 5 5 6"),
      std::invalid_argument);
}

TEST_CASE("canonical key is stable under relabeling") {
  LinkDiagram t = trefoil();
  // Round-tripping through PD text relabels arcs densely.
  LinkDiagram u = LinkDiagram::parse_pd(t.render_pd());
  CHECK(u.canonical_key() == t.canonical_key());
  CHECK(t.canonical_key() != hopf().canonical_key());
  CHECK(t.canonical_key() != t.mirror().canonical_key());
}

TEST_CASE("split components and disjoint union") {
  LinkDiagram d = LinkDiagram::disjoint_union(trefoil(), hopf());
  CHECK(d.components() == 3);
  auto pieces = d.split_components();
  REQUIRE(pieces.size() == 2);
  std::multiset<size_t> sizes{pieces[0].size(), pieces[1].size()};
  CHECK(sizes == std::multiset<size_t>{2, 3});
  CHECK(d.restricted_to(pieces[0]).crossing_count() == pieces[0].size());
}

TEST_CASE("all orientations") {
  CHECK(trefoil().all_orientations().size() == 2);
  CHECK(hopf().all_orientations().size() == 4);
  for (const LinkDiagram& o : hopf().all_orientations()) {
    CHECK(o.oriented());
    CHECK(std::abs(o.writhe()) == 2);
  }
}
