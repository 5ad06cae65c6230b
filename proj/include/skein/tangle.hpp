#pragma once

// 2-string tangles: four-ended pieces of link diagrams with corners NW, NE,
// SW, SE, together with the composition calculus (sum, star, rho, rotation,
// negation, closures) and the two vector invariants:
//
//  * bracket vector br(T) = (f, g) with <L^T> = f <L^0> + g <L^infinity>;
//  * Conway vector con(T) = (p, q) with nabla(L^T) = p nabla(L(0))
//    + q nabla(L(1)) for left-right oriented T;
//  * tangle fraction F(T) = nabla(T^N) / nabla(T^D) for diagonally
//    oriented T, kept unreduced.
//
// Orientation classes: a left-right tangle flows in at NW and SW; a
// diagonal tangle flows in at NW and SE (class A) or at NE and SW (class B).

#include <array>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "skein/bracket.hpp"
#include "skein/conway.hpp"
#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

namespace skein {

enum class OrientClass { none, left_right, diagonal_a, diagonal_b };

enum Corner : int { NW = 0, NE = 1, SW = 2, SE = 3 };

inline std::array<bool, 4> in_corners(OrientClass c) {
  switch (c) {
    case OrientClass::left_right:
      return {true, false, true, false};  // NW, SW
    case OrientClass::diagonal_a:
      return {true, false, false, true};  // NW, SE
    case OrientClass::diagonal_b:
      return {false, true, true, false};  // NE, SW
    default:
      throw std::logic_error("in_corners: unoriented");
  }
}

class Tangle {
 public:
  Tangle() : corners_{0, 0, 1, 1} {}  // the 0 tangle

  static Tangle zero_tangle() { return Tangle(); }

  static Tangle infinity_tangle() {
    Tangle t;
    t.corners_ = {0, 1, 0, 1};
    return t;
  }

  // Single positive crossing (positive as a left-right oriented tangle):
  // tuple (SW, SE, NE, NW) counterclockwise with under-strand SW-NE.
  static Tangle one_crossing(bool positive) {
    Tangle t;
    t.crossings_ = {Crossing{{0, 1, 2, 3}}};
    if (!positive) t.crossings_[0].arc = {1, 2, 3, 0};
    t.corners_ = {3, 2, 0, 1};
    return t;
  }

  // Horizontal twist chain of |k| crossings, sign of k.
  static Tangle integer_tangle(int k) {
    if (k == 0) return zero_tangle();
    Tangle t = one_crossing(k > 0);
    for (int i = 1; i < std::abs(k); ++i) t = sum(t, one_crossing(k > 0));
    return t;
  }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int free_loops() const { return free_loops_; }
  const std::array<int, 4>& corners() const { return corners_; }
  bool over_in_3(size_t i) const { return over_in_3_.at(i); }

  // Raw assembly of a tangle from parts (labels must form a valid tangle).
  static Tangle from_parts(std::vector<Crossing> crossings,
                           std::array<int, 4> corners, int free_loops = 0) {
    Tangle t;
    t.crossings_ = std::move(crossings);
    t.corners_ = corners;
    t.free_loops_ = free_loops;
    t.validate();
    return t;
  }

  int max_arc_label() const { return max_label(); }
  OrientClass oclass() const { return oclass_; }
  bool oriented() const { return oclass_ != OrientClass::none; }
  size_t crossing_count() const { return crossings_.size(); }

  Tangle forget_orientation() const {
    Tangle t = *this;
    t.oclass_ = OrientClass::none;
    t.over_in_3_.clear();
    return t;
  }

  // --- composition -------------------------------------------------------

  // Horizontal composition: U to the right of T (glue T.NE-U.NW, T.SE-U.SW).
  static Tangle sum(const Tangle& a, const Tangle& b) {
    Tangle t = glued(a, b, {{{NE, NW}, {SE, SW}}},
                     {{{0, NW}, {1, NE}, {0, SW}, {1, SE}}});
    if (a.oriented() && b.oriented()) {
      if (a.oclass_ != b.oclass_)
        throw std::invalid_argument("sum: incoherent orientations");
      t = t.oriented_as(a.oclass_);
    }
    return t;
  }

  // Vertical composition: U below T (glue T.SW-U.NW, T.SE-U.NE).
  static Tangle star(const Tangle& a, const Tangle& b) {
    Tangle t = glued(a, b, {{{SW, NW}, {SE, NE}}},
                     {{{0, NW}, {0, NE}, {1, SW}, {1, SE}}});
    if (a.oriented() && b.oriented()) {
      OrientClass out;
      if (a.oclass_ == OrientClass::left_right &&
          b.oclass_ == OrientClass::diagonal_b)
        out = OrientClass::left_right;
      else if (a.oclass_ == OrientClass::diagonal_b &&
               b.oclass_ == OrientClass::diagonal_b)
        out = OrientClass::diagonal_b;
      else if (a.oclass_ == OrientClass::diagonal_a &&
               b.oclass_ == OrientClass::diagonal_a)
        out = OrientClass::diagonal_a;
      else
        throw std::invalid_argument("star: incoherent orientations");
      t = t.oriented_as(out);
    }
    return t;
  }

  // Mirror: switch every crossing (this is the tangle -T).
  Tangle negated() const {
    Tangle t = forget_orientation();
    for (auto& c : t.crossings_) {
      auto& v = c.arc;
      v = {v[1], v[2], v[3], v[0]};
    }
    return reorient_like(t, oclass_);
  }

  // Reflection across the NW-SE axis followed by switching all crossings
  // (equivalently: rotate the tangle in space about that axis). Swaps the
  // NE and SW corners; each tuple reverses its cyclic order and switches.
  Tangle rho() const {
    Tangle t = forget_orientation();
    std::swap(t.corners_[NE], t.corners_[SW]);
    for (auto& c : t.crossings_) {
      auto& v = c.arc;
      v = {v[3], v[2], v[1], v[0]};
    }
    OrientClass out = oclass_;
    if (oclass_ == OrientClass::left_right) out = OrientClass::none;
    return reorient_like(t, out);
  }

  // Rotate the tangle 90 degrees clockwise in the plane.
  Tangle rotated90cw() const {
    Tangle t = forget_orientation();
    t.corners_ = {corners_[SW], corners_[NW], corners_[SE], corners_[NE]};
    OrientClass out = OrientClass::none;
    if (oclass_ == OrientClass::diagonal_a) out = OrientClass::diagonal_b;
    if (oclass_ == OrientClass::diagonal_b) out = OrientClass::diagonal_a;
    return reorient_like(t, out);
  }

  // --- closures -----------------------------------------------------------

  // Numerator closure: arcs joining NW-NE and SW-SE. Keeps orientation
  // (coherent for every orientation class).
  LinkDiagram numerator() const {
    return closed({{{NW, NE}, {SW, SE}}});
  }

  // Denominator closure: arcs joining NW-SW and NE-SE. Incoherent for
  // left-right oriented tangles.
  LinkDiagram denominator() const {
    if (oclass_ == OrientClass::left_right)
      throw std::invalid_argument(
          "denominator: left-right tangles have no oriented denominator "
          "closure");
    return closed({{{NW, SW}, {NE, SE}}});
  }

  // --- orientation --------------------------------------------------------

  // Rebuild orientation data for the requested class by propagating flow
  // from the inbound corners; throws when the strands do not support it.
  Tangle oriented_as(OrientClass cls) const;

  // --- reduction hooks used by the bracket-vector engine ------------------

  Tangle smoothed(size_t i, bool a_type) const {
    const auto& t = crossings_.at(i).arc;
    Tangle d = forget_orientation();
    d.crossings_.erase(d.crossings_.begin() + i);
    if (a_type)
      d.join_pairs({{t[0], t[1]}, {t[2], t[3]}});
    else
      d.join_pairs({{t[0], t[3]}, {t[1], t[2]}});
    return d;
  }

  bool is_kink(size_t i) const {
    const auto& t = crossings_.at(i).arc;
    return t[0] == t[1] || t[1] == t[2] || t[2] == t[3] || t[3] == t[0];
  }

  Tangle with_loops_cleared() const {
    Tangle t = *this;
    t.free_loops_ = 0;
    return t;
  }

  // Keep only the crossings at the given indices (corners unchanged).
  Tangle restricted(const std::vector<size_t>& keep) const {
    Tangle t = forget_orientation();
    t.crossings_.clear();
    for (size_t i : keep) t.crossings_.push_back(crossings_[i]);
    t.free_loops_ = 0;
    return t;
  }

  // Canonical memo key; corner-anchored so no seed minimization is needed.
  std::string canonical_key() const;

  void validate() const {
    std::map<int, int> count;
    for (const auto& c : crossings_)
      for (int a : c.arc) ++count[a];
    for (int c : corners_) ++count[c];
    for (const auto& [a, n] : count)
      if (n != 2)
        throw std::invalid_argument("tangle: arc " + std::to_string(a) +
                                    " has " + std::to_string(n) + " ends");
  }

 private:
  static Tangle reorient_like(Tangle t, OrientClass cls) {
    return cls == OrientClass::none ? t : t.oriented_as(cls);
  }

  // Replace label `from` with `to` across crossings and corners.
  void substitute(int from, int to) {
    for (auto& c : crossings_)
      for (int& v : c.arc)
        if (v == from) v = to;
    for (int& v : corners_)
      if (v == from) v = to;
  }

  void join_pairs(std::vector<std::pair<int, int>> pairs) {
    for (size_t k = 0; k < pairs.size(); ++k) {
      auto [p, q] = pairs[k];
      if (p == q) {
        ++free_loops_;
        continue;
      }
      substitute(q, p);
      for (size_t j = k + 1; j < pairs.size(); ++j) {
        if (pairs[j].first == q) pairs[j].first = p;
        if (pairs[j].second == q) pairs[j].second = p;
      }
    }
  }

  int max_label() const {
    int m = -1;
    for (const auto& c : crossings_)
      for (int v : c.arc) m = std::max(m, v);
    for (int v : corners_) m = std::max(m, v);
    return m;
  }

  // Glue two corner pairs of (a, b); result corner k comes from
  // result_corners[k] = (tangle index, corner of that tangle).
  static Tangle glued(const Tangle& a, const Tangle& b,
                      std::array<std::array<int, 2>, 2> glue,
                      std::array<std::array<int, 2>, 4> result_corners) {
    Tangle x = a.forget_orientation();
    Tangle y = b.forget_orientation();
    int shift = x.max_label() + 1;
    for (auto& c : y.crossings_)
      for (int& v : c.arc) v += shift;
    for (int& v : y.corners_) v += shift;

    // Work on a combined scratch tangle whose corner array tracks both.
    Tangle r;
    r.crossings_ = x.crossings_;
    r.crossings_.insert(r.crossings_.end(), y.crossings_.begin(),
                        y.crossings_.end());
    r.free_loops_ = x.free_loops_ + y.free_loops_;
    std::array<std::array<int, 4>, 2> corner_of = {x.corners_, y.corners_};

    for (auto [ca, cb] : glue) {
      int p = corner_of[0][ca];
      int q = corner_of[1][cb];
      if (p == q) {
        ++r.free_loops_;
        continue;
      }
      for (auto& c : r.crossings_)
        for (int& v : c.arc)
          if (v == q) v = p;
      for (auto& cc : corner_of)
        for (int& v : cc)
          if (v == q) v = p;
    }
    for (int k = 0; k < 4; ++k)
      r.corners_[k] = corner_of[result_corners[k][0]][result_corners[k][1]];
    r.validate();
    return r;
  }

  LinkDiagram closed(std::array<std::pair<int, int>, 2> corner_joins) const {
    LinkDiagram d;
    d.crossings_ = crossings_;
    d.over_in_3_.assign(over_in_3_.begin(), over_in_3_.end());
    d.free_loops_ = free_loops_;
    d.oriented_hint_ = oriented();
    std::vector<std::pair<int, int>> joins;
    for (auto [u, v] : corner_joins)
      joins.emplace_back(corners_[u], corners_[v]);
    // A corner-to-corner arc that both joins touch closes a circle; the
    // shared-label bookkeeping below mirrors join_pairs.
    for (size_t k = 0; k < joins.size(); ++k) {
      auto [p, q] = joins[k];
      if (p == q) {
        ++d.free_loops_;
        continue;
      }
      for (auto& c : d.crossings_)
        for (int& w : c.arc)
          if (w == q) w = p;
      for (size_t j = k + 1; j < joins.size(); ++j) {
        if (joins[j].first == q) joins[j].first = p;
        if (joins[j].second == q) joins[j].second = p;
      }
    }
    d.validate();
    return d;
  }

  std::vector<Crossing> crossings_;
  std::vector<bool> over_in_3_;
  int free_loops_ = 0;
  std::array<int, 4> corners_;
  OrientClass oclass_ = OrientClass::none;
};

inline Tangle Tangle::oriented_as(OrientClass cls) const {
  if (cls == OrientClass::none) return forget_orientation();
  Tangle t = forget_orientation();
  auto ins = in_corners(cls);

  // Occurrences: (crossing, slot) plus corners encoded as (-1, corner).
  std::map<int, std::vector<std::pair<int, int>>> occ;
  for (size_t i = 0; i < t.crossings_.size(); ++i)
    for (int p = 0; p < 4; ++p)
      occ[t.crossings_[i].arc[p]].push_back({static_cast<int>(i), p});
  for (int k = 0; k < 4; ++k) occ[t.corners_[k]].push_back({-1, k});

  std::map<std::pair<int, int>, bool> incoming;  // crossing slots only
  std::set<std::pair<int, int>> visited;

  auto other_occ = [&](int label, std::pair<int, int> self) {
    const auto& v = occ.at(label);
    if (v.size() != 2) throw std::logic_error("oriented_as: bad arc");
    return v[0] == self ? v[1] : v[0];
  };

  // Open strands from each inbound corner.
  for (int k = 0; k < 4; ++k) {
    if (!ins[k]) continue;
    std::pair<int, int> cur = other_occ(t.corners_[k], {-1, k});
    while (cur.first >= 0) {
      if (visited.count(cur))
        throw std::invalid_argument("oriented_as: strands incompatible");
      visited.insert(cur);
      incoming[cur] = true;
      std::pair<int, int> exit = {cur.first, (cur.second + 2) % 4};
      visited.insert(exit);
      incoming[exit] = false;
      int label = t.crossings_[cur.first].arc[exit.second];
      cur = other_occ(label, exit);
    }
    if (ins[cur.second])
      throw std::invalid_argument("oriented_as: strand ends at an in-corner");
  }

  // Closed components: orient along the walk from the lowest unvisited slot.
  for (size_t i = 0; i < t.crossings_.size(); ++i)
    for (int p = 0; p < 4; ++p) {
      std::pair<int, int> start = {static_cast<int>(i), p};
      if (visited.count(start)) continue;
      std::pair<int, int> cur = start;
      while (!visited.count(cur)) {
        visited.insert(cur);
        incoming[cur] = true;
        std::pair<int, int> exit = {cur.first, (cur.second + 2) % 4};
        visited.insert(exit);
        incoming[exit] = false;
        int label = t.crossings_[cur.first].arc[exit.second];
        cur = other_occ(label, exit);
      }
    }

  // Rebuild tuples with position 0 = incoming under-arc.
  t.over_in_3_.assign(t.crossings_.size(), false);
  for (size_t i = 0; i < t.crossings_.size(); ++i) {
    auto& v = t.crossings_[i].arc;
    if (!incoming.at({static_cast<int>(i), 0})) {
      v = {v[2], v[3], v[0], v[1]};
      t.over_in_3_[i] = incoming.at({static_cast<int>(i), 1});
    } else {
      t.over_in_3_[i] = incoming.at({static_cast<int>(i), 3});
    }
  }
  t.oclass_ = cls;
  return t;
}

inline std::string Tangle::canonical_key() const {
  std::map<int, int> label;
  int next = 0;
  auto lab = [&](int a) {
    auto [it, ins] = label.try_emplace(a, next);
    if (ins) ++next;
    return it->second;
  };
  std::ostringstream out;
  for (int k = 0; k < 4; ++k) out << lab(corners_[k]) << ",";
  size_t n = crossings_.size();
  std::vector<bool> used(n, false);
  for (size_t step = 0; step < n; ++step) {
    int best_i = -1, best_r = 0;
    std::array<int, 4> best_row{};
    for (size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      for (int r : {0, 2}) {
        std::array<int, 4> row{};
        int fresh = next;
        std::map<int, int> tent;
        for (int k = 0; k < 4; ++k) {
          int a = crossings_[i].arc[(k + r) % 4];
          auto it = label.find(a);
          if (it != label.end()) {
            row[k] = it->second;
          } else {
            auto [t2, ins] = tent.try_emplace(a, fresh);
            if (ins) ++fresh;
            row[k] = t2->second;
          }
        }
        if (best_i < 0 || row < best_row) {
          best_i = static_cast<int>(i);
          best_r = r;
          best_row = row;
        }
      }
    }
    used[best_i] = true;
    for (int k = 0; k < 4; ++k) lab(crossings_[best_i].arc[(k + best_r) % 4]);
    for (int v : best_row) out << v << ",";
    out << ";";
  }
  out << "|L" << free_loops_;
  return out.str();
}

// --- bracket vector -------------------------------------------------------

struct BracketVector {
  LaurentPoly f, g;

  friend bool operator==(const BracketVector& a, const BracketVector& b) {
    return a.f == b.f && a.g == b.g;
  }
};

namespace detail {

inline BracketVector br_scale(const BracketVector& v, const LaurentPoly& s) {
  return {v.f * s, v.g * s};
}

inline BracketVector br_rec(
    Tangle t, std::unordered_map<std::string, BracketVector>& memo,
    std::unordered_map<std::string, LaurentPoly>& dmemo) {
  LaurentPoly factor = delta_power(t.free_loops());
  t = t.with_loops_cleared();
  // Reductions: Reidemeister-1 kinks (monomial factor), free loops (delta).
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < t.crossing_count(); ++i) {
      const auto& a = t.crossings()[i].arc;
      if (a[0] == a[1] || a[2] == a[3]) {
        factor *= LaurentPoly::monomial(3, -1);
        t = t.smoothed(i, false);
        changed = true;
        break;
      }
      if (a[0] == a[3] || a[1] == a[2]) {
        factor *= LaurentPoly::monomial(-3, -1);
        t = t.smoothed(i, true);
        changed = true;
        break;
      }
    }
    if (t.free_loops() > 0) {
      factor *= delta_power(t.free_loops());
      t = t.with_loops_cleared();
    }
  }
  // Closed pieces not attached to the corner strands factor out; each such
  // piece P contributes delta <P> (one delta per circle, matching the raw
  // normalization of detail::bracket_reduce).
  if (t.crossing_count() > 0) {
    // Group crossings into connected pieces by shared arc labels (the corner
    // arcs are open, so LinkDiagram's closed-arc validation cannot be used).
    size_t nx = t.crossing_count();
    std::vector<size_t> parent(nx);
    for (size_t i = 0; i < nx; ++i) parent[i] = i;
    auto find = [&](size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::map<int, size_t> first_seen;
    for (size_t i = 0; i < nx; ++i)
      for (int a : t.crossings()[i].arc) {
        auto [it, fresh] = first_seen.emplace(a, i);
        if (!fresh) parent[find(i)] = find(it->second);
      }
    std::map<size_t, std::vector<size_t>> pieces;
    for (size_t i = 0; i < nx; ++i) pieces[find(i)].push_back(i);
    std::set<int> corner_labels(t.corners().begin(), t.corners().end());
    std::vector<size_t> keep;
    for (const auto& [root, piece] : pieces) {
      bool attached = false;
      for (size_t i : piece)
        for (int a : t.crossings()[i].arc)
          if (corner_labels.count(a)) attached = true;
      if (attached) {
        keep.insert(keep.end(), piece.begin(), piece.end());
      } else {
        std::vector<Crossing> sub;
        for (size_t i : piece) sub.push_back(t.crossings()[i]);
        factor *= bracket_reduce(LinkDiagram(std::move(sub), 0), dmemo);
      }
    }
    if (keep.size() != t.crossing_count()) t = t.restricted(keep);
  }

  if (t.crossing_count() == 0) {
    const auto& c = t.corners();
    if (c[NW] == c[NE] && c[SW] == c[SE]) return {factor, LaurentPoly::zero()};
    if (c[NW] == c[SW] && c[NE] == c[SE]) return {LaurentPoly::zero(), factor};
    throw std::logic_error("bracket_vector: non-planar corner pairing");
  }

  std::string key = t.canonical_key();
  if (auto it = memo.find(key); it != memo.end())
    return br_scale(it->second, factor);

  BracketVector a = br_rec(t.smoothed(0, true), memo, dmemo);
  BracketVector b = br_rec(t.smoothed(0, false), memo, dmemo);
  BracketVector r = {
      LaurentPoly::monomial(1) * a.f + LaurentPoly::monomial(-1) * b.f,
      LaurentPoly::monomial(1) * a.g + LaurentPoly::monomial(-1) * b.g};
  if (memo.size() < bracket_cache_limit()) memo.emplace(std::move(key), r);
  return br_scale(r, factor);
}

}  // namespace detail

inline BracketVector bracket_vector(const Tangle& t) {
  static thread_local std::unordered_map<std::string, BracketVector> memo;
  static thread_local std::unordered_map<std::string, LaurentPoly> dmemo;
  return detail::br_rec(t.forget_orientation(), memo, dmemo);
}

// br(T + U) via Proposition-style sum algebra.
inline BracketVector bracket_vector_sum(const BracketVector& t,
                                        const BracketVector& u) {
  return {t.f * u.f, t.f * u.g + t.g * u.f + bracket_delta() * t.g * u.g};
}

// br of rotations/reflections that exchange the 0 and infinity roles.
inline BracketVector bracket_vector_swapped(const BracketVector& t) {
  return {t.g, t.f};
}

// br(T * U): rotating by 90 degrees turns vertical stacking into horizontal
// sum and swaps the basis roles, so star = swap . sum . (swap x swap).
inline BracketVector bracket_vector_star(const BracketVector& t,
                                         const BracketVector& u) {
  return bracket_vector_swapped(
      bracket_vector_sum(bracket_vector_swapped(t), bracket_vector_swapped(u)));
}

// <T^N> = delta f + g, <T^D> = f + delta g.
inline LaurentPoly bracket_numerator(const BracketVector& v) {
  return bracket_delta() * v.f + v.g;
}
inline LaurentPoly bracket_denominator(const BracketVector& v) {
  return v.f + bracket_delta() * v.g;
}

// Inverse: recover br(T) from the closure brackets (exact divisions).
inline BracketVector bracket_vector_solve(const LaurentPoly& numerator,
                                          const LaurentPoly& denominator) {
  LaurentPoly det = bracket_delta() * bracket_delta() - LaurentPoly::one();
  auto f = (bracket_delta() * numerator - denominator).divide_exact(det);
  auto g = (bracket_delta() * denominator - numerator).divide_exact(det);
  if (!f || !g)
    throw std::domain_error("bracket_vector_solve: inexact division");
  return {*f, *g};
}

// --- Conway vector and tangle fraction -------------------------------------

struct ConwayVector {
  LaurentPoly p, q;

  friend bool operator==(const ConwayVector& a, const ConwayVector& b) {
    return a.p == b.p && a.q == b.q;
  }
};

struct TangleFraction {
  LaurentPoly num, den;

  friend bool operator==(const TangleFraction& a, const TangleFraction& b) {
    return a.num == b.num && a.den == b.den;
  }
};

// con(T) = (nabla((T-1)^N), nabla(T^N)) for left-right oriented T.
inline ConwayVector conway_vector(const Tangle& t) {
  if (t.oclass() != OrientClass::left_right)
    throw std::invalid_argument("conway_vector: tangle not left-right");
  Tangle minus_one =
      Tangle::integer_tangle(-1).oriented_as(OrientClass::left_right);
  Tangle shifted = Tangle::sum(t, minus_one);
  return {conway_polynomial(shifted.numerator()),
          conway_polynomial(t.numerator())};
}

// F(T) = nabla(T^N) / nabla(T^D), unreduced, for diagonally oriented T.
inline TangleFraction tangle_fraction(const Tangle& t) {
  if (t.oclass() != OrientClass::diagonal_a &&
      t.oclass() != OrientClass::diagonal_b)
    throw std::invalid_argument("tangle_fraction: tangle not diagonal");
  return {conway_polynomial(t.numerator()),
          conway_polynomial(t.denominator())};
}

inline ConwayVector conway_vector_sum(const ConwayVector& t,
                                      const ConwayVector& u) {
  return {t.p * u.p + t.q * u.q,
          t.p * u.q + t.q * u.p + LaurentPoly::monomial(1) * t.q * u.q};
}

// con(T * W) for diagonal W with fraction (num, den).
inline ConwayVector conway_vector_star(const ConwayVector& t,
                                       const TangleFraction& w) {
  return {w.num * t.p + w.den * t.q, w.num * t.q};
}

inline TangleFraction fraction_sum(const TangleFraction& t,
                                   const TangleFraction& u) {
  return {t.num * u.den + t.den * u.num, t.den * u.den};
}

// nabla(L^T) = nabla(T^D) nabla(L^0) + nabla(T^N) nabla(L^infinity)
// for diagonally oriented T (Conway expansion over the diagonal basis).
inline LaurentPoly diagonal_expand(const TangleFraction& f,
                                   const LaurentPoly& nabla_l0,
                                   const LaurentPoly& nabla_linf) {
  return f.den * nabla_l0 + f.num * nabla_linf;
}

// phi_L(con(T)) = p nabla(L(0)) + q nabla(L(1)).
inline LaurentPoly phi(const ConwayVector& v, const LaurentPoly& nabla_l0,
                       const LaurentPoly& nabla_l1) {
  return v.p * nabla_l0 + v.q * nabla_l1;
}

}  // namespace skein
