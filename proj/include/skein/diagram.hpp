#pragma once

// Planar-diagram (PD) representation of link diagrams.
//
// A crossing stores its four incident arc labels counterclockwise starting
// from an under-strand arc, so positions {0,2} are the under-strand pair and
// {1,3} the over-strand pair. For oriented diagrams position 0 is the
// *incoming* under-strand arc and a per-crossing bit records whether the
// over-strand enters at position 3 (true) or position 1 (false); the bit at
// a crossing equals its sign (+ for true).
//
// Free loops (crossing-free unknot components) are tracked by count.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

struct Crossing {
  std::array<int, 4> arc;  // counterclockwise, arc[0]/arc[2] under-strand

  friend bool operator==(const Crossing& a, const Crossing& b) {
    return a.arc == b.arc;
  }
};

namespace detail {

// Union-find over dense non-negative keys.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Returns false when x and y were already in one class.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[y] = x;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

class LinkDiagram {
 public:
  LinkDiagram() = default;

  LinkDiagram(std::vector<Crossing> crossings, int free_loops,
              std::vector<bool> over_in_3 = {})
      : crossings_(std::move(crossings)),
        over_in_3_(std::move(over_in_3)),
        free_loops_(free_loops) {
    if (!over_in_3_.empty() && over_in_3_.size() != crossings_.size())
      throw std::invalid_argument("orientation bits do not match crossings");
    validate();
  }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int free_loops() const { return free_loops_; }
  bool oriented() const {
    return !crossings_.empty() ? !over_in_3_.empty() : oriented_hint_;
  }
  bool over_in_3(size_t i) const { return over_in_3_.at(i); }
  size_t crossing_count() const { return crossings_.size(); }

  static LinkDiagram unknot(int circles = 1) {
    LinkDiagram d;
    d.free_loops_ = circles;
    return d;
  }

  // --- basic invariants -----------------------------------------------

  int components() const {
    int n = static_cast<int>(crossings_.size());
    if (n == 0) return free_loops_;
    auto [uf, arc_index] = arc_union();
    std::set<int> roots;
    for (const auto& [arc, idx] : arc_index) roots.insert(uf.find(idx));
    return static_cast<int>(roots.size()) + free_loops_;
  }

  int writhe() const {
    require_oriented("writhe");
    int w = 0;
    for (bool b : over_in_3_) w += b ? 1 : -1;
    return w;
  }

  int crossing_sign(size_t i) const {
    require_oriented("crossing_sign");
    return over_in_3_.at(i) ? 1 : -1;
  }

  // Mirror image: every crossing switched. Orientation is preserved.
  LinkDiagram mirror() const {
    LinkDiagram d = *this;
    for (size_t i = 0; i < d.crossings_.size(); ++i)
      d.switch_crossing_in_place(i);
    return d;
  }

  // Reverse the orientation of every component (arc flows all reverse).
  // The underlying curve is unchanged: tuples rotate so position 0 is the
  // new incoming under-arc (= old outgoing one at position 2).
  LinkDiagram reverse_all() const {
    require_oriented("reverse_all");
    LinkDiagram d = *this;
    for (auto& c : d.crossings_)
      c.arc = {c.arc[2], c.arc[3], c.arc[0], c.arc[1]};
    return d;
  }

  LinkDiagram forget_orientation() const {
    LinkDiagram d = *this;
    d.over_in_3_.clear();
    d.oriented_hint_ = false;
    return d;
  }

  // --- composition ------------------------------------------------------

  static LinkDiagram disjoint_union(const LinkDiagram& a,
                                    const LinkDiagram& b) {
    LinkDiagram x = a.relabeled_dense();
    LinkDiagram y = b.relabeled_dense();
    int shift = x.arc_count();
    for (auto& c : y.crossings_)
      for (int& v : c.arc) v += shift;
    x.crossings_.insert(x.crossings_.end(), y.crossings_.begin(),
                        y.crossings_.end());
    x.free_loops_ += y.free_loops_;
    if (a.oriented() && b.oriented()) {
      x.over_in_3_.insert(x.over_in_3_.end(), y.over_in_3_.begin(),
                          y.over_in_3_.end());
      x.oriented_hint_ = true;
    } else {
      x.over_in_3_.clear();
      x.oriented_hint_ = false;
    }
    x.validate();
    return x;
  }

  // Connected sum along the chosen arcs (each must appear at a crossing of
  // its diagram). When both inputs are oriented the band respects flow and
  // the result stays oriented; otherwise the occurrence order is the
  // scan order over crossings.
  static LinkDiagram connected_sum(const LinkDiagram& a, int arc_a,
                                   const LinkDiagram& b, int arc_b) {
    LinkDiagram x = a.relabeled_dense(&arc_a);
    LinkDiagram y = b.relabeled_dense(&arc_b);
    int shift = x.arc_count();
    for (auto& c : y.crossings_)
      for (int& v : c.arc) v += shift;
    arc_b += shift;

    bool oriented = a.oriented() && b.oriented();
    auto occ_a = x.arc_occurrences(arc_a);
    auto occ_b = y.arc_occurrences(arc_b);
    if (occ_a.size() != 2 || occ_b.size() != 2)
      throw std::invalid_argument("connected_sum: arc not at two crossings");

    int fresh = shift + y.arc_count();
    if (oriented) {
      // Reroute tail(arc_a) -> head(arc_b), keeping label arc_a, and
      // tail(arc_b) -> head(arc_a) under a fresh label.
      auto head_a = occ_a[x.is_incoming(occ_a[0]) ? 0 : 1];
      auto head_b = occ_b[y.is_incoming(occ_b[0]) ? 0 : 1];
      auto tail_b = occ_b[y.is_incoming(occ_b[0]) ? 1 : 0];
      y.crossings_[head_b.first].arc[head_b.second] = arc_a;
      y.crossings_[tail_b.first].arc[tail_b.second] = fresh;
      x.crossings_[head_a.first].arc[head_a.second] = fresh;
    } else {
      // Join first occurrences together and second occurrences together.
      y.crossings_[occ_b[0].first].arc[occ_b[0].second] = fresh;
      x.crossings_[occ_a[0].first].arc[occ_a[0].second] = fresh;
      y.crossings_[occ_b[1].first].arc[occ_b[1].second] = arc_a;
    }

    x.crossings_.insert(x.crossings_.end(), y.crossings_.begin(),
                        y.crossings_.end());
    x.free_loops_ += y.free_loops_;
    if (oriented) {
      x.over_in_3_.insert(x.over_in_3_.end(), y.over_in_3_.begin(),
                          y.over_in_3_.end());
    } else {
      x.over_in_3_.clear();
    }
    x = x.relabeled_dense();
    x.validate();
    return x;
  }

  // --- skein operations ---------------------------------------------------

  // Unoriented smoothings at crossing i. The A-smoothing joins the arc pairs
  // (0,1) and (2,3) of the tuple, the B-smoothing joins (0,3) and (1,2).
  // Results are unoriented.
  std::pair<LinkDiagram, LinkDiagram> smoothings(size_t i) const {
    return {smoothed(i, /*a_type=*/true), smoothed(i, /*a_type=*/false)};
  }

  LinkDiagram smoothed(size_t i, bool a_type) const {
    const auto& t = crossings_.at(i).arc;
    LinkDiagram d = *this;
    d.over_in_3_.clear();
    d.oriented_hint_ = false;
    d.crossings_.erase(d.crossings_.begin() + i);
    if (a_type)
      d.join_pairs({{t[0], t[1]}, {t[2], t[3]}});
    else
      d.join_pairs({{t[0], t[3]}, {t[1], t[2]}});
    return d;
  }

  // Oriented skein triple (L+, L-, L0) at crossing i. L+ and L- agree with
  // this diagram away from i; L0 is the oriented smoothing.
  struct SkeinTriple;
  SkeinTriple oriented_skein(size_t i) const;

  LinkDiagram with_switched_crossing(size_t i) const {
    LinkDiagram d = *this;
    d.switch_crossing_in_place(i);
    return d;
  }

  // True when crossing i is a Reidemeister-1 kink (adjacent equal labels).
  bool is_kink(size_t i) const {
    const auto& t = crossings_.at(i).arc;
    return t[0] == t[1] || t[1] == t[2] || t[2] == t[3] || t[3] == t[0];
  }

  // Remove kink crossing i, splicing the strand. Orientation is preserved.
  LinkDiagram kink_removed(size_t i) const {
    const auto& t = crossings_.at(i).arc;
    std::pair<int, int> join;
    if (t[0] == t[1])
      join = {t[2], t[3]};
    else if (t[2] == t[3])
      join = {t[0], t[1]};
    else if (t[0] == t[3])
      join = {t[1], t[2]};
    else if (t[1] == t[2])
      join = {t[0], t[3]};
    else
      throw std::invalid_argument("kink_removed: not a kink");
    LinkDiagram d = *this;
    d.crossings_.erase(d.crossings_.begin() + i);
    if (!d.over_in_3_.empty()) {
      d.over_in_3_.erase(d.over_in_3_.begin() + i);
      d.oriented_hint_ = true;
    }
    d.join_pairs({join});
    return d;
  }

  // --- connectivity helpers -------------------------------------------

  // Indices of crossings in each planar-connected piece (two crossings are
  // connected when they share an arc).
  std::vector<std::vector<size_t>> split_components() const {
    int n = static_cast<int>(crossings_.size());
    detail::UnionFind uf(n);
    std::map<int, int> first_seen;
    for (int i = 0; i < n; ++i)
      for (int a : crossings_[i].arc) {
        auto [it, inserted] = first_seen.try_emplace(a, i);
        if (!inserted) uf.unite(it->second, i);
      }
    std::map<int, std::vector<size_t>> groups;
    for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
    std::vector<std::vector<size_t>> out;
    for (auto& [root, idxs] : groups) out.push_back(std::move(idxs));
    return out;
  }

  // Sub-diagram consisting of the given crossings (free loops excluded).
  LinkDiagram restricted_to(const std::vector<size_t>& idxs) const {
    LinkDiagram d;
    for (size_t i : idxs) {
      d.crossings_.push_back(crossings_[i]);
      if (oriented()) d.over_in_3_.push_back(over_in_3_[i]);
    }
    d.oriented_hint_ = oriented();
    return d.relabeled_dense();
  }

  // --- canonical form -------------------------------------------------

  // A label sequence invariant under arc relabeling and crossing reordering,
  // suitable as a memo key. For unoriented diagrams the tuple rotation by two
  // (the other under-arc start) is also quotiented out.
  std::string canonical_key() const {
    size_t n = crossings_.size();
    std::string best;
    std::vector<int> rots = oriented() ? std::vector<int>{0}
                                       : std::vector<int>{0, 2};
    for (size_t seed = 0; seed < std::max<size_t>(n, 1) && n > 0; ++seed) {
      for (int rot : rots) {
        std::string key = trace_key(seed, rot);
        if (best.empty() || key < best) best = std::move(key);
      }
    }
    best += "|L";
    best += std::to_string(free_loops_);
    return best;
  }

  // --- PD text I/O ------------------------------------------------------

  // Format:
  //   PD <oriented|unoriented> <free_loops>
  //   X a b c d
  //   ...
  // For oriented diagrams, arcs are numbered consecutively along each
  // component's orientation (wrapping within the component's arc range),
  // which encodes the flow directions.
  static LinkDiagram parse_pd(const std::string& text) {
    std::istringstream in(text);
    std::string tag, mode;
    int loops = 0;
    if (!(in >> tag) || tag != "PD")
      throw std::invalid_argument("parse_pd: missing PD header");
    if (!(in >> mode >> loops) || (mode != "oriented" && mode != "unoriented"))
      throw std::invalid_argument("parse_pd: bad PD header");
    if (loops < 0) throw std::invalid_argument("parse_pd: negative loops");

    std::vector<Crossing> cs;
    std::string word;
    while (in >> word) {
      if (word != "X") throw std::invalid_argument("parse_pd: expected X row");
      Crossing c{};
      for (int k = 0; k < 4; ++k)
        if (!(in >> c.arc[k]))
          throw std::invalid_argument("parse_pd: truncated X row");
      cs.push_back(c);
    }

    LinkDiagram d;
    d.crossings_ = std::move(cs);
    d.free_loops_ = loops;
    if (mode == "oriented") d.infer_orientation_from_numbering();
    d.validate();
    return d.relabeled_dense();
  }

  std::string render_pd() const {
    LinkDiagram d = oriented() ? renumbered_along_orientation()
                               : relabeled_dense();
    std::ostringstream out;
    out << "PD " << (oriented() ? "oriented" : "unoriented") << " "
        << d.free_loops_ << "\n";
    for (const auto& c : d.crossings_)
      out << "X " << c.arc[0] << " " << c.arc[1] << " " << c.arc[2] << " "
          << c.arc[3] << "\n";
    return out.str();
  }

  // --- orientation ------------------------------------------------------

  // All orientations of this diagram (one per choice of direction for each
  // component), as oriented diagrams. Free loops carry no orientation data.
  std::vector<LinkDiagram> all_orientations() const;

  void validate() const {
    std::map<int, int> count;
    for (const auto& c : crossings_)
      for (int a : c.arc) ++count[a];
    for (const auto& [a, n] : count)
      if (n != 2)
        throw std::invalid_argument("diagram: arc " + std::to_string(a) +
                                    " has " + std::to_string(n) +
                                    " ends (want 2)");
    if (free_loops_ < 0) throw std::invalid_argument("diagram: negative loops");
    if (oriented() && !crossings_.empty()) check_flow();
  }

  int arc_count() const {
    std::set<int> arcs;
    for (const auto& c : crossings_)
      for (int a : c.arc) arcs.insert(a);
    return static_cast<int>(arcs.size());
  }

  void require_oriented(const char* who) const {
    if (!oriented())
      throw std::logic_error(std::string(who) + ": diagram not oriented");
  }

 private:
  friend class Tangle;

  // Each crossing slot either receives flow (incoming) or emits it.
  // Position 0 is incoming-under, 2 outgoing-under; over-strand direction
  // follows the per-crossing bit.
  bool is_incoming(std::pair<size_t, int> occ) const {
    int pos = occ.second;
    if (pos == 0) return true;
    if (pos == 2) return false;
    bool in3 = over_in_3_.at(occ.first);
    return in3 ? pos == 3 : pos == 1;
  }

  std::vector<std::pair<size_t, int>> arc_occurrences(int arc) const {
    std::vector<std::pair<size_t, int>> occ;
    for (size_t i = 0; i < crossings_.size(); ++i)
      for (int p = 0; p < 4; ++p)
        if (crossings_[i].arc[p] == arc) occ.emplace_back(i, p);
    return occ;
  }

  void switch_crossing_in_place(size_t i) {
    auto& t = crossings_.at(i).arc;
    if (over_in_3_.empty()) {
      t = {t[1], t[2], t[3], t[0]};
      return;
    }
    // Keep position 0 = incoming under-arc after the over/under swap.
    if (over_in_3_.at(i)) {
      t = {t[3], t[0], t[1], t[2]};
      over_in_3_[i] = false;
    } else {
      t = {t[1], t[2], t[3], t[0]};
      over_in_3_[i] = true;
    }
  }

  // Merge arc labels pairwise; a join of two already-equal labels closes a
  // circle and increments free_loops. Pairs are processed in order with
  // label substitution applied globally after each merge.
  void join_pairs(std::vector<std::pair<int, int>> pairs) {
    for (size_t k = 0; k < pairs.size(); ++k) {
      auto [p, q] = pairs[k];
      if (p == q) {
        ++free_loops_;
        continue;
      }
      for (auto& c : crossings_)
        for (int& v : c.arc)
          if (v == q) v = p;
      for (size_t j = k + 1; j < pairs.size(); ++j) {
        if (pairs[j].first == q) pairs[j].first = p;
        if (pairs[j].second == q) pairs[j].second = p;
      }
    }
  }

  // Relabel arcs to 0..N-1 by ascending old label; optionally tracks one
  // external arc reference through the relabeling.
  LinkDiagram relabeled_dense(int* tracked = nullptr) const {
    std::map<int, int> remap;
    for (const auto& c : crossings_)
      for (int a : c.arc) remap.emplace(a, 0);
    int next = 0;
    for (auto& [old_label, fresh] : remap) fresh = next++;
    LinkDiagram d = *this;
    for (auto& c : d.crossings_)
      for (int& v : c.arc) v = remap.at(v);
    if (tracked) *tracked = remap.at(*tracked);
    return d;
  }

  std::pair<detail::UnionFind, std::map<int, int>> arc_union() const {
    std::map<int, int> arc_index;
    for (const auto& c : crossings_)
      for (int a : c.arc) arc_index.emplace(a, 0);
    int next = 0;
    for (auto& [a, idx] : arc_index) idx = next++;
    detail::UnionFind uf(next);
    for (const auto& c : crossings_) {
      uf.unite(arc_index[c.arc[0]], arc_index[c.arc[2]]);
      uf.unite(arc_index[c.arc[1]], arc_index[c.arc[3]]);
    }
    return {uf, arc_index};
  }

  void check_flow() const {
    std::map<int, std::array<int, 2>> ends;  // arc -> {incoming, outgoing}
    for (size_t i = 0; i < crossings_.size(); ++i)
      for (int p = 0; p < 4; ++p) {
        int a = crossings_[i].arc[p];
        ++ends[a][is_incoming({i, p}) ? 0 : 1];
      }
    for (const auto& [a, e] : ends)
      if (e[0] != 1 || e[1] != 1)
        throw std::invalid_argument("diagram: inconsistent flow at arc " +
                                    std::to_string(a));
  }

  // Greedy BFS labeling started at crossing `seed` rotated by `rot`.
  std::string trace_key(size_t seed, int rot) const {
    size_t n = crossings_.size();
    std::map<int, int> label;
    int next = 0;
    auto lab = [&](int a) {
      auto [it, ins] = label.try_emplace(a, next);
      if (ins) ++next;
      return it->second;
    };
    std::vector<bool> used(n, false);
    std::vector<std::array<int, 5>> rows;  // 4 labels + sign slot
    auto emit = [&](size_t i, int r) {
      const auto& t = crossings_[i].arc;
      std::array<int, 5> row{};
      for (int k = 0; k < 4; ++k) row[k] = lab(t[(k + r) % 4]);
      row[4] = oriented() ? (over_in_3_[i] ? 1 : -1) : 0;
      rows.push_back(row);
      used[i] = true;
    };
    emit(seed, rot);
    for (size_t step = 1; step < n; ++step) {
      // Pick the unused crossing whose best rotation yields the smallest row
      // under the labels-so-far (fresh labels compare by assignment order).
      int best_i = -1, best_r = 0;
      std::array<int, 5> best_row{};
      for (size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        bool touches = false;
        for (int a : crossings_[i].arc)
          if (label.count(a)) touches = true;
        if (!touches) continue;
        for (int r : oriented() ? std::vector<int>{0} : std::vector<int>{0, 2}) {
          std::array<int, 5> row{};
          int fresh = next;
          std::map<int, int> tentative;
          for (int k = 0; k < 4; ++k) {
            int a = crossings_[i].arc[(k + r) % 4];
            auto it = label.find(a);
            if (it != label.end()) {
              row[k] = it->second;
            } else {
              auto [t2, ins] = tentative.try_emplace(a, fresh);
              if (ins) ++fresh;
              row[k] = t2->second;
            }
          }
          row[4] = oriented() ? (over_in_3_[i] ? 1 : -1) : 0;
          if (best_i < 0 || row < best_row) {
            best_i = static_cast<int>(i);
            best_r = r;
            best_row = row;
          }
        }
      }
      if (best_i < 0) {
        // Disconnected remainder: restart from the lowest unused index.
        for (size_t i = 0; i < n; ++i)
          if (!used[i]) {
            emit(i, rots_for(i).front());
            break;
          }
        continue;
      }
      emit(best_i, best_r);
    }
    std::ostringstream out;
    for (const auto& row : rows) {
      for (int v : row) out << v << ",";
      out << ";";
    }
    return out.str();
  }

  std::vector<int> rots_for(size_t) const {
    return oriented() ? std::vector<int>{0} : std::vector<int>{0, 2};
  }

  // Oriented parsing: the successor of arc a within a component whose labels
  // form a contiguous block [lo, hi] is a+1, wrapping to lo. A crossing tuple
  // (a,b,c,d) has under-flow a->c; the over-flow direction (d->b vs b->d) is
  // recovered from the successor relation.
  void infer_orientation_from_numbering();

  LinkDiagram renumbered_along_orientation() const;

  std::vector<Crossing> crossings_;
  std::vector<bool> over_in_3_;
  int free_loops_ = 0;
  bool oriented_hint_ = false;  // orientation flag for crossing-free diagrams
};

struct LinkDiagram::SkeinTriple {
  LinkDiagram plus, minus, zero;
};

inline LinkDiagram::SkeinTriple LinkDiagram::oriented_skein(size_t i) const {
  require_oriented("oriented_skein");
  LinkDiagram plus = *this, minus = *this;
  if (over_in_3_.at(i))
    minus.switch_crossing_in_place(i);
  else
    plus.switch_crossing_in_place(i);

  const auto& t = crossings_.at(i).arc;
  LinkDiagram zero = *this;
  zero.crossings_.erase(zero.crossings_.begin() + i);
  zero.over_in_3_.erase(zero.over_in_3_.begin() + i);
  zero.oriented_hint_ = true;
  // Flow-respecting joins: incoming under (0) connects to the over-strand
  // outgoing arc, and the over incoming arc to the under outgoing (2).
  if (over_in_3_.at(i))
    zero.join_pairs({{t[0], t[1]}, {t[3], t[2]}});
  else
    zero.join_pairs({{t[0], t[3]}, {t[1], t[2]}});
  return {std::move(plus), std::move(minus), std::move(zero)};
}

inline void LinkDiagram::infer_orientation_from_numbering() {
  if (crossings_.empty()) {
    oriented_hint_ = true;
    return;
  }
  // Component arc-sets via union-find.
  auto [uf, arc_index] = arc_union();
  std::map<int, std::pair<int, int>> range;  // root -> [lo, hi]
  for (const auto& [a, idx] : arc_index) {
    int r = uf.find(idx);
    auto [it, ins] = range.try_emplace(r, std::make_pair(a, a));
    if (!ins) {
      it->second.first = std::min(it->second.first, a);
      it->second.second = std::max(it->second.second, a);
    }
  }
  auto succ = [&](int a) {
    int r = uf.find(arc_index.at(a));
    auto [lo, hi] = range.at(r);
    return a == hi ? lo : a + 1;
  };

  over_in_3_.assign(crossings_.size(), false);
  for (size_t i = 0; i < crossings_.size(); ++i) {
    auto& t = crossings_[i].arc;
    if (succ(t[0]) != t[2])
      throw std::invalid_argument(
          "parse_pd: oriented tuple lacks under-flow a->c at crossing " +
          std::to_string(i));
    if (succ(t[3]) == t[1])
      over_in_3_[i] = true;
    else if (succ(t[1]) == t[3])
      over_in_3_[i] = false;
    else
      throw std::invalid_argument(
          "parse_pd: oriented tuple lacks over-flow at crossing " +
          std::to_string(i));
  }
  check_flow();
}

inline LinkDiagram LinkDiagram::renumbered_along_orientation() const {
  require_oriented("render_pd");
  LinkDiagram d = *this;
  if (crossings_.empty()) return d;
  // Walk each component along its flow, assigning consecutive labels.
  std::map<int, std::pair<size_t, int>> head_of;  // arc -> occurrence where
                                                  // the arc flows *into*
  for (size_t i = 0; i < crossings_.size(); ++i)
    for (int p = 0; p < 4; ++p)
      if (is_incoming({i, p})) head_of[crossings_[i].arc[p]] = {i, p};

  auto next_arc = [&](int a) {
    auto [i, p] = head_of.at(a);
    const auto& t = crossings_[i].arc;
    if (p == 0) return t[2];
    bool in3 = over_in_3_[i];
    return in3 ? t[1] : t[3];
  };

  std::map<int, int> remap;
  int next = 0;
  std::set<int> all;
  for (const auto& c : crossings_)
    for (int a : c.arc) all.insert(a);
  for (int a : all) {
    if (remap.count(a)) continue;
    int cur = a;
    do {
      remap[cur] = next++;
      cur = next_arc(cur);
    } while (cur != a);
  }
  for (auto& c : d.crossings_)
    for (int& v : c.arc) v = remap.at(v);
  return d;
}

inline std::vector<LinkDiagram> LinkDiagram::all_orientations() const {
  LinkDiagram base = forget_orientation().relabeled_dense();
  size_t n = base.crossings_.size();
  if (n == 0) {
    LinkDiagram d = base;
    d.oriented_hint_ = true;
    return {d};
  }

  // Strand components over arcs.
  auto [uf, arc_index] = base.arc_union();
  std::map<int, int> comp_of_root;
  for (const auto& [a, idx] : arc_index)
    comp_of_root.try_emplace(uf.find(idx), static_cast<int>(comp_of_root.size()));
  int ncomp = static_cast<int>(comp_of_root.size());
  auto comp_of_arc = [&](int a) {
    return comp_of_root.at(uf.find(arc_index.at(a)));
  };

  std::vector<LinkDiagram> out;
  for (int mask = 0; mask < (1 << ncomp); ++mask) {
    // Direction seed: each component's lowest arc flows "forward" when its
    // mask bit is 0. Propagate to per-slot in/out assignments and rebuild
    // tuples so position 0 is the incoming under-arc.
    // An under pair (t0, t2) has flow t0->t2 or t2->t0; over likewise.
    // Propagation: walk strands. Build adjacency: each crossing links its
    // under pair and over pair.
    std::map<int, int> dir;  // arc -> +1 forward along chosen walk, filled in
    // Walk each component once to give arcs a coherent direction.
    // Represent the walk by pairing occurrences: entering a crossing at the
    // under pair exits at the other under slot.
    std::map<int, std::vector<std::pair<size_t, int>>> occs;
    for (size_t i = 0; i < n; ++i)
      for (int p = 0; p < 4; ++p)
        occs[base.crossings_[i].arc[p]].emplace_back(i, p);

    // Choose, per component, a coherent "flow" assignment: pick the lowest
    // arc, declare one of its two occurrences the head, then alternate
    // through crossings.
    std::map<std::pair<size_t, int>, bool> incoming;  // occurrence -> in?
    std::set<int> visited;
    for (const auto& [a0, idx0] : arc_index) {
      if (visited.count(a0)) continue;
      int comp = comp_of_arc(a0);
      bool flip = (mask >> comp) & 1;
      // Start: arc a0 flows into occurrence 0 (or 1 when flipped).
      int cur = a0;
      auto head = occs[a0][flip ? 1 : 0];
      while (!visited.count(cur)) {
        visited.insert(cur);
        incoming[head] = true;
        auto [i, p] = head;
        int q = (p + 2) % 4;  // exit slot on the same strand
        incoming[{i, q}] = false;
        int nxt = base.crossings_[i].arc[q];
        // The next head is the occurrence of nxt other than (i, q).
        auto& v = occs[nxt];
        head = (v[0] == std::make_pair(i, q)) ? v[1] : v[0];
        cur = nxt;
      }
    }

    LinkDiagram d = base;
    d.over_in_3_.assign(n, false);
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) {
      auto& t = d.crossings_[i].arc;
      if (!incoming.at({i, 0})) t = {t[2], t[3], t[0], t[1]};
      // Recompute over direction from the (possibly rotated) tuple.
      bool in3 = incoming.at({i, 0}) ? incoming.at({i, 3})
                                     : incoming.at({i, 1});
      d.over_in_3_[i] = in3;
    }
    if (!ok) continue;
    d.oriented_hint_ = true;
    d.validate();
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace skein
