#pragma once

// Conway polynomial of oriented link diagrams via the descending-diagram
// resolving tree: nabla(unknot) = 1, nabla(L+) - nabla(L-) = z nabla(L0).
//
// Each call walks the diagram component by component (components ordered by
// lowest arc label, each traversed along its orientation). The first crossing
// reached on its under-strand before having been visited is a "violation";
// the skein relation trades it for a switched diagram (strictly closer to
// descending) and a smoothed diagram (one crossing fewer). Descending
// diagrams are unlinks. Kinks are stripped for free, split diagrams vanish.

#include <string>
#include <unordered_map>

#include "skein/bracket.hpp"
#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

namespace skein {

namespace detail {

// Index of the first violating crossing in the descending traversal, or -1
// when the diagram is descending.
inline int first_violation(const LinkDiagram& d) {
  size_t n = d.crossing_count();
  // head_of: arc -> (crossing, position) where the arc flows in.
  std::map<int, std::pair<size_t, int>> head_of;
  for (size_t i = 0; i < n; ++i)
    for (int p = 0; p < 4; ++p) {
      const auto& t = d.crossings()[i].arc;
      bool incoming = (p == 0) || (d.over_in_3(i) ? p == 3 : p == 1);
      if (incoming) head_of[t[p]] = {i, p};
    }
  auto next_arc = [&](int a) {
    auto [i, p] = head_of.at(a);
    const auto& t = d.crossings()[i].arc;
    return p == 0 ? t[2] : (d.over_in_3(i) ? t[1] : t[3]);
  };

  std::set<int> seen_arcs;
  std::vector<bool> visited(n, false);
  for (const auto& [start, occ] : head_of) {
    if (seen_arcs.count(start)) continue;
    int a = start;
    do {
      seen_arcs.insert(a);
      auto [i, p] = head_of.at(a);
      if (!visited[i]) {
        visited[i] = true;
        if (p == 0) return static_cast<int>(i);  // arrived under first
      }
      a = next_arc(a);
    } while (a != start);
  }
  return -1;
}

inline LaurentPoly conway_resolve(
    LinkDiagram d, std::unordered_map<std::string, LaurentPoly>& memo) {
  // Exact reductions.
  while (true) {
    if (d.free_loops() > 0 && (d.crossing_count() > 0 || d.free_loops() > 1))
      return LaurentPoly::zero();  // split link
    bool stripped = false;
    for (size_t i = 0; i < d.crossing_count(); ++i)
      if (d.is_kink(i)) {
        d = d.kink_removed(i);
        stripped = true;
        break;
      }
    if (!stripped) break;
  }
  if (d.crossing_count() == 0)
    return d.free_loops() == 1 ? LaurentPoly::one() : LaurentPoly::zero();
  if (d.split_components().size() > 1) return LaurentPoly::zero();

  std::string key = d.canonical_key();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int v = first_violation(d);
  LaurentPoly result;
  if (v < 0) {
    result = d.components() == 1 ? LaurentPoly::one() : LaurentPoly::zero();
  } else {
    int s = d.crossing_sign(v);
    LaurentPoly switched = conway_resolve(d.with_switched_crossing(v), memo);
    LaurentPoly smoothed = conway_resolve(d.oriented_skein(v).zero, memo);
    result = switched + LaurentPoly::monomial(1, s) * smoothed;
  }
  if (memo.size() < bracket_cache_limit()) memo.emplace(std::move(key), result);
  return result;
}

}  // namespace detail

// Conway polynomial in z. Requires an oriented diagram.
inline LaurentPoly conway_polynomial(const LinkDiagram& d) {
  if (!d.oriented())
    throw std::invalid_argument("conway_polynomial: needs orientation");
  if (d.crossing_count() == 0 && d.free_loops() == 0)
    throw std::invalid_argument("conway_polynomial: empty diagram");
  static thread_local std::unordered_map<std::string, LaurentPoly> memo;
  LaurentPoly r = detail::conway_resolve(d, memo);
  if (!r.is_zero() && r.trailing_term().first < 0)
    throw std::logic_error("conway_polynomial: negative z exponent");
  return r;
}

}  // namespace skein
