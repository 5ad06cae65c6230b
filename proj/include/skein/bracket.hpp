#pragma once

// Kauffman bracket evaluation.
//
// Two independent engines:
//  * statesum_bracket - direct sum over all 2^n smoothing states (oracle,
//    capped at 24 crossings);
//  * kauffman_bracket - memoized skein recursion with exact reductions
//    (free-loop stripping, split factoring, Reidemeister-1 kink stripping).
//
// Normalizations on top of the bracket: the Kauffman polynomial
// (-A^3)^{-w} <L> and the Jones polynomial via A -> t^{-1/4}. Jones values
// are returned as Laurent polynomials in q = t^{1/4}.

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

namespace skein {

inline LaurentPoly delta_power(int64_t k) {
  if (k < 0) throw std::domain_error("delta_power: negative power");
  LaurentPoly r = LaurentPoly::one();
  for (int64_t i = 0; i < k; ++i) r *= bracket_delta();
  return r;
}

inline size_t bracket_cache_limit() {
  static const size_t limit = [] {
    if (const char* s = std::getenv("SKEIN_MAX_CACHE")) {
      long long v = std::atoll(s);
      if (v > 0) return static_cast<size_t>(v);
    }
    return static_cast<size_t>(1) << 20;
  }();
  return limit;
}

// Oracle engine: explicit state sum with union-find loop counting.
inline LaurentPoly statesum_bracket(const LinkDiagram& d) {
  size_t n = d.crossing_count();
  if (n > 24)
    throw std::invalid_argument("statesum_bracket: more than 24 crossings");
  if (n == 0) {
    if (d.free_loops() == 0)
      throw std::invalid_argument("statesum_bracket: empty diagram");
    return delta_power(d.free_loops() - 1);
  }

  std::map<int, int> arc_index;
  for (const auto& c : d.crossings())
    for (int a : c.arc) arc_index.emplace(a, 0);
  int next = 0;
  for (auto& [a, idx] : arc_index) idx = next++;

  LaurentPoly total;
  for (uint64_t state = 0; state < (uint64_t(1) << n); ++state) {
    detail::UnionFind uf(next);
    int loops = d.free_loops();
    int exponent = 0;
    for (size_t i = 0; i < n; ++i) {
      const auto& t = d.crossings()[i].arc;
      bool a_type = !((state >> i) & 1);
      exponent += a_type ? 1 : -1;
      int p0 = a_type ? t[1] : t[3];
      int p1 = a_type ? t[3] : t[1];
      uf.unite(arc_index[t[0]], arc_index[p0]);
      uf.unite(arc_index[t[2]], arc_index[p1]);
    }
    // Every occurrence is paired by some join, so each union-find class is a
    // closed circle.
    std::set<int> roots;
    for (const auto& [a, idx] : arc_index) roots.insert(uf.find(idx));
    loops += static_cast<int>(roots.size());
    total += LaurentPoly::monomial(exponent) * delta_power(loops - 1);
  }
  return total;
}

namespace detail {

inline LaurentPoly bracket_connected(const LinkDiagram& d,
                                     std::unordered_map<std::string,
                                                        LaurentPoly>& memo);

// Strip one Reidemeister-1 kink if present: returns true and multiplies
// `factor`, replacing d by the reduced diagram.
inline bool strip_kink(LinkDiagram& d, LaurentPoly& factor) {
  for (size_t i = 0; i < d.crossing_count(); ++i) {
    const auto& t = d.crossings()[i].arc;
    if (t[0] == t[1] || t[2] == t[3]) {
      factor *= LaurentPoly::monomial(3, -1);
      d = d.smoothed(i, /*a_type=*/false);
      return true;
    }
    if (t[0] == t[3] || t[1] == t[2]) {
      factor *= LaurentPoly::monomial(-3, -1);
      d = d.smoothed(i, /*a_type=*/true);
      return true;
    }
  }
  return false;
}

inline LaurentPoly bracket_reduce(const LinkDiagram& d0,
                                  std::unordered_map<std::string, LaurentPoly>&
                                      memo) {
  LinkDiagram d = d0;
  LaurentPoly factor = delta_power(d.free_loops());
  d = LinkDiagram(d.crossings(), 0);
  while (true) {
    if (!strip_kink(d, factor)) break;
    factor *= delta_power(d.free_loops());
    d = LinkDiagram(d.crossings(), 0);
  }
  if (d.crossing_count() == 0) {
    // factor already contains delta per circle; the bracket normalization
    // <unknot> = 1 divides one delta out at the top-level entry point.
    return factor;
  }
  auto pieces = d.split_components();
  LaurentPoly result = factor;
  for (const auto& piece : pieces)
    result *= bracket_connected(d.restricted_to(piece), memo);
  return result;
}

inline LaurentPoly bracket_connected(const LinkDiagram& d,
                                     std::unordered_map<std::string,
                                                        LaurentPoly>& memo) {
  std::string key = d.canonical_key();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const auto& t = d.crossings().front().arc;
  (void)t;
  LaurentPoly a_side = bracket_reduce(d.smoothed(0, true), memo);
  LaurentPoly b_side = bracket_reduce(d.smoothed(0, false), memo);
  LaurentPoly result = LaurentPoly::monomial(1) * a_side +
                       LaurentPoly::monomial(-1) * b_side;
  if (memo.size() < bracket_cache_limit()) memo.emplace(std::move(key), result);
  return result;
}

}  // namespace detail

// Skein-recursion engine. Normalized so the bracket of one circle is 1.
inline LaurentPoly kauffman_bracket(const LinkDiagram& d) {
  if (d.crossing_count() == 0) {
    if (d.free_loops() == 0)
      throw std::invalid_argument("kauffman_bracket: empty diagram");
    return delta_power(d.free_loops() - 1);
  }
  static thread_local std::unordered_map<std::string, LaurentPoly> memo;
  LaurentPoly raw = detail::bracket_reduce(d.forget_orientation(), memo);
  // bracket_reduce counts one delta per closed circle; divide one out.
  auto q = raw.divide_exact(bracket_delta());
  if (!q) throw std::logic_error("kauffman_bracket: delta normalization");
  return *q;
}

// (-A^3)^{-w(L)} <L>, invariant under all Reidemeister moves.
inline LaurentPoly kauffman_polynomial(const LinkDiagram& d) {
  if (!d.oriented())
    throw std::invalid_argument("kauffman_polynomial: needs orientation");
  int w = d.writhe();
  return LaurentPoly::monomial_pow(3, -1, -static_cast<int64_t>(w)) *
         kauffman_bracket(d);
}

// Jones polynomial as a Laurent polynomial in q = t^(1/4): A -> q^-1.
inline LaurentPoly jones_polynomial(const LinkDiagram& d) {
  return kauffman_polynomial(d).invert_variable();
}

inline std::string jones_to_string(const LaurentPoly& jones_in_q) {
  return jones_in_q.to_string("t", /*quarter_exponents=*/true);
}

}  // namespace skein
