#pragma once

// The s-weak order on tree-inversion sets: comparison, join/meet through the
// transitive closure, tree-ascents, rotations and the Hasse diagram.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "slattice/core.hpp"

namespace slattice {

namespace detail {
inline void same_n(const MultiInversionSet& I, const MultiInversionSet& J) {
  if (I.n() != J.n()) throw std::domain_error("inversion sets of different sizes");
}
inline void same_signature(const SDecreasingTree& T, const SDecreasingTree& R) {
  if (!(T.signature() == R.signature())) throw std::domain_error("trees have different signatures");
}
inline void debug_check(const MultiInversionSet& I, const WeakComposition& s) {
#ifndef NDEBUG
  assert(validate(I, s).ok());
#else
  (void)I;
  (void)s;
#endif
}
}  // namespace detail

// T <= R iff every cardinality of T is at most the one of R.
inline bool leq(const MultiInversionSet& I, const MultiInversionSet& J) {
  detail::same_n(I, J);
  const auto& a = I.cards();
  const auto& b = J.cards();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

inline bool leq(const SDecreasingTree& T, const SDecreasingTree& R) {
  detail::same_signature(T, R);
  return leq(inversions(T), inversions(R));
}

inline MultiInversionSet inv_union(const MultiInversionSet& I, const MultiInversionSet& J) {
  detail::same_n(I, J);
  MultiInversionSet U(I.n());
  for (int y = 2; y <= I.n(); ++y)
    for (int x = 1; x < y; ++x) U.set(y, x, std::max(I(y, x), J(y, x)));
  return U;
}

// Relaxation card(c,a) <- max(card(c,a), card(c,b)) whenever card(b,a) > 0,
// repeated until nothing changes. Sweeping c upwards and a downwards makes the
// first pass reach the fixed point; the second one only confirms it.
inline MultiInversionSet transitive_closure(MultiInversionSet I) {
  const int n = I.n();
  for (bool changed = true; changed;) {
    changed = false;
    for (int c = 3; c <= n; ++c)
      for (int a = c - 2; a >= 1; --a) {
        int best = I(c, a);
        for (int b = a + 1; b < c; ++b)
          if (I(b, a) > 0) best = std::max(best, I(c, b));
        if (best != I(c, a)) {
          I.set(c, a, best);
          changed = true;
        }
      }
  }
  return I;
}

inline MultiInversionSet join(const WeakComposition& s, const MultiInversionSet& I, const MultiInversionSet& J) {
  MultiInversionSet K = transitive_closure(inv_union(I, J));
  detail::debug_check(K, s);
  return K;
}

inline MultiInversionSet meet(const WeakComposition& s, const MultiInversionSet& I, const MultiInversionSet& J) {
  return mirror(s, join(s, mirror(s, I), mirror(s, J)));
}

inline SDecreasingTree join(const SDecreasingTree& T, const SDecreasingTree& R) {
  detail::same_signature(T, R);
  return construct_tree(T.signature(), join(T.signature(), inversions(T), inversions(R)));
}

inline SDecreasingTree meet(const SDecreasingTree& T, const SDecreasingTree& R) {
  detail::same_signature(T, R);
  return construct_tree(T.signature(), meet(T.signature(), inversions(T), inversions(R)));
}

// ---------------------------------------------------------------------------
// ascents and rotations

struct TreeAscent {
  int a = 0, c = 0;
  auto operator<=>(const TreeAscent&) const = default;
  std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(c) + ")"; }
};

// x is a descendant of a iff no ancestor above a separates them.
inline bool is_descendant(const MultiInversionSet& I, int x, int a) {
  if (x >= a) return false;
  for (int d = a + 1; d <= I.n(); ++d)
    if (I(d, x) != I(d, a)) return false;
  return true;
}

inline bool is_tree_ascent(const WeakComposition& s, const MultiInversionSet& I, int a, int c) {
  const int n = s.length();
  if (!(1 <= a && a < c && c <= n)) return false;
  for (int d = c + 1; d <= n; ++d)
    if (I(d, c) != I(d, a)) return false;
  if (I(c, a) >= s(c)) return false;
  for (int b = a + 1; b < c; ++b)
    if (I(c, b) == I(c, a) && I(b, a) != s(b)) return false;
  if (s(a) > 0)
    for (int x = 1; x < a; ++x)
      if (I(a, x) == s(a) && I(c, x) <= I(c, a)) return false;
  return true;
}

inline std::vector<TreeAscent> tree_ascents(const WeakComposition& s, const MultiInversionSet& I) {
  std::vector<TreeAscent> out;
  for (int a = 1; a <= s.length(); ++a)
    for (int c = a + 1; c <= s.length(); ++c)
      if (is_tree_ascent(s, I, a, c)) out.push_back({a, c});
  return out;
}

inline std::vector<TreeAscent> tree_ascents(const SDecreasingTree& T) {
  return tree_ascents(T.signature(), inversions(T));
}

// Increment card(c,x) for x = a and every non-left descendant x of a.
// Shared by s-tree rotations and s-Tamari rotations; no ascent check here.
inline MultiInversionSet apply_rotation(const MultiInversionSet& I, int a, int c) {
  MultiInversionSet J = I;
  J.add(c, a);
  for (int x = 1; x < a; ++x)
    if (I(a, x) > 0 && is_descendant(I, x, a)) J.add(c, x);
  return J;
}

inline MultiInversionSet rotate(const WeakComposition& s, const MultiInversionSet& I, TreeAscent asc) {
  if (!is_tree_ascent(s, I, asc.a, asc.c)) throw std::domain_error(asc.str() + " is not a tree-ascent");
  MultiInversionSet J = apply_rotation(I, asc.a, asc.c);
  detail::debug_check(J, s);
  return J;
}

inline SDecreasingTree rotate(const SDecreasingTree& T, TreeAscent asc) {
  return construct_tree(T.signature(), rotate(T.signature(), inversions(T), asc));
}

inline std::vector<std::pair<MultiInversionSet, TreeAscent>> covers(const WeakComposition& s,
                                                                    const MultiInversionSet& I) {
  std::vector<std::pair<MultiInversionSet, TreeAscent>> out;
  for (auto asc : tree_ascents(s, I)) out.emplace_back(apply_rotation(I, asc.a, asc.c), asc);
  return out;
}

inline std::vector<std::pair<SDecreasingTree, TreeAscent>> covers(const SDecreasingTree& T) {
  std::vector<std::pair<SDecreasingTree, TreeAscent>> out;
  for (auto& [J, asc] : covers(T.signature(), inversions(T)))
    out.emplace_back(construct_tree(T.signature(), J), asc);
  return out;
}

// ---------------------------------------------------------------------------
// Hasse diagrams

struct HasseEdge {
  std::size_t from = 0, to = 0;
  TreeAscent label;
  auto operator<=>(const HasseEdge&) const = default;
};

struct HasseDiagram {
  WeakComposition s;
  std::vector<MultiInversionSet> elements;  // canonical order
  std::vector<HasseEdge> edges;             // sorted by (from, label)

  std::size_t size() const { return elements.size(); }

  std::size_t index_of(const MultiInversionSet& I) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), I);
    if (it == elements.end() || *it != I) throw std::out_of_range("element not in diagram: " + I.key());
    return static_cast<std::size_t>(it - elements.begin());
  }
  bool contains(const MultiInversionSet& I) const {
    return std::binary_search(elements.begin(), elements.end(), I);
  }
  SDecreasingTree tree(std::size_t i) const { return construct_tree(s, elements.at(i)); }
};

// Builds a diagram on a sorted element list from a cover generator
// (element -> list of (upper element, label)).
template <class CoverFn>
HasseDiagram build_hasse(const WeakComposition& s, std::vector<MultiInversionSet> elements, CoverFn&& cover_fn) {
  HasseDiagram H{s, std::move(elements), {}};
  for (std::size_t i = 0; i < H.size(); ++i)
    for (auto& [J, label] : cover_fn(H.elements[i])) H.edges.push_back({i, H.index_of(J), label});
  std::sort(H.edges.begin(), H.edges.end(), [](const HasseEdge& x, const HasseEdge& y) {
    return std::tie(x.from, x.label, x.to) < std::tie(y.from, y.label, y.to);
  });
  return H;
}

inline HasseDiagram hasse(const WeakComposition& s) {
  return build_hasse(s, enumerate_inversion_sets(s),
                     [&](const MultiInversionSet& I) { return covers(s, I); });
}

}  // namespace slattice
