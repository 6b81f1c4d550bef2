#pragma once

// s-Tamari trees, Tamari rotations, the projections pi_down / pi_up and the
// s-Tamari congruence classes.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slattice/core.hpp"
#include "slattice/weak_order.hpp"

namespace slattice {

inline bool is_s_tamari(const MultiInversionSet& I) {
  for (int c = 3; c <= I.n(); ++c)
    for (int b = 2; b < c; ++b)
      for (int a = 1; a < b; ++a)
        if (I(c, a) > I(c, b)) return false;
  return true;
}

inline bool is_s_tamari(const SDecreasingTree& T) { return is_s_tamari(inversions(T)); }

// (a,c) with a sitting in a child slot of c other than the last one. When
// s(c) = 0 the only child counts as the right one.
inline std::vector<TreeAscent> tamari_ascents(const SDecreasingTree& T) {
  if (!is_s_tamari(T)) throw std::domain_error("tamari_ascents needs an s-Tamari tree");
  std::vector<TreeAscent> out;
  for (int c = 1; c <= T.size(); ++c) {
    const auto& ks = T.children(c);
    for (std::size_t j = 0; j + 1 < ks.size(); ++j)
      if (ks[j] != SDecreasingTree::leaf) out.push_back({ks[j], c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<TreeAscent> tamari_ascents(const WeakComposition& s, const MultiInversionSet& I) {
  return tamari_ascents(construct_tree(s, I));
}

inline MultiInversionSet tamari_rotate(const WeakComposition& s, const MultiInversionSet& I, TreeAscent asc) {
  auto ascs = tamari_ascents(s, I);
  if (!std::binary_search(ascs.begin(), ascs.end(), asc))
    throw std::domain_error(asc.str() + " is not a Tamari-ascent");
  MultiInversionSet J = apply_rotation(I, asc.a, asc.c);
  detail::debug_check(J, s);
  return J;
}

inline SDecreasingTree tamari_rotate(const SDecreasingTree& T, TreeAscent asc) {
  return construct_tree(T.signature(), tamari_rotate(T.signature(), inversions(T), asc));
}

inline std::vector<std::pair<MultiInversionSet, TreeAscent>> tamari_covers(const WeakComposition& s,
                                                                           const MultiInversionSet& I) {
  std::vector<std::pair<MultiInversionSet, TreeAscent>> out;
  for (auto asc : tamari_ascents(s, I)) out.emplace_back(apply_rotation(I, asc.a, asc.c), asc);
  return out;
}

inline std::vector<MultiInversionSet> enumerate_tamari(const WeakComposition& s) {
  auto all = enumerate_inversion_sets(s);
  std::vector<MultiInversionSet> out;
  for (auto& I : all)
    if (is_s_tamari(I)) out.push_back(std::move(I));
  return out;
}

inline HasseDiagram tamari_hasse(const WeakComposition& s) {
  return build_hasse(s, enumerate_tamari(s), [&](const MultiInversionSet& I) { return tamari_covers(s, I); });
}

// ---------------------------------------------------------------------------
// projections

inline MultiInversionSet pi_down(const MultiInversionSet& I) {
  MultiInversionSet Q(I.n());
  for (int c = 2; c <= I.n(); ++c) {
    int m = I(c, c - 1);
    for (int a = c - 1; a >= 1; --a) {
      m = std::min(m, I(c, a));
      Q.set(c, a, m);
    }
  }
  return Q;
}

inline MultiInversionSet pi_up(const WeakComposition& s, const MultiInversionSet& I) {
  MultiInversionSet R = I;
  for (int c = 3; c <= I.n(); ++c)
    for (int a = 1; a < c - 1; ++a)
      for (int b = a + 1; b < c; ++b)
        if (I(b, a) == s(b)) {
          R.set(c, a, s(c));
          break;
        }
  return R;
}

inline SDecreasingTree pi_down(const SDecreasingTree& T) {
  return construct_tree(T.signature(), pi_down(inversions(T)));
}

inline SDecreasingTree pi_up(const SDecreasingTree& T) {
  return construct_tree(T.signature(), pi_up(T.signature(), inversions(T)));
}

inline bool is_s_max_tamari(const WeakComposition& s, const MultiInversionSet& I) {
  for (int b = 2; b <= I.n(); ++b)
    for (int a = 1; a < b; ++a)
      if (I(b, a) == s(b))
        for (int c = b + 1; c <= I.n(); ++c)
          if (I(c, a) != s(c)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// congruence

// The quotient description holds when s has no zero past the first entry
// (s(1) never shows up in an inversion), and trivially when s is all zeros.
inline bool quotient_supported(const WeakComposition& s) {
  const auto& e = s.entries();
  bool all_zero = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
  return all_zero || std::none_of(e.begin() + 1, e.end(), [](int v) { return v == 0; });
}

inline void require_quotient_support(const WeakComposition& s) {
  if (!quotient_supported(s))
    throw unsupported_signature(
        "s = " + s.str() +
        " has a zero entry after the first position; the s-Tamari lattice is then not a quotient of the "
        "s-weak order in general. For s = (0,0,1) the s-weak order is a square while the s-Tamari lattice "
        "is a chain of 3 elements, so it can not be obtained as a quotient lattice.");
}

inline bool is_congruence_ascent(const WeakComposition& s, const MultiInversionSet& I, TreeAscent asc) {
  require_quotient_support(s);
  if (!is_tree_ascent(s, I, asc.a, asc.c)) throw std::domain_error(asc.str() + " is not a tree-ascent");
  for (int b = asc.a + 1; b < asc.c; ++b)
    if (I(b, asc.a) == s(b)) return true;
  return false;
}

struct TamariClass {
  MultiInversionSet bottom, top;
  std::vector<MultiInversionSet> members;  // canonical order
};

enum class Projection { down, up };

// Fibers of one projection, keyed and ordered by their image. No congruence
// claim is attached, so zero entries are accepted here.
inline std::vector<std::vector<MultiInversionSet>> projection_fibers(const WeakComposition& s, Projection dir) {
  std::map<MultiInversionSet, std::vector<MultiInversionSet>> fib;
  for (auto& I : enumerate_inversion_sets(s)) {
    auto key = dir == Projection::down ? pi_down(I) : pi_up(s, I);
    fib[key].push_back(std::move(I));
  }
  std::vector<std::vector<MultiInversionSet>> out;
  for (auto& [k, v] : fib) out.push_back(std::move(v));
  return out;
}

inline std::vector<TamariClass> tamari_classes(const WeakComposition& s) {
  require_quotient_support(s);
  std::vector<TamariClass> out;
  for (auto& members : projection_fibers(s, Projection::down)) {
    auto bottom = pi_down(members.front());
    auto top = pi_up(s, members.front());
    out.push_back({std::move(bottom), std::move(top), std::move(members)});
  }
  return out;
}

}  // namespace slattice
