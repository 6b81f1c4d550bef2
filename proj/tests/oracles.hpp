#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is brute force and deliberately shares no code path with
// the headers under test beyond the basic data types.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "slattice/core.hpp"

namespace oracle {

using slattice::MultiInversionSet;
using slattice::SDecreasingTree;
using slattice::WeakComposition;

// All signatures of length 1..max_n with entries in 0..max_entry.
inline std::vector<WeakComposition> sweep(int max_n = 4, int max_entry = 2) {
  std::vector<WeakComposition> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<int> e(n, 0);
    for (;;) {
      out.emplace_back(e);
      int k = n - 1;
      while (k >= 0 && e[k] == max_entry) e[k--] = 0;
      if (k < 0) break;
      ++e[k];
    }
  }
  return out;
}

// card(y,x) from a flat reading of the tree: every node writes a marker for
// itself, then for each gap between its children a "y-gap" marker. card(y,x)
// is the number of y-gap markers before the marker of x.
inline int gap_card(const SDecreasingTree& T, int y, int x) {
  std::vector<std::pair<int, bool>> seq;  // (label, is_gap)
  std::function<void(int)> visit = [&](int v) {
    if (v == 0) return;
    seq.push_back({v, false});
    const auto& ks = T.children(v);
    for (std::size_t j = 0; j < ks.size(); ++j) {
      if (j) seq.push_back({v, true});
      visit(ks[j]);
    }
  };
  visit(T.root());
  int gaps = 0;
  for (auto [v, gap] : seq) {
    if (gap && v == y) ++gaps;
    if (!gap && v == x) return gaps;
  }
  return -1;
}

// Trees straight from the recursive description: the root of a label set is
// its maximum and every other label picks one of the s(root)+1 subtrees.
inline std::vector<std::vector<std::vector<int>>> all_child_tables(const WeakComposition& s) {
  const int n = s.length();
  using Table = std::vector<std::vector<int>>;
  // worklist of label sets still to become subtrees, with the slot they hang from
  struct Pending {
    std::vector<int> labels;
    int parent, slot;
  };
  std::vector<Table> out;
  std::function<void(Table, std::vector<Pending>)> go = [&](Table t, std::vector<Pending> todo) {
    if (todo.empty()) {
      out.push_back(t);
      return;
    }
    Pending p = todo.back();
    todo.pop_back();
    if (p.labels.empty()) {
      go(std::move(t), std::move(todo));
      return;
    }
    int c = *std::max_element(p.labels.begin(), p.labels.end());
    if (p.parent) t[p.parent - 1][p.slot] = c;
    t[c - 1].assign(s(c) + 1, 0);
    std::vector<int> rest;
    for (int a : p.labels)
      if (a != c) rest.push_back(a);
    const int k = s(c) + 1;
    std::vector<int> choice(rest.size(), 0);
    for (;;) {
      auto todo2 = todo;
      for (int i = 0; i < k; ++i) {
        Pending q{{}, c, i};
        for (std::size_t r = 0; r < rest.size(); ++r)
          if (choice[r] == i) q.labels.push_back(rest[r]);
        todo2.push_back(q);
      }
      go(t, todo2);
      std::size_t r = 0;
      while (r < choice.size() && choice[r] == k - 1) choice[r++] = 0;
      if (r == choice.size()) break;
      ++choice[r];
    }
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  go(Table(n), {Pending{all, 0, 0}});
  return out;
}

inline bool pointwise_leq(const MultiInversionSet& a, const MultiInversionSet& b) {
  for (std::size_t k = 0; k < a.cards().size(); ++k)
    if (a.cards()[k] > b.cards()[k]) return false;
  return true;
}

// Minimal strict upper bounds of element i.
inline std::set<MultiInversionSet> brute_covers(const std::vector<MultiInversionSet>& els, std::size_t i) {
  std::vector<std::size_t> up;
  for (std::size_t j = 0; j < els.size(); ++j)
    if (j != i && pointwise_leq(els[i], els[j])) up.push_back(j);
  std::set<MultiInversionSet> out;
  for (auto j : up) {
    bool minimal = true;
    for (auto k : up)
      if (k != j && pointwise_leq(els[k], els[j])) minimal = false;
    if (minimal) out.insert(els[j]);
  }
  return out;
}

// Least upper bound / greatest lower bound by scanning the poset; -1 if none.
inline long brute_lub(const std::vector<MultiInversionSet>& els, std::size_t i, std::size_t j) {
  std::vector<std::size_t> ub;
  for (std::size_t k = 0; k < els.size(); ++k)
    if (pointwise_leq(els[i], els[k]) && pointwise_leq(els[j], els[k])) ub.push_back(k);
  for (auto u : ub)
    if (std::all_of(ub.begin(), ub.end(), [&](std::size_t w) { return pointwise_leq(els[u], els[w]); }))
      return static_cast<long>(u);
  return -1;
}

inline long brute_glb(const std::vector<MultiInversionSet>& els, std::size_t i, std::size_t j) {
  std::vector<std::size_t> lb;
  for (std::size_t k = 0; k < els.size(); ++k)
    if (pointwise_leq(els[k], els[i]) && pointwise_leq(els[k], els[j])) lb.push_back(k);
  for (auto u : lb)
    if (std::all_of(lb.begin(), lb.end(), [&](std::size_t w) { return pointwise_leq(els[w], els[u]); }))
      return static_cast<long>(u);
  return -1;
}

// Transitive closure by enumerating decreasing paths with positive edges.
inline MultiInversionSet path_closure(const MultiInversionSet& I) {
  const int n = I.n();
  MultiInversionSet out(n);
  for (int c = 2; c <= n; ++c)
    for (int b = 1; b < c; ++b) {
      // everything reachable from b by positive edges gets at least I(c,b)
      std::vector<int> stack{b};
      std::set<int> seen{b};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.set(c, v, std::max(out(c, v), I(c, b)));
        for (int w = 1; w < v; ++w)
          if (I(v, w) > 0 && !seen.count(w)) {
            seen.insert(w);
            stack.push_back(w);
          }
      }
    }
  return out;
}

// Tree-ascent straight from the tree shape.
inline bool shape_ascent(const SDecreasingTree& T, int a, int c) {
  if (!T.is_descendant(a, c)) return false;
  const auto& s = T.signature();
  // child of c containing a, and the chain between them
  int v = a;
  while (T.parent(v) != c) {
    int b = T.parent(v);
    if (T.child_index(v) != s(b)) return false;  // a must go through right children
    v = b;
  }
  if (T.child_index(v) == s(c)) return false;  // not in the right child of c
  if (s(a) > 0 && T.children(a).back() != 0) return false;
  return true;
}

// a ... b ... a with a < b
inline bool contains_121(const std::vector<int>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      for (std::size_t k = j + 1; k < w.size(); ++k)
        if (w[i] == w[k] && w[j] > w[i]) return true;
  return false;
}

// Horizontal distance by scanning the grid: walk nu and remember the last x
// reached at each height.
inline int grid_horiz(const std::string& nu, int x, int y) {
  int cx = 0, cy = 0, best = -1;
  if (cy == y) best = cx;
  for (char ch : nu) {
    if (ch == 'E') ++cx;
    else ++cy;
    if (cy == y) best = std::max(best, cx);
  }
  return best - x;
}

}  // namespace oracle
