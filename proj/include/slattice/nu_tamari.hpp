#pragma once

// nu-paths, nu-trees, right flushing, and the maps from s-Tamari trees:
// phi (to nu(reverse s)-paths) and psi (to nu(reverse s)-trees).
//
// Lattice points are (x, y) with the origin at the start of nu, x east and
// y north.

#include <algorithm>
#include <compare>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slattice/core.hpp"
#include "slattice/lattice_props.hpp"
#include "slattice/tamari.hpp"

namespace slattice {

struct Point {
  int x = 0, y = 0;
  auto operator<=>(const Point&) const = default;
  std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

inline std::string nu_of(const WeakComposition& s) {
  std::string w;
  for (int i = 1; i <= s.length(); ++i) {
    w += 'N';
    w.append(static_cast<std::size_t>(s(i)), 'E');
  }
  return w;
}

namespace detail {
inline void check_word(const std::string& w) {
  for (char ch : w)
    if (ch != 'N' && ch != 'E') throw std::domain_error("lattice paths are words over {N,E}, got '" + w + "'");
}
}  // namespace detail

// Right end of nu at each height: xmax[y] for y = 0..height.
inline std::vector<int> nu_profile(const std::string& nu) {
  detail::check_word(nu);
  std::vector<int> xmax{0};
  int x = 0;
  for (char ch : nu) {
    if (ch == 'E') {
      xmax.back() = ++x;
    } else {
      xmax.push_back(x);
    }
  }
  return xmax;
}

inline std::vector<Point> path_points(const std::string& w) {
  std::vector<Point> pts{{0, 0}};
  for (char ch : w) {
    Point p = pts.back();
    (ch == 'E' ? p.x : p.y) += 1;
    pts.push_back(p);
  }
  return pts;
}

inline bool in_region(const std::vector<int>& xmax, Point p) {
  return p.y >= 0 && p.y < static_cast<int>(xmax.size()) && p.x >= 0 && p.x <= xmax[p.y];
}

class NuPath {
 public:
  NuPath(std::string nu, std::string steps) : nu_(std::move(nu)), steps_(std::move(steps)) {
    detail::check_word(steps_);
    auto xmax = nu_profile(nu_);
    if (std::count(steps_.begin(), steps_.end(), 'N') != std::count(nu_.begin(), nu_.end(), 'N') ||
        steps_.size() != nu_.size())
      throw std::domain_error("path " + steps_ + " does not share its endpoints with nu = " + nu_);
    for (auto p : path_points(steps_))
      if (!in_region(xmax, p)) throw std::domain_error("path " + steps_ + " goes below nu = " + nu_);
  }

  const std::string& nu() const { return nu_; }
  const std::string& steps() const { return steps_; }
  std::size_t points() const { return steps_.size() + 1; }
  std::vector<Point> point_list() const { return path_points(steps_); }

  auto operator<=>(const NuPath&) const = default;

 private:
  std::string nu_, steps_;
};

// East steps that fit to the right of lattice point `index` without crossing nu.
inline int horiz(const NuPath& path, std::size_t index) {
  if (index >= path.points()) throw std::domain_error("point index out of range");
  auto p = path_points(path.steps())[index];
  return nu_profile(path.nu())[p.y] - p.x;
}

inline bool is_valley(const NuPath& path, std::size_t index) {
  const auto& w = path.steps();
  return index >= 1 && index < w.size() && w[index - 1] == 'E' && w[index] == 'N';
}

inline std::vector<std::size_t> valleys(const NuPath& path) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < path.steps().size(); ++i)
    if (is_valley(path, i)) out.push_back(i);
  return out;
}

// Swap the E before valley p with the subpath from p to the next point whose
// horizontal distance equals that of p (equality, not <=).
inline NuPath nu_rotate(const NuPath& path, std::size_t index) {
  if (!is_valley(path, index)) throw std::domain_error("point " + std::to_string(index) + " is not a valley");
  const auto pts = path_points(path.steps());
  const auto xmax = nu_profile(path.nu());
  auto h = [&](std::size_t i) { return xmax[pts[i].y] - pts[i].x; };
  std::size_t q = index + 1;
  while (q < pts.size() && h(q) != h(index)) ++q;
  if (q == pts.size()) throw std::domain_error("valley has no later point at the same horizontal distance");
  const auto& w = path.steps();
  std::string out = w.substr(0, index - 1) + w.substr(index, q - index) + 'E' + w.substr(q);
  return NuPath(path.nu(), out);
}

inline std::vector<std::pair<NuPath, std::size_t>> nu_path_covers(const NuPath& path) {
  std::vector<std::pair<NuPath, std::size_t>> out;
  for (auto v : valleys(path)) out.emplace_back(nu_rotate(path, v), v);
  return out;
}

// Paths are fixed by the heights of their east steps: non-decreasing and at
// least the height of the matching east step of nu.
inline std::vector<NuPath> enumerate_nu_paths(const std::string& nu) {
  detail::check_word(nu);
  std::vector<int> floor_h;
  int y = 0;
  for (char ch : nu) {
    if (ch == 'E')
      floor_h.push_back(y);
    else
      ++y;
  }
  const int H = y;
  std::vector<NuPath> out;
  std::vector<int> hs;
  std::function<void(int)> rec = [&](int lo) {
    if (hs.size() == floor_h.size()) {
      std::string w;
      int cur = 0;
      for (int h : hs) {
        w.append(static_cast<std::size_t>(h - cur), 'N');
        w += 'E';
        cur = h;
      }
      w.append(static_cast<std::size_t>(H - cur), 'N');
      out.emplace_back(nu, w);
      return;
    }
    for (int h = std::max(lo, floor_h[hs.size()]); h <= H; ++h) {
      hs.push_back(h);
      rec(h);
      hs.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// phi: s-Tamari trees -> nu(reverse s)-paths

namespace detail {
// Reverse preorder: node, then its subtrees from right to left. Leaves are
// reported as 0.
inline std::vector<int> reverse_preorder(const SDecreasingTree& T) {
  std::vector<int> seq;
  std::function<void(int)> visit = [&](int v) {
    seq.push_back(v);
    if (v == SDecreasingTree::leaf) return;
    const auto& ks = T.children(v);
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) visit(*it);
  };
  visit(T.root());
  return seq;
}
inline void require_tamari(const SDecreasingTree& T) {
  if (!is_s_tamari(T)) throw std::domain_error("expected an s-Tamari tree");
}
}  // namespace detail

inline NuPath tree_to_path(const SDecreasingTree& T) {
  detail::require_tamari(T);
  std::string w;
  for (int v : detail::reverse_preorder(T)) w += v == SDecreasingTree::leaf ? 'E' : 'N';
  w.pop_back();
  return NuPath(nu_of(T.signature().reversed()), w);
}

// Position of each internal node (by label) along phi(T).
inline std::vector<std::size_t> tree_to_path_positions(const SDecreasingTree& T) {
  detail::require_tamari(T);
  std::vector<std::size_t> pos(static_cast<std::size_t>(T.size()) + 1, 0);
  auto seq = detail::reverse_preorder(T);
  for (std::size_t k = 0; k < seq.size(); ++k)
    if (seq[k] != SDecreasingTree::leaf) pos[static_cast<std::size_t>(seq[k])] = k;
  return pos;
}

// ---------------------------------------------------------------------------
// nu-trees

struct NuTree {
  std::string nu;
  std::vector<Point> points;  // sorted by (y desc, x asc)

  bool contains(Point p) const { return std::find(points.begin(), points.end(), p) != points.end(); }
  bool operator==(const NuTree&) const = default;
};

inline void sort_points(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.y != b.y ? a.y > b.y : a.x < b.x; });
}

inline std::vector<Point> region_points(const std::string& nu) {
  auto xmax = nu_profile(nu);
  std::vector<Point> out;
  for (int y = 0; y < static_cast<int>(xmax.size()); ++y)
    for (int x = 0; x <= xmax[y]; ++x) out.push_back({x, y});
  sort_points(out);
  return out;
}

// Incompatible when one is strictly south-west of the other and the
// south-east corner of their rectangle lies weakly above nu.
inline bool nu_compatible(const std::vector<int>& xmax, Point p, Point q) {
  const bool sw = p.x < q.x && p.y < q.y;
  const bool ne = p.x > q.x && p.y > q.y;
  if (!sw && !ne) return true;
  return !in_region(xmax, {std::max(p.x, q.x), std::min(p.y, q.y)});
}

inline bool is_nu_tree(const NuTree& t) {
  auto xmax = nu_profile(t.nu);
  if (t.points.size() != t.nu.size() + 1) return false;
  std::set<Point> mine(t.points.begin(), t.points.end());
  if (mine.size() != t.points.size()) return false;
  for (auto p : t.points)
    if (!in_region(xmax, p)) return false;
  for (std::size_t i = 0; i < t.points.size(); ++i)
    for (std::size_t j = i + 1; j < t.points.size(); ++j)
      if (!nu_compatible(xmax, t.points[i], t.points[j])) return false;
  for (auto q : region_points(t.nu)) {
    if (mine.count(q)) continue;
    bool fits = std::all_of(t.points.begin(), t.points.end(), [&](Point p) { return nu_compatible(xmax, p, q); });
    if (fits) return false;
  }
  return true;
}

// Rows from bottom to top, each filled from the right with the requested
// number of nodes, skipping columns above a node that was not the leftmost of
// its row.
inline NuTree right_flush_counts(const std::string& nu, const std::vector<int>& per_height) {
  auto xmax = nu_profile(nu);
  if (per_height.size() != xmax.size()) throw std::domain_error("one count per height of nu is needed");
  std::vector<bool> forbidden(static_cast<std::size_t>(xmax.back()) + 1, false);
  NuTree t{nu, {}};
  for (int y = 0; y < static_cast<int>(xmax.size()); ++y) {
    std::vector<int> row;
    for (int x = xmax[y]; x >= 0 && static_cast<int>(row.size()) < per_height[y]; --x)
      if (!forbidden[x]) row.push_back(x);
    if (static_cast<int>(row.size()) != per_height[y])
      throw std::domain_error("no room for " + std::to_string(per_height[y]) + " nodes at height " + std::to_string(y));
    for (std::size_t k = 0; k + 1 < row.size(); ++k) forbidden[row[k]] = true;  // row.back() is leftmost
    for (int x : row) t.points.push_back({x, y});
  }
  sort_points(t.points);
  return t;
}

inline NuTree right_flush(const NuPath& path) {
  std::vector<int> counts(nu_profile(path.nu()).size(), 0);
  for (auto p : path.point_list()) ++counts[p.y];
  return right_flush_counts(path.nu(), counts);
}

// psi: label every node by the number of internal nodes strictly before it in
// reverse preorder; there are as many nu-tree nodes at height i as labels i.
inline NuTree tree_to_nutree(const SDecreasingTree& T) {
  detail::require_tamari(T);
  std::vector<int> counts(static_cast<std::size_t>(T.size()) + 1, 0);
  int internal = 0;
  for (int v : detail::reverse_preorder(T)) {
    ++counts[internal];
    if (v != SDecreasingTree::leaf) ++internal;
  }
  return right_flush_counts(nu_of(T.signature().reversed()), counts);
}

namespace detail {
inline std::pair<const Point*, const Point*> above_and_right(const NuTree& t, Point q) {
  const Point *p = nullptr, *r = nullptr;
  for (const auto& u : t.points) {
    if (u.x == q.x && u.y > q.y && (!p || u.y < p->y)) p = &u;
    if (u.y == q.y && u.x > q.x && (!r || u.x < r->x)) r = &u;
  }
  return {p, r};
}
}  // namespace detail

// Nodes with another node above them and another to their right.
inline std::vector<Point> nu_tree_ascents(const NuTree& t) {
  std::vector<Point> out;
  for (auto q : t.points) {
    auto [p, r] = detail::above_and_right(t, q);
    if (p && r) out.push_back(q);
  }
  return out;
}

// Replace q by the point right of its nearest node above and above its
// nearest node to the right.
inline NuTree nu_tree_rotate(const NuTree& t, Point q) {
  if (!t.contains(q)) throw std::domain_error(q.str() + " is not a node of the nu-tree");
  auto [p, r] = detail::above_and_right(t, q);
  if (!p || !r) throw std::domain_error(q.str() + " is not a nu-ascent");
  Point q2{r->x, p->y};
  NuTree out{t.nu, {}};
  for (auto u : t.points) out.points.push_back(u == q ? q2 : u);
  sort_points(out.points);
  return out;
}

// ---------------------------------------------------------------------------
// isomorphism check for one signature

inline Verdict verify_nu_isomorphism(const WeakComposition& s) {
  check_limit(s);
  HasseDiagram T = tamari_hasse(s);
  const std::string nu = nu_of(s.reversed());
  Verdict v{"nu-iso", true, T.size(), 0, {}};

  std::vector<NuPath> phi;
  std::vector<NuTree> psi;
  for (std::size_t i = 0; i < T.size(); ++i) {
    auto tree = T.tree(i);
    phi.push_back(tree_to_path(tree));
    psi.push_back(tree_to_nutree(tree));
    if (!(right_flush(phi.back()) == psi.back())) v.fail("psi differs from right_flush of phi at [" + T.elements[i].key() + "]");
    if (!is_nu_tree(psi.back())) v.fail("psi of [" + T.elements[i].key() + "] is not a nu-tree");
    // horizontal distance grows by card(c,a) from parent c to child a
    auto pos = tree_to_path_positions(tree);
    for (int a = 1; a < tree.size(); ++a) {
      ++v.checked;
      int c = tree.parent(a);
      if (horiz(phi.back(), pos[a]) != horiz(phi.back(), pos[c]) + T.elements[i](c, a))
        v.fail("horizontal distance identity fails at (" + std::to_string(a) + "," + std::to_string(c) + ") of [" +
               T.elements[i].key() + "]");
    }
  }

  // phi is a bijection onto all nu-paths, psi is injective with the same count
  auto all_paths = enumerate_nu_paths(nu);
  std::vector<NuPath> sorted_phi = phi;
  std::sort(sorted_phi.begin(), sorted_phi.end());
  if (sorted_phi != all_paths) v.fail("phi is not a bijection onto nu-paths");
  std::set<std::vector<Point>> psi_set;
  for (const auto& t : psi) psi_set.insert(t.points);
  if (psi_set.size() != T.size()) v.fail("psi is not injective");

  // cover relations correspond
  using PathEdge = std::pair<std::string, std::string>;
  using TreeEdge = std::pair<std::vector<Point>, std::vector<Point>>;
  std::set<PathEdge> tam_paths, nu_paths;
  std::set<TreeEdge> tam_trees, nu_trees;
  for (const auto& e : T.edges) {
    tam_paths.insert({phi[e.from].steps(), phi[e.to].steps()});
    tam_trees.insert({psi[e.from].points, psi[e.to].points});
  }
  for (const auto& mu : all_paths)
    for (auto& [mu2, at] : nu_path_covers(mu)) nu_paths.insert({mu.steps(), mu2.steps()});
  for (const auto& t : psi)
    for (auto q : nu_tree_ascents(t)) {
      auto t2 = nu_tree_rotate(t, q);
      if (!is_nu_tree(t2)) v.fail("nu-tree rotation at " + q.str() + " leaves the nu-trees");
      nu_trees.insert({t.points, t2.points});
    }
  v.checked += T.edges.size();
  if (tam_paths != nu_paths) v.fail("phi does not carry s-Tamari covers onto nu-rotations");
  if (tam_trees != nu_trees) v.fail("psi does not carry s-Tamari covers onto nu-tree rotations");
  return v;
}

}  // namespace slattice
