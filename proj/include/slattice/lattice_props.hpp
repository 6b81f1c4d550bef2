#pragma once

// Exhaustive verifiers over a finite labeled lattice: lattice axioms,
// polygons, semidistributivity (two routes), the HH labeling, and the
// s-Tamari sublattice / quotient statements.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "slattice/core.hpp"
#include "slattice/tamari.hpp"
#include "slattice/weak_order.hpp"

namespace slattice {

struct limit_exceeded : std::length_error {
  using std::length_error::length_error;
};

// Guard on the number of elements a verifier may build. SLATTICE_MAX_ELEMENTS
// overrides the default.
inline std::size_t element_limit() {
  if (const char* v = std::getenv("SLATTICE_MAX_ELEMENTS")) {
    char* end = nullptr;
    unsigned long long x = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && x > 0) return static_cast<std::size_t>(x);
  }
  return 20000;
}

inline void check_limit(const WeakComposition& s) {
  std::uint64_t count = 0;
  try {
    count = tree_count(s);
  } catch (const std::overflow_error&) {
    count = std::numeric_limits<std::uint64_t>::max();
  }
  if (count > element_limit())
    throw limit_exceeded("s = " + s.str() + " has " + std::to_string(count) + " s-decreasing trees, above the limit of " +
                         std::to_string(element_limit()) + " (set SLATTICE_MAX_ELEMENTS to raise it)");
}

struct Verdict {
  std::string check;
  bool ok = true;
  std::size_t elements = 0;
  std::size_t checked = 0;  // number of pairs / triples / polygons examined
  std::string witness;      // first counterexample, empty when ok

  void fail(std::string w) {
    if (ok) witness = std::move(w);
    ok = false;
  }
};

// ---------------------------------------------------------------------------
// finite lattice with cover labels

using Bits = boost::dynamic_bitset<>;

class FiniteLattice {
 public:
  static constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();

  explicit FiniteLattice(HasseDiagram H) : H_(std::move(H)) {
    const std::size_t N = H_.size();
    up_.assign(N, {});
    down_.assign(N, {});
    for (std::size_t e = 0; e < H_.edges.size(); ++e) {
      up_[H_.edges[e].from].push_back(e);
      down_[H_.edges[e].to].push_back(e);
    }
    // Kahn order, then reflexive-transitive closure in reverse
    std::vector<std::size_t> indeg(N), order;
    for (const auto& e : H_.edges) ++indeg[e.to];
    for (std::size_t i = 0; i < N; ++i)
      if (indeg[i] == 0) order.push_back(i);
    for (std::size_t k = 0; k < order.size(); ++k)
      for (auto e : up_[order[k]])
        if (--indeg[H_.edges[e].to] == 0) order.push_back(H_.edges[e].to);
    if (order.size() != N) throw std::logic_error("cover graph has a cycle");
    above_.assign(N, Bits(N));
    below_.assign(N, Bits(N));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      above_[*it].set(*it);
      for (auto e : up_[*it]) above_[*it] |= above_[H_.edges[e].to];
    }
    for (auto i : order) {
      below_[i].set(i);
      for (auto e : down_[i]) below_[i] |= below_[H_.edges[e].from];
    }
    // join / meet from the inversion-set formulas; `none` marks a result
    // outside the element set
    join_.assign(N * N, none);
    meet_.assign(N * N, none);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j) {
        join_[i * N + j] = join_[j * N + i] = lookup(slattice::join(H_.s, H_.elements[i], H_.elements[j]));
        meet_[i * N + j] = meet_[j * N + i] = lookup(slattice::meet(H_.s, H_.elements[i], H_.elements[j]));
      }
  }

  const HasseDiagram& hasse() const { return H_; }
  const WeakComposition& signature() const { return H_.s; }
  std::size_t size() const { return H_.size(); }
  const HasseEdge& edge(std::size_t e) const { return H_.edges[e]; }
  const std::vector<std::size_t>& up_edges(std::size_t i) const { return up_[i]; }
  const std::vector<std::size_t>& down_edges(std::size_t i) const { return down_[i]; }
  const Bits& above(std::size_t i) const { return above_[i]; }
  const Bits& below(std::size_t i) const { return below_[i]; }
  bool leq(std::size_t i, std::size_t j) const { return above_[i].test(j); }
  std::uint32_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
  std::uint32_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
  std::string name(std::size_t i) const { return "[" + H_.elements[i].key() + "]"; }

  bool has_up_label(std::size_t i, TreeAscent t) const {
    for (auto e : up_[i])
      if (H_.edges[e].label == t) return true;
    return false;
  }

 private:
  std::uint32_t lookup(const MultiInversionSet& I) const {
    auto it = std::lower_bound(H_.elements.begin(), H_.elements.end(), I);
    if (it == H_.elements.end() || *it != I) return none;
    return static_cast<std::uint32_t>(it - H_.elements.begin());
  }

  HasseDiagram H_;
  std::vector<std::vector<std::size_t>> up_, down_;
  std::vector<Bits> above_, below_;
  std::vector<std::uint32_t> join_, meet_;
};

inline FiniteLattice weak_lattice(const WeakComposition& s) {
  check_limit(s);
  return FiniteLattice(hasse(s));
}

inline FiniteLattice tamari_lattice(const WeakComposition& s) {
  check_limit(s);
  return FiniteLattice(tamari_hasse(s));
}

// ---------------------------------------------------------------------------
// lattice axioms

// Every pair must have a least upper bound and a greatest lower bound in the
// order generated by the covers, and they must be the algebraic join/meet.
inline Verdict verify_lattice(const FiniteLattice& L) {
  Verdict v{"lattice", true, L.size(), 0, {}};
  const std::size_t N = L.size();
  std::size_t mins = 0, maxs_count = 0;
  for (std::size_t i = 0; i < N; ++i) {
    if (L.down_edges(i).empty()) ++mins;
    if (L.up_edges(i).empty()) ++maxs_count;
  }
  if (mins != 1 || maxs_count != 1) v.fail("expected a unique minimum and maximum");
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) {
      ++v.checked;
      auto u = L.join(i, j), d = L.meet(i, j);
      if (u == FiniteLattice::none || d == FiniteLattice::none) {
        v.fail("join or meet of " + L.name(i) + " and " + L.name(j) + " is not an element");
        continue;
      }
      Bits ub = L.above(i) & L.above(j);
      if (!ub.test(u) || !ub.is_subset_of(L.above(u)))
        v.fail("join of " + L.name(i) + " and " + L.name(j) + " is not their least upper bound");
      Bits lb = L.below(i) & L.below(j);
      if (!lb.test(d) || !lb.is_subset_of(L.below(d)))
        v.fail("meet of " + L.name(i) + " and " + L.name(j) + " is not their greatest lower bound");
    }
  return v;
}

// ---------------------------------------------------------------------------
// polygons

enum class PolygonShape { square, pentagon_left, pentagon_right, hexagon };

inline const char* shape_name(PolygonShape p) {
  switch (p) {
    case PolygonShape::square: return "square";
    case PolygonShape::pentagon_left: return "pentagon-left";
    case PolygonShape::pentagon_right: return "pentagon-right";
    case PolygonShape::hexagon: return "hexagon";
  }
  return "?";
}

struct PolygonReport {
  std::size_t base = 0, top = 0;
  PolygonShape shape = PolygonShape::square;
  // chain through Z (smaller ascent a) and through Q, endpoints included
  std::vector<std::size_t> chain_z, chain_q;
  std::vector<TreeAscent> labels_z, labels_q;
};

struct PolygonCensus {
  std::vector<PolygonReport> polygons;  // one per (element, pair of up-covers)
  std::size_t down_checked = 0;         // intervals [x1 ^ x2, y] confirmed as polygons
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::map<std::string, std::size_t> counts() const {
    std::map<std::string, std::size_t> c;
    for (const auto& p : polygons) ++c[shape_name(p.shape)];
    return c;
  }
};

namespace detail {

// Walks [x,y] from the up-covers e1, e2 of x. Succeeds iff the interval is
// exactly two maximal chains meeting only at x and y.
inline bool walk_polygon(const FiniteLattice& L, std::size_t x, std::size_t y, std::size_t e1, std::size_t e2,
                         PolygonReport& out, std::string& why) {
  Bits I = L.above(x) & L.below(y);
  std::size_t inside = 0;
  for (auto e : L.up_edges(x))
    if (I.test(L.edge(e).to)) ++inside;
  if (inside != 2) {
    why = "base has " + std::to_string(inside) + " up-covers inside the interval";
    return false;
  }
  Bits seen(L.size());
  seen.set(x);
  seen.set(y);
  auto walk = [&](std::size_t e, std::vector<std::size_t>& chain, std::vector<TreeAscent>& labels) {
    chain = {x};
    labels.clear();
    for (;;) {
      chain.push_back(L.edge(e).to);
      labels.push_back(L.edge(e).label);
      std::size_t z = L.edge(e).to;
      if (z == y) return true;
      if (seen.test(z)) {
        why = "chains meet at " + L.name(z);
        return false;
      }
      seen.set(z);
      std::size_t next = 0, k = 0;
      for (auto f : L.up_edges(z))
        if (I.test(L.edge(f).to)) next = f, ++k;
      if (k != 1) {
        why = L.name(z) + " has " + std::to_string(k) + " up-covers inside the interval";
        return false;
      }
      e = next;
    }
  };
  if (!walk(e1, out.chain_z, out.labels_z) || !walk(e2, out.chain_q, out.labels_q)) return false;
  if (seen.count() != I.count()) {
    why = "interval has elements off both chains";
    return false;
  }
  out.base = x;
  out.top = y;
  return true;
}

// Matches the two chains against the four cases, chosen by whether each
// first label is still an up-label after the other rotation.
inline bool classify(const FiniteLattice& L, PolygonReport& p, std::string& why) {
  auto ab = p.labels_z.front(), cd = p.labels_q.front();
  const bool ab_on_q = L.has_up_label(p.chain_q[1], ab);
  const bool cd_on_z = L.has_up_label(p.chain_z[1], cd);
  using V = std::vector<TreeAscent>;
  V want_z, want_q;
  if (ab_on_q && cd_on_z) {
    p.shape = PolygonShape::square;
    want_z = {ab, cd};
    want_q = {cd, ab};
  } else {
    if (ab.c != cd.a) {
      why = "non-square polygon with b != c";
      return false;
    }
    const int a = ab.a, c = ab.c, d = cd.c;
    if (ab_on_q) {
      p.shape = PolygonShape::pentagon_left;
      want_z = {{a, c}, {a, d}, {c, d}};
      want_q = {{c, d}, {a, c}};
    } else if (cd_on_z) {
      p.shape = PolygonShape::pentagon_right;
      want_z = {{a, c}, {c, d}};
      want_q = {{c, d}, {a, d}, {a, c}};
    } else {
      p.shape = PolygonShape::hexagon;
      if (L.signature()(c) != 1) {
        why = "hexagon with s(" + std::to_string(c) + ") != 1";
        return false;
      }
      want_z = {{a, c}, {a, d}, {c, d}};
      want_q = {{c, d}, {a, d}, {a, c}};
    }
  }
  if (p.labels_z != want_z || p.labels_q != want_q) {
    why = std::string(shape_name(p.shape)) + " with unexpected chain labels";
    return false;
  }
  return true;
}

inline std::string labels_str(const std::vector<TreeAscent>& ls) {
  std::string out;
  for (auto& t : ls) out += t.str();
  return out;
}

}  // namespace detail

inline PolygonCensus classify_polygons(const FiniteLattice& L) {
  PolygonCensus census;
  for (std::size_t x = 0; x < L.size(); ++x) {
    const auto& ups = L.up_edges(x);
    for (std::size_t i = 0; i < ups.size(); ++i)
      for (std::size_t j = i + 1; j < ups.size(); ++j) {
        auto e1 = ups[i], e2 = ups[j];
        if (L.edge(e1).label.a == L.edge(e2).label.a) {
          census.failures.push_back(L.name(x) + ": two up-covers share the smaller label " +
                                    std::to_string(L.edge(e1).label.a));
          continue;
        }
        if (L.edge(e2).label.a < L.edge(e1).label.a) std::swap(e1, e2);
        auto y = L.join(L.edge(e1).to, L.edge(e2).to);
        PolygonReport p;
        std::string why;
        if (y == FiniteLattice::none || !detail::walk_polygon(L, x, y, e1, e2, p, why) ||
            !detail::classify(L, p, why)) {
          census.failures.push_back("[" + L.name(x) + ", join of " + L.edge(e1).label.str() + " and " +
                                    L.edge(e2).label.str() + "]: " + why + " " + detail::labels_str(p.labels_z) +
                                    " / " + detail::labels_str(p.labels_q));
          continue;
        }
        census.polygons.push_back(std::move(p));
      }
  }
  // downward condition: [x1 ^ x2, y] for two lower covers of y
  for (std::size_t y = 0; y < L.size(); ++y) {
    const auto& downs = L.down_edges(y);
    for (std::size_t i = 0; i < downs.size(); ++i)
      for (std::size_t j = i + 1; j < downs.size(); ++j) {
        auto b = L.meet(L.edge(downs[i]).from, L.edge(downs[j]).from);
        std::vector<std::size_t> firsts;
        if (b != FiniteLattice::none)
          for (auto e : L.up_edges(b))
            if (L.leq(L.edge(e).to, y)) firsts.push_back(e);
        PolygonReport p;
        std::string why = "meet of the lower covers is not an element";
        if (firsts.size() == 2) {
          if (L.edge(firsts[1]).label.a < L.edge(firsts[0]).label.a) std::swap(firsts[0], firsts[1]);
          if (detail::walk_polygon(L, b, y, firsts[0], firsts[1], p, why)) {
            ++census.down_checked;
            continue;
          }
        } else if (b != FiniteLattice::none) {
          why = "bottom has " + std::to_string(firsts.size()) + " up-covers inside the interval";
        }
        census.failures.push_back("[meet, " + L.name(y) + "]: " + why);
      }
  }
  return census;
}

inline Verdict verify_polygonal(const FiniteLattice& L, const PolygonCensus& census) {
  Verdict v{"polygonal", true, L.size(), census.polygons.size() + census.down_checked, {}};
  if (!census.ok()) v.fail(census.failures.front());
  return v;
}

// ---------------------------------------------------------------------------
// semidistributivity

struct SemidistributivityReport {
  Verdict direct{"semidistributive", true, 0, 0, {}};
  Verdict covers_route{"semidistributive-covers", true, 0, 0, {}};
  bool agree() const { return direct.ok == covers_route.ok; }
  bool ok() const { return direct.ok && covers_route.ok; }
};

// z^x = z^y => z^(x v y) = z^x, and the order dual, over all triples.
inline Verdict verify_semidistributive_direct(const FiniteLattice& L) {
  Verdict v{"semidistributive", true, L.size(), 0, {}};
  const std::size_t N = L.size();
  for (std::size_t z = 0; z < N; ++z)
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t y = x + 1; y < N; ++y) {
        ++v.checked;
        if (L.meet(z, x) == L.meet(z, y) && L.meet(z, L.join(x, y)) != L.meet(z, x))
          v.fail("meet-semidistributivity fails for x=" + L.name(x) + " y=" + L.name(y) + " z=" + L.name(z));
        if (L.join(z, x) == L.join(z, y) && L.join(z, L.meet(x, y)) != L.join(z, x))
          v.fail("join-semidistributivity fails for x=" + L.name(x) + " y=" + L.name(y) + " z=" + L.name(z));
      }
  return v;
}

// Restricted criterion: only pairs y,z covered by a common element (join
// side) or covering a common element (meet side) need checking.
inline Verdict verify_semidistributive_covers(const FiniteLattice& L) {
  Verdict v{"semidistributive-covers", true, L.size(), 0, {}};
  const std::size_t N = L.size();
  std::set<std::pair<std::size_t, std::size_t>> under, over;
  for (std::size_t w = 0; w < N; ++w) {
    const auto& d = L.down_edges(w);
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j)
        under.insert(std::minmax(L.edge(d[i]).from, L.edge(d[j]).from));
    const auto& u = L.up_edges(w);
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j) over.insert(std::minmax(L.edge(u[i]).to, L.edge(u[j]).to));
  }
  for (auto [y, z] : under)
    for (std::size_t x = 0; x < N; ++x) {
      ++v.checked;
      if (L.join(x, y) == L.join(x, z) && L.join(x, L.meet(y, z)) != L.join(x, y))
        v.fail("join-semidistributivity fails for x=" + L.name(x) + " y=" + L.name(y) + " z=" + L.name(z));
    }
  for (auto [y, z] : over)
    for (std::size_t x = 0; x < N; ++x) {
      ++v.checked;
      if (L.meet(x, y) == L.meet(x, z) && L.meet(x, L.join(y, z)) != L.meet(x, y))
        v.fail("meet-semidistributivity fails for x=" + L.name(x) + " y=" + L.name(y) + " z=" + L.name(z));
    }
  return v;
}

inline SemidistributivityReport verify_semidistributive(const FiniteLattice& L) {
  return {verify_semidistributive_direct(L), verify_semidistributive_covers(L)};
}

// ---------------------------------------------------------------------------
// HH labeling: label (a,c), rank c - a

inline int hh_rank(TreeAscent t) { return t.c - t.a; }

inline Verdict verify_hh(const FiniteLattice& L, const PolygonCensus& census) {
  Verdict v{"hh", true, L.size(), 0, {}};
  if (!census.ok()) v.fail("lattice is not polygonal: " + census.failures.front());
  auto ranks_ok = [](const std::vector<TreeAscent>& t) {
    const int k = static_cast<int>(t.size());
    auto level = [k](int i) { return std::min(i, k + 1 - i); };  // 1-based position
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j)
        if (level(i) < level(j) && !(hh_rank(t[i - 1]) < hh_rank(t[j - 1]))) return false;
    return true;
  };
  for (const auto& p : census.polygons) {
    ++v.checked;
    // chain_z runs x -> x1 -> ... -> y1 -> y, chain_q through x2 ... y2
    if (!(p.labels_z.front() == p.labels_q.back() && p.labels_q.front() == p.labels_z.back()))
      v.fail("label condition fails on [" + L.name(p.base) + ", " + L.name(p.top) + "]");
    if (!ranks_ok(p.labels_z) || !ranks_ok(p.labels_q))
      v.fail("rank condition fails on [" + L.name(p.base) + ", " + L.name(p.top) + "] " +
             detail::labels_str(p.labels_z) + " / " + detail::labels_str(p.labels_q));
  }
  return v;
}

// ---------------------------------------------------------------------------
// s-Tamari statements

// Joins and meets of s-Tamari trees stay s-Tamari.
inline Verdict verify_sublattice(const WeakComposition& s) {
  check_limit(s);
  auto tam = enumerate_tamari(s);
  Verdict v{"sublattice", true, tam.size(), 0, {}};
  for (std::size_t i = 0; i < tam.size(); ++i)
    for (std::size_t j = i + 1; j < tam.size(); ++j) {
      ++v.checked;
      if (!is_s_tamari(join(s, tam[i], tam[j])))
        v.fail("join of [" + tam[i].key() + "] and [" + tam[j].key() + "] is not s-Tamari");
      if (!is_s_tamari(meet(s, tam[i], tam[j])))
        v.fail("meet of [" + tam[i].key() + "] and [" + tam[j].key() + "] is not s-Tamari");
    }
  return v;
}

// pi_down fibers are intervals [pi_down T, pi_up T], both projections are
// order preserving, a cover stays inside its class exactly when it is a
// congruence rotation, the classes are the components of congruence
// rotations, and the quotient order (transitive reduction of the class graph)
// is the s-Tamari Hasse diagram under class -> bottom.
inline Verdict verify_quotient(const FiniteLattice& W) {
  const auto& s = W.signature();
  require_quotient_support(s);
  const std::size_t N = W.size();
  Verdict v{"quotient", true, N, 0, {}};
  const auto& E = W.hasse().elements;
  std::vector<std::size_t> down(N), up(N);
  for (std::size_t i = 0; i < N; ++i) {
    down[i] = W.hasse().index_of(pi_down(E[i]));
    up[i] = W.hasse().index_of(pi_up(s, E[i]));
  }
  // classes keyed by their bottom
  std::map<std::size_t, std::vector<std::size_t>> cls;
  for (std::size_t i = 0; i < N; ++i) cls[down[i]].push_back(i);
  for (const auto& [b, members] : cls) {
    ++v.checked;
    const std::size_t t = up[members.front()];
    Bits interval = W.above(b) & W.below(t);
    Bits mem(N);
    for (auto m : members) {
      mem.set(m);
      if (up[m] != t) v.fail("class of [" + E[b].key() + "] has two pi_up images");
    }
    if (mem != interval) v.fail("class of [" + E[b].key() + "] is not the interval up to [" + E[t].key() + "]");
    if (!is_s_tamari(E[b])) v.fail("class bottom [" + E[b].key() + "] is not s-Tamari");
    if (!is_s_max_tamari(s, E[t])) v.fail("class top [" + E[t].key() + "] is not s-maximal-Tamari");
  }
  // covers: order preservation and congruence rotations; union-find for
  // the components of congruence rotations
  std::vector<std::size_t> uf(N);
  for (std::size_t i = 0; i < N; ++i) uf[i] = i;
  auto find = [&](std::size_t x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::set<std::pair<std::size_t, std::size_t>> class_edges;
  for (std::size_t e = 0; e < W.hasse().edges.size(); ++e) {
    const auto& ed = W.edge(e);
    ++v.checked;
    if (!W.leq(down[ed.from], down[ed.to])) v.fail("pi_down not order preserving on " + ed.label.str());
    if (!W.leq(up[ed.from], up[ed.to])) v.fail("pi_up not order preserving on " + ed.label.str());
    const bool same = down[ed.from] == down[ed.to];
    const bool cong = is_congruence_ascent(s, E[ed.from], ed.label);
    if (same != cong)
      v.fail("cover [" + E[ed.from].key() + "] -" + ed.label.str() + "-> [" + E[ed.to].key() + "] is " +
             (same ? "class-internal" : "class-crossing") + " but " + (cong ? "" : "not ") + "a congruence rotation");
    if (cong) uf[find(ed.from)] = find(ed.to);
    if (!same) class_edges.insert({down[ed.from], down[ed.to]});
  }
  for (std::size_t i = 0; i < N; ++i)
    if (find(i) != find(down[i])) v.fail("[" + E[i].key() + "] is not joined to its class bottom by congruence rotations");
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < N; ++i) roots.insert(find(i));
  if (roots.size() != cls.size()) v.fail("congruence-rotation components differ from pi_down classes");

  // quotient covers: class edges not implied by a longer path
  std::vector<std::size_t> bottoms;
  for (const auto& [b, m] : cls) bottoms.push_back(b);
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < bottoms.size(); ++k) pos[bottoms[k]] = k;
  const std::size_t M = bottoms.size();
  std::vector<Bits> reach(M, Bits(M));
  std::vector<std::vector<std::size_t>> succ(M);
  for (auto [a, b] : class_edges) succ[pos[a]].push_back(pos[b]);
  // class bottoms are sorted canonically, which is a linear extension
  for (std::size_t k = M; k-- > 0;) {
    reach[k].set(k);
    for (auto t : succ[k]) reach[k] |= reach[t];
  }
  std::set<std::pair<MultiInversionSet, MultiInversionSet>> quotient_covers, tamari_covers_set;
  for (std::size_t k = 0; k < M; ++k)
    for (auto t : succ[k]) {
      bool implied = false;
      for (auto u : succ[k])
        if (u != t && reach[u].test(t)) implied = true;
      if (!implied) quotient_covers.insert({E[bottoms[k]], E[bottoms[t]]});
    }
  HasseDiagram T = tamari_hasse(s);
  for (const auto& e : T.edges) tamari_covers_set.insert({T.elements[e.from], T.elements[e.to]});
  if (M != T.size()) v.fail("class count differs from s-Tamari count");
  if (quotient_covers != tamari_covers_set) v.fail("quotient order is not the s-Tamari order");
  return v;
}

}  // namespace slattice
