#pragma once

// Signatures, s-decreasing trees and their tree-inversion multisets.
// Labels are 1-based throughout; a child slot holding 0 is a leaf.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slattice {

// Raised when a construction is not defined for the given signature,
// e.g. s-permutations when s has a zero entry.
struct unsupported_signature : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class WeakComposition {
 public:
  explicit WeakComposition(std::vector<int> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw std::domain_error("weak composition must have length >= 1");
    for (int v : e_)
      if (v < 0) throw std::domain_error("weak composition entries must be non-negative");
  }
  WeakComposition(std::initializer_list<int> il) : WeakComposition(std::vector<int>(il)) {}

  int length() const { return static_cast<int>(e_.size()); }
  int weight() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  int operator()(int i) const { return e_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& entries() const { return e_; }

  bool zero_free() const {
    return std::none_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
  }
  WeakComposition reversed() const { return WeakComposition(std::vector<int>(e_.rbegin(), e_.rend())); }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(e_[i]);
    }
    return out + ")";
  }

  bool operator==(const WeakComposition&) const = default;

 private:
  std::vector<int> e_;
};

// card(y,x) for 1 <= x < y <= n, stored densely in (y,x) lexicographic order.
// The derived ordering (n first, then that vector) is the canonical order
// used for enumeration, equality and hashing.
class MultiInversionSet {
 public:
  explicit MultiInversionSet(int n = 1) : n_(n) {
    if (n < 1) throw std::domain_error("inversion set needs n >= 1");
    c_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
  }

  static std::size_t slot(int y, int x) {
    return static_cast<std::size_t>(y - 1) * (y - 2) / 2 + static_cast<std::size_t>(x - 1);
  }

  int n() const { return n_; }
  int operator()(int y, int x) const { return c_[slot(y, x)]; }
  int at(int y, int x) const {
    check(y, x);
    return c_[slot(y, x)];
  }
  void set(int y, int x, int v) {
    check(y, x);
    if (v < 0) throw std::domain_error("cardinality must be non-negative");
    c_[slot(y, x)] = v;
  }
  void add(int y, int x, int d = 1) { set(y, x, at(y, x) + d); }

  const std::vector<int>& cards() const { return c_; }
  int total() const { return std::accumulate(c_.begin(), c_.end(), 0); }

  // Canonical string: the dense vector joined by '.'; "-" when n = 1.
  std::string key() const {
    if (c_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += '.';
      out += std::to_string(c_[i]);
    }
    return out;
  }

  auto operator<=>(const MultiInversionSet&) const = default;

 private:
  void check(int y, int x) const {
    if (!(1 <= x && x < y && y <= n_))
      throw std::domain_error("inversion (" + std::to_string(y) + "," + std::to_string(x) +
                              ") outside 1 <= x < y <= " + std::to_string(n_));
  }

  int n_;
  std::vector<int> c_;
};

struct MultiInversionSetHash {
  std::size_t operator()(const MultiInversionSet& I) const noexcept {
    std::size_t h = static_cast<std::size_t>(I.n());
    for (int v : I.cards()) h = h * 1000003u ^ static_cast<std::size_t>(v);
    return h;
  }
};

inline MultiInversionSet maxs(const WeakComposition& s) {
  MultiInversionSet I(s.length());
  for (int y = 2; y <= s.length(); ++y)
    for (int x = 1; x < y; ++x) I.set(y, x, s(y));
  return I;
}

// ---------------------------------------------------------------------------
// validation

enum class Axiom { none, bounded, transitivity, planarity };

struct Validation {
  Axiom failed = Axiom::none;
  int a = 0, b = 0, c = 0;  // witness; for `bounded` only (a,c) is meaningful

  bool ok() const { return failed == Axiom::none; }
  std::string describe() const {
    switch (failed) {
      case Axiom::none: return "ok";
      case Axiom::bounded:
        return "bounded violated at (" + std::to_string(c) + "," + std::to_string(a) + ")";
      case Axiom::transitivity:
      case Axiom::planarity:
        return std::string(failed == Axiom::transitivity ? "transitivity" : "planarity") +
               " violated at (" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + ")";
    }
    return "?";
  }
};

inline Validation validate(const MultiInversionSet& I, const WeakComposition& s) {
  const int n = s.length();
  if (I.n() != n) throw std::domain_error("inversion set size does not match signature length");
  for (int c = 2; c <= n; ++c)
    for (int a = 1; a < c; ++a)
      if (I(c, a) > s(c)) return {Axiom::bounded, a, 0, c};
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        int i = I(c, b);
        if (i > 0 && I(b, a) != 0 && I(c, a) < i) return {Axiom::transitivity, a, b, c};
      }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        int i = I(c, a);
        if (i > 0 && I(b, a) != s(b) && I(c, b) < i) return {Axiom::planarity, a, b, c};
      }
  return {};
}

// ---------------------------------------------------------------------------
// trees

class SDecreasingTree {
 public:
  static constexpr int leaf = 0;

  // children[i-1] lists the s(i)+1 child slots of node i, left to right.
  SDecreasingTree(WeakComposition s, std::vector<std::vector<int>> children)
      : s_(std::move(s)), kids_(std::move(children)) {
    const int n = s_.length();
    if (static_cast<int>(kids_.size()) != n) throw std::domain_error("tree needs one child list per label");
    parent_.assign(n + 1, 0);
    pos_.assign(n + 1, -1);
    for (int p = 1; p <= n; ++p) {
      const auto& ks = kids_[p - 1];
      if (static_cast<int>(ks.size()) != s_(p) + 1)
        throw std::domain_error("node " + std::to_string(p) + " must have s(" + std::to_string(p) +
                                ")+1 children");
      for (int j = 0; j < static_cast<int>(ks.size()); ++j) {
        int k = ks[j];
        if (k == leaf) continue;
        if (k < 1 || k >= p) throw std::domain_error("labels must decrease from parent to child");
        if (pos_[k] != -1) throw std::domain_error("label " + std::to_string(k) + " appears twice");
        parent_[k] = p;
        pos_[k] = j;
      }
    }
    for (int k = 1; k < n; ++k)
      if (pos_[k] == -1) throw std::domain_error("label " + std::to_string(k) + " is missing");
  }

  const WeakComposition& signature() const { return s_; }
  int size() const { return s_.length(); }
  int root() const { return s_.length(); }
  const std::vector<int>& children(int label) const { return kids_.at(static_cast<std::size_t>(label - 1)); }
  const std::vector<std::vector<int>>& child_table() const { return kids_; }
  int parent(int label) const { return parent_.at(static_cast<std::size_t>(label)); }  // 0 at the root
  int child_index(int label) const { return pos_.at(static_cast<std::size_t>(label)); }  // -1 at the root

  bool is_descendant(int x, int y) const {
    for (int v = parent(x); v != 0; v = parent(v))
      if (v == y) return true;
    return false;
  }

  bool operator==(const SDecreasingTree& o) const { return s_ == o.s_ && kids_ == o.kids_; }

 private:
  WeakComposition s_;
  std::vector<std::vector<int>> kids_;
  std::vector<int> parent_, pos_;
};

inline int cardinality(const SDecreasingTree& T, int y, int x) {
  const int n = T.size();
  if (!(1 <= x && x < y && y <= n)) throw std::domain_error("cardinality needs 1 <= x < y <= n");
  const int sy = T.signature()(y);
  if (sy == 0) return 0;
  // entry[z] = index of the child of z on the root-to-y path
  std::vector<int> entry(n + 1, -1);
  for (int prev = y, z = T.parent(y); z != 0; prev = z, z = T.parent(z)) entry[z] = T.child_index(prev);
  for (int prev = x, z = T.parent(x); z != 0; prev = z, z = T.parent(z)) {
    if (z == y) return T.child_index(prev);
    if (entry[z] != -1) return T.child_index(prev) < entry[z] ? 0 : sy;
  }
  throw std::logic_error("cardinality: labels share no ancestor");
}

inline MultiInversionSet inversions(const SDecreasingTree& T) {
  MultiInversionSet I(T.size());
  for (int y = 2; y <= T.size(); ++y)
    for (int x = 1; x < y; ++x) I.set(y, x, cardinality(T, y, x));
  return I;
}

// ConstructTree: the root of a label set is its maximum; the remaining labels
// split into the child slots by their cardinality with the root.
inline SDecreasingTree construct_tree(const WeakComposition& s, const MultiInversionSet& I) {
  Validation v = validate(I, s);
  if (!v.ok()) throw std::domain_error("not an s-tree-inversion set: " + v.describe());
  const int n = s.length();
  std::vector<std::vector<int>> kids(n);
  std::function<int(std::vector<int>)> build = [&](std::vector<int> labels) -> int {
    if (labels.empty()) return SDecreasingTree::leaf;
    int c = *std::max_element(labels.begin(), labels.end());
    std::vector<std::vector<int>> parts(s(c) + 1);
    for (int a : labels)
      if (a != c) parts[I(c, a)].push_back(a);
    auto& slots = kids[c - 1];
    slots.assign(s(c) + 1, SDecreasingTree::leaf);
    for (int i = 0; i <= s(c); ++i) slots[i] = build(std::move(parts[i]));
    return c;
  };
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  build(std::move(all));
  return SDecreasingTree(s, std::move(kids));
}

// Number of s-decreasing trees: prod_{i<n} (1 + s(i+1) + ... + s(n)).
// Throws std::overflow_error instead of wrapping.
inline std::uint64_t tree_count(const WeakComposition& s) {
  std::uint64_t total = 1, tail = 0;
  for (int i = s.length(); i >= 2; --i) {
    tail += static_cast<std::uint64_t>(s(i));
    std::uint64_t next;
    if (__builtin_mul_overflow(total, 1 + tail, &next)) throw std::overflow_error("tree count overflows 64 bits");
    total = next;
  }
  return total;
}

// All s-decreasing trees as inversion sets, sorted canonically.
// Generation inserts labels n-1, ..., 1 into a leaf of the tree built so far.
inline std::vector<MultiInversionSet> enumerate_inversion_sets(const WeakComposition& s) {
  const int n = s.length();
  std::vector<std::vector<int>> kids(n);
  kids[n - 1].assign(s(n) + 1, SDecreasingTree::leaf);
  std::vector<MultiInversionSet> out;
  std::function<void(int)> place = [&](int k) {
    if (k == 0) {
      out.push_back(inversions(SDecreasingTree(s, kids)));
      return;
    }
    kids[k - 1].assign(s(k) + 1, SDecreasingTree::leaf);
    for (int p = k + 1; p <= n; ++p)
      for (auto& slot : kids[p - 1])
        if (slot == SDecreasingTree::leaf) {
          slot = k;
          place(k - 1);
          slot = SDecreasingTree::leaf;
        }
  };
  place(n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<SDecreasingTree> enumerate_trees(const WeakComposition& s) {
  std::vector<SDecreasingTree> out;
  for (const auto& I : enumerate_inversion_sets(s)) out.push_back(construct_tree(s, I));
  return out;
}

// In-order reading: node i is written once between each pair of consecutive
// children, s(i) times in all.
inline std::vector<int> s_permutation(const SDecreasingTree& T) {
  const auto& s = T.signature();
  if (!s.zero_free())
    throw unsupported_signature("s-permutations are only defined when s has no zero entry, got " + s.str());
  std::vector<int> word;
  std::function<void(int)> visit = [&](int v) {
    if (v == SDecreasingTree::leaf) return;
    const auto& ks = T.children(v);
    for (std::size_t j = 0; j < ks.size(); ++j) {
      if (j) word.push_back(v);
      visit(ks[j]);
    }
  };
  visit(T.root());
  return word;
}

inline SDecreasingTree mirror(const SDecreasingTree& T) {
  auto kids = T.child_table();
  for (auto& ks : kids) std::reverse(ks.begin(), ks.end());
  return SDecreasingTree(T.signature(), std::move(kids));
}

inline MultiInversionSet mirror(const WeakComposition& s, const MultiInversionSet& I) {
  MultiInversionSet M(I.n());
  for (int y = 2; y <= I.n(); ++y)
    for (int x = 1; x < y; ++x) M.set(y, x, s(y) - I(y, x));
  return M;
}

// ---------------------------------------------------------------------------
// rational Catalan numbers C(a+b, a) / (a+b)

struct RationalCatalan {
  std::uint64_t numerator = 0;    // C(a+b, a)
  std::uint64_t denominator = 0;  // a+b
  bool coprime = false;           // gcd(a,b) == 1

  bool integral() const { return numerator % denominator == 0; }
  std::uint64_t value() const {
    if (!integral())
      throw std::domain_error(std::to_string(numerator) + "/" + std::to_string(denominator) + " is not an integer");
    return numerator / denominator;
  }
  std::string str() const {
    return integral() ? std::to_string(value()) : std::to_string(numerator) + "/" + std::to_string(denominator);
  }
};

inline std::uint64_t binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (m-k+i) / i stays exact: divide out the common factor first
    std::uint64_t num = m - k + i, den = i;
    std::uint64_t g = std::gcd(r, den);
    r /= g;
    den /= g;
    num /= den;  // den now divides num because C(m-k+i, i) is an integer
    if (__builtin_mul_overflow(r, num, &r)) throw std::overflow_error("binomial coefficient overflows 64 bits");
  }
  return r;
}

inline RationalCatalan rational_catalan(std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b < 1) throw std::domain_error("rational Catalan numbers need a, b >= 1");
  std::uint64_t m;
  if (__builtin_add_overflow(a, b, &m)) throw std::overflow_error("a+b overflows 64 bits");
  return {binomial(m, a), m, std::gcd(a, b) == 1};
}

}  // namespace slattice
