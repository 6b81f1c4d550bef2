#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "support.hpp"

using namespace slattice;
using support::inv;
using support::tree;

TEST_SUITE("weak_order") {

TEST_CASE("join example on (0,2,2)") {
  WeakComposition s{0, 2, 2};
  auto T = inv(3, {{3, 2, 2}});
  auto R = inv(3, {{2, 1, 1}});
  CHECK(inv_union(T, R) == inv(3, {{3, 2, 2}, {2, 1, 1}}));
  CHECK(join(s, T, R) == inv(3, {{3, 2, 2}, {3, 1, 2}, {2, 1, 1}}));
  auto tT = construct_tree(s, T), tR = construct_tree(s, R);
  CHECK(inversions(join(tT, tR)) == join(s, T, R));
}

TEST_CASE("transitive closure example") {
  auto I = inv(4, {{4, 3, 3}, {4, 2, 2}, {3, 2, 1}, {2, 1, 2}});
  auto want = inv(4, {{4, 3, 3}, {4, 2, 3}, {4, 1, 3}, {3, 2, 1}, {3, 1, 1}, {2, 1, 2}});
  CHECK(transitive_closure(I) == want);
  CHECK(oracle::path_closure(I) == want);
}

TEST_CASE("closure agrees with the path definition on unions") {
  for (const auto& s : oracle::sweep(4, 2)) {
    auto els = enumerate_inversion_sets(s);
    for (std::size_t i = 0; i < els.size(); i += 3)
      for (std::size_t j = 0; j < els.size(); j += 2) {
        auto U = inv_union(els[i], els[j]);
        REQUIRE(transitive_closure(U) == oracle::path_closure(U));
      }
  }
}

TEST_CASE("join and meet are the least upper and greatest lower bounds") {
  for (const auto& s : oracle::sweep(4, 2)) {
    CAPTURE(s.str());
    auto els = enumerate_inversion_sets(s);
    for (std::size_t i = 0; i < els.size(); ++i)
      for (std::size_t j = i; j < els.size(); ++j) {
        auto u = oracle::brute_lub(els, i, j), d = oracle::brute_glb(els, i, j);
        REQUIRE(u >= 0);
        REQUIRE(d >= 0);
        CHECK(join(s, els[i], els[j]) == els[u]);
        CHECK(meet(s, els[i], els[j]) == els[d]);
      }
  }
}

TEST_CASE("lattice identities") {
  WeakComposition s{1, 2, 1, 2};
  auto els = enumerate_inversion_sets(s);
  for (std::size_t i = 0; i < els.size(); i += 5)
    for (std::size_t j = 0; j < els.size(); j += 7) {
      const auto &x = els[i], &y = els[j];
      CHECK(join(s, x, y) == join(s, y, x));
      CHECK(join(s, x, meet(s, x, y)) == x);
      CHECK(meet(s, x, join(s, x, y)) == x);
      CHECK(leq(x, join(s, x, y)));
      CHECK(leq(meet(s, x, y), y));
    }
  CHECK(join(s, els.front(), els.back()) == maxs(s));
}

TEST_CASE("rotation example on (0,0,1,1,1,0,2,2)") {
  WeakComposition s{0, 0, 1, 1, 1, 0, 2, 2};
  auto T = tree("[8,[[5,[null,null]],[7,[[6,[[3,[null,null]]]],[4,[[2,[null]],[1,[null]]]],null]],null]]", s);
  std::vector<TreeAscent> want{{1, 7}, {2, 4}, {3, 7}, {5, 8}, {6, 7}, {7, 8}};
  CHECK(tree_ascents(T) == want);
  auto R = rotate(T, {7, 8});
  CHECK(R == tree("[8,[[5,[null,null]],[6,[[3,[null,null]]]],[7,[null,[4,[[2,[null]],[1,[null]]]],null]]]]", s));
  auto I = inversions(T), J = inversions(R);
  for (int x : {7, 4, 2, 1}) CHECK(J(8, x) == I(8, x) + 1);
  CHECK(J(8, 7) == 2);
  CHECK(J(8, 4) == 2);
  CHECK(J(8, 6) == I(8, 6));
  CHECK(J(8, 3) == I(8, 3));
  CHECK_THROWS_AS(rotate(T, {4, 8}), std::domain_error);
}

TEST_CASE("tree-ascents match the shape description") {
  for (const auto& s : oracle::sweep(4, 2))
    for (const auto& T : enumerate_trees(s)) {
      auto I = inversions(T);
      std::set<int> lower;
      for (int c = 2; c <= s.length(); ++c)
        for (int a = 1; a < c; ++a) {
          REQUIRE(is_tree_ascent(s, I, a, c) == oracle::shape_ascent(T, a, c));
          if (is_tree_ascent(s, I, a, c)) CHECK(lower.insert(a).second);  // one ascent per a
        }
      for (int a = 1; a <= s.length(); ++a) CHECK(is_descendant(I, a, s.length()) == (a < s.length()));
    }
}

TEST_CASE("covers are rotations at tree-ascents") {
  for (const auto& s : oracle::sweep(4, 2)) {
    auto els = enumerate_inversion_sets(s);
    for (std::size_t i = 0; i < els.size(); ++i) {
      std::set<MultiInversionSet> rot;
      for (auto& [J, asc] : covers(s, els[i])) {
        CHECK(validate(J, s).ok());
        CHECK(leq(els[i], J));
        rot.insert(J);
      }
      REQUIRE(rot == oracle::brute_covers(els, i));
    }
  }
}

TEST_CASE("Hasse diagram") {
  auto H = hasse({0, 0, 1});
  CHECK(H.size() == 4);
  CHECK(H.edges.size() == 4);
  CHECK(std::is_sorted(H.edges.begin(), H.edges.end(), [](const HasseEdge& a, const HasseEdge& b) {
    return std::tie(a.from, a.label, a.to) < std::tie(b.from, b.label, b.to);
  }));
  CHECK(H.index_of(H.elements[2]) == 2);
  CHECK_THROWS_AS(H.index_of(maxs({0, 2, 2})), std::out_of_range);
  CHECK(H.tree(0).root() == 3);
  CHECK(hasse({1}).size() == 1);
}

TEST_CASE("mismatched sizes are rejected") {
  CHECK_THROWS_AS(leq(MultiInversionSet(2), MultiInversionSet(3)), std::domain_error);
  auto a = enumerate_trees({0, 1}).front();
  auto b = enumerate_trees({0, 2}).front();
  CHECK_THROWS_AS(join(a, b), std::domain_error);
}

}
