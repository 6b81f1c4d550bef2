#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace slattice;

TEST_SUITE("io") {

TEST_CASE("signature parsing") {
  CHECK(parse_signature("0,2,2") == WeakComposition{0, 2, 2});
  CHECK(parse_signature("7") == WeakComposition{7});
  for (std::string bad : {"", "1,,2", "1,-2", "a", "1.5", "1 ,2"}) CHECK_THROWS_AS(parse_signature(bad), std::invalid_argument);
}

TEST_CASE("trees round-trip in both formats") {
  for (const auto& s : oracle::sweep(3, 2))
    for (const auto& T : enumerate_trees(s)) {
      CHECK(parse_tree(to_json(T).dump()) == T);
      CHECK(parse_tree(to_json(inversions(T)).dump(), &s) == T);
    }
}

TEST_CASE("tree json layout") {
  WeakComposition s{0, 1};
  auto T = construct_tree(s, support::inv(2, {{2, 1, 1}}));
  CHECK(to_json(T).dump() == R"({"s":[0,1],"tree":[2,[null,[1,[null]]]]})");
  CHECK(to_json(inversions(T)).dump() == R"({"n":2,"inv":[[2,1,1]]})");
}

TEST_CASE("bad trees are rejected") {
  CHECK_THROWS_AS(parse_tree(R"({"s":[0,1],"tree":[1,[null]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tree(R"({"s":[0,1],"tree":[2,[[2,[null]],null]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tree(R"({"s":[0,1],"tree":[2,[null]]})"), std::domain_error);
  CHECK_THROWS_AS(parse_tree(R"({"n":2,"inv":[[2,1,1]]})"), std::invalid_argument);
  WeakComposition other{0, 2};
  CHECK_THROWS_AS(parse_tree(R"({"s":[0,1],"tree":[2,[null,[1,[null]]]]})", &other), std::invalid_argument);
}

TEST_CASE("dot output") {
  auto dot = to_dot(hasse({0, 0, 1}));
  CHECK(dot.rfind("digraph hasse {\n  rankdir=BT;\n", 0) == 0);
  CHECK(dot.find("\"0.0.0\" -> ") != std::string::npos);
  CHECK(dot.find("[label=\"(1,3)\"]") != std::string::npos);
  CHECK(dot == to_dot(hasse({0, 0, 1})));
}

TEST_CASE("nu-tree and verdict json") {
  NuTree t{"NE", {{0, 1}, {1, 1}, {0, 0}}};
  CHECK(to_json(t).dump() == R"({"nu":"NE","points":[[0,1],[1,1],[0,0]]})");
  CHECK(is_nu_tree(t));
  Verdict v{"lattice", true, 4, 10, {}};
  CHECK(to_json(v).dump() == R"({"check":"lattice","ok":true,"elements":4,"checked":10})");
  v.fail("x");
  CHECK(to_json(v)["witness"] == "x");
}

}
