#include <doctest.h>

#include <cstdlib>
#include <set>

#include "oracles.hpp"
#include "support.hpp"

using namespace slattice;

TEST_SUITE("lattice_props") {

TEST_CASE("weak order and Tamari lattices pass every check on the sweep") {
  for (const auto& s : oracle::sweep(4, 2)) {
    CAPTURE(s.str());
    for (auto L : {weak_lattice(s), tamari_lattice(s)}) {
      auto lat = verify_lattice(L);
      CHECK_MESSAGE(lat.ok, lat.witness);
      auto sd = verify_semidistributive(L);
      CHECK(sd.agree());
      CHECK_MESSAGE(sd.direct.ok, sd.direct.witness);
      auto census = classify_polygons(L);
      CHECK_MESSAGE(census.ok(), (census.ok() ? "" : census.failures.front()));
      auto hh = verify_hh(L, census);
      CHECK_MESSAGE(hh.ok, hh.witness);
      for (const auto& p : census.polygons)
        if (p.shape == PolygonShape::hexagon) CHECK(s(p.labels_z.front().c) == 1);
    }
  }
}

TEST_CASE("small shapes") {
  // (0,0,1): the weak order is a square, Tamari a chain
  auto sq = classify_polygons(weak_lattice({0, 0, 1}));
  REQUIRE(sq.polygons.size() == 1);
  CHECK(sq.polygons[0].shape == PolygonShape::square);
  CHECK(classify_polygons(tamari_lattice({0, 0, 1})).polygons.empty());

  // (1,1,1): the weak order on S3 is a hexagon and Tamari a pentagon
  auto hex = classify_polygons(weak_lattice({1, 1, 1}));
  REQUIRE(hex.polygons.size() == 1);
  CHECK(hex.polygons[0].shape == PolygonShape::hexagon);
  CHECK(hex.polygons[0].labels_z == std::vector<TreeAscent>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(hex.polygons[0].labels_q == std::vector<TreeAscent>{{2, 3}, {1, 3}, {1, 2}});
  auto pent = classify_polygons(tamari_lattice({1, 1, 1}));
  REQUIRE(pent.polygons.size() == 1);
  CHECK((pent.polygons[0].shape == PolygonShape::pentagon_left ||
         pent.polygons[0].shape == PolygonShape::pentagon_right));
}

TEST_CASE("polygon census is closed under mirroring") {
  for (const auto& s : oracle::sweep(4, 2)) {
    auto L = weak_lattice(s);
    const auto& E = L.hasse().elements;
    std::set<std::pair<MultiInversionSet, MultiInversionSet>> iv;
    for (const auto& p : classify_polygons(L).polygons) iv.insert({E[p.base], E[p.top]});
    for (const auto& [b, t] : iv) CHECK(iv.count({mirror(s, t), mirror(s, b)}) == 1);
  }
}

TEST_CASE("checks catch a poset that is not a lattice") {
  // the square without its top
  auto H = hasse({0, 0, 1});
  HasseDiagram cut{H.s, {H.elements.begin(), H.elements.end() - 1}, {}};
  for (const auto& e : H.edges)
    if (e.to + 1 < H.size()) cut.edges.push_back(e);
  FiniteLattice L(cut);
  CHECK_FALSE(verify_lattice(L).ok);
  CHECK_FALSE(classify_polygons(L).ok());
}

TEST_CASE("sublattice") {
  for (const auto& s : oracle::sweep(4, 2)) {
    auto v = verify_sublattice(s);
    CHECK_MESSAGE(v.ok, std::string(s.str() + " " + v.witness));
  }
}

TEST_CASE("quotient") {
  for (const auto& s : oracle::sweep(4, 2)) {
    CAPTURE(s.str());
    if (!quotient_supported(s)) {
      CHECK_THROWS_AS(verify_quotient(weak_lattice(s)), unsupported_signature);
      continue;
    }
    auto v = verify_quotient(weak_lattice(s));
    CHECK_MESSAGE(v.ok, v.witness);
  }
}

TEST_CASE("element guard") {
  setenv("SLATTICE_MAX_ELEMENTS", "10", 1);
  CHECK(element_limit() == 10);
  CHECK_THROWS_AS(weak_lattice({0, 2, 2}), limit_exceeded);
  CHECK_NOTHROW(weak_lattice({0, 0, 1}));
  setenv("SLATTICE_MAX_ELEMENTS", "junk", 1);
  CHECK(element_limit() == 20000);
  unsetenv("SLATTICE_MAX_ELEMENTS");
}

}
