#pragma once

// Small builders shared by the test files.

#include <array>
#include <initializer_list>
#include <string>

#include "slattice/io.hpp"

namespace support {

using namespace slattice;

inline SDecreasingTree tree(const std::string& node, const WeakComposition& s) {
  json j{{"s", s.entries()}, {"tree", json::parse(node)}};
  return tree_from_json(j);
}

inline MultiInversionSet inv(int n, std::initializer_list<std::array<int, 3>> triples) {
  MultiInversionSet I(n);
  for (auto [y, x, c] : triples) I.set(y, x, c);
  return I;
}

}  // namespace support
