#pragma once

// JSON and DOT serialization.
//   tree:        {"s":[...], "tree": NODE}, NODE = [label, [CHILD, ...]], CHILD = NODE | null
//   inversions:  {"n": n, "inv": [[y,x,c], ...]}  (c > 0 only, sorted by (y,x))
//   nu-tree:     {"nu": "...", "points": [[x,y], ...]}  (sorted by y desc, x asc)

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "slattice/core.hpp"
#include "slattice/lattice_props.hpp"
#include "slattice/nu_tamari.hpp"
#include "slattice/tamari.hpp"
#include "slattice/weak_order.hpp"

namespace slattice {

using json = nlohmann::ordered_json;

inline WeakComposition parse_signature(const std::string& text) {
  std::vector<int> e;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 0)
      throw std::invalid_argument("signature must be comma-separated non-negative integers, got '" + text + "'");
    e.push_back(v);
  }
  if (e.empty()) throw std::invalid_argument("empty signature");
  return WeakComposition(std::move(e));
}

inline json tree_node_to_json(const SDecreasingTree& T, int v) {
  if (v == SDecreasingTree::leaf) return nullptr;
  json kids = json::array();
  for (int k : T.children(v)) kids.push_back(tree_node_to_json(T, k));
  return json::array({v, kids});
}

inline json to_json(const SDecreasingTree& T) {
  return json{{"s", T.signature().entries()}, {"tree", tree_node_to_json(T, T.root())}};
}

inline SDecreasingTree tree_from_json(const json& j) {
  auto s = WeakComposition(j.at("s").get<std::vector<int>>());
  std::vector<std::vector<int>> kids(static_cast<std::size_t>(s.length()));
  std::vector<bool> seen(static_cast<std::size_t>(s.length()) + 1, false);
  std::function<int(const json&)> read = [&](const json& node) -> int {
    if (node.is_null()) return SDecreasingTree::leaf;
    if (!node.is_array() || node.size() != 2 || !node[1].is_array())
      throw std::invalid_argument("tree node must be [label, [children]]");
    int v = node[0].get<int>();
    if (v < 1 || v > s.length() || seen[v]) throw std::invalid_argument("bad or repeated label in tree");
    seen[v] = true;
    for (const auto& c : node[1]) kids[v - 1].push_back(read(c));
    return v;
  };
  int root = read(j.at("tree"));
  if (root != s.length()) throw std::invalid_argument("root label must be n");
  return SDecreasingTree(s, std::move(kids));
}

inline json to_json(const MultiInversionSet& I) {
  json inv = json::array();
  for (int y = 2; y <= I.n(); ++y)
    for (int x = 1; x < y; ++x)
      if (I(y, x) > 0) inv.push_back({y, x, I(y, x)});
  return json{{"n", I.n()}, {"inv", inv}};
}

inline MultiInversionSet inversions_from_json(const json& j) {
  MultiInversionSet I(j.at("n").get<int>());
  for (const auto& t : j.at("inv")) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("inversions are [y,x,c] triples");
    I.set(t[0].get<int>(), t[1].get<int>(), t[2].get<int>());
  }
  return I;
}

// Either format; the inversion form needs the signature from elsewhere.
inline SDecreasingTree parse_tree(const std::string& text, const WeakComposition* s = nullptr) {
  json j = json::parse(text);
  if (j.contains("tree")) {
    auto T = tree_from_json(j);
    if (s && !(T.signature() == *s)) throw std::invalid_argument("tree signature differs from --s");
    return T;
  }
  if (!s) throw std::invalid_argument("an inversion list needs --s");
  return construct_tree(*s, inversions_from_json(j));
}

inline json to_json(const NuTree& t) {
  json pts = json::array();
  for (auto p : t.points) pts.push_back({p.x, p.y});
  return json{{"nu", t.nu}, {"points", pts}};
}

inline json to_json(const TreeAscent& a) { return json::array({a.a, a.c}); }

inline json to_json(const HasseDiagram& H) {
  json els = json::array(), edges = json::array();
  for (const auto& I : H.elements) els.push_back(to_json(I));
  for (const auto& e : H.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"label", to_json(e.label)}});
  return json{{"s", H.s.entries()}, {"elements", els}, {"edges", edges}};
}

inline std::string to_dot(const HasseDiagram& H, const std::string& name = "hasse") {
  std::string out = "digraph " + name + " {\n  rankdir=BT;\n";
  for (const auto& I : H.elements) out += "  \"" + I.key() + "\";\n";
  for (const auto& e : H.edges)
    out += "  \"" + H.elements[e.from].key() + "\" -> \"" + H.elements[e.to].key() + "\" [label=\"" + e.label.str() +
           "\"];\n";
  return out + "}\n";
}

inline json to_json(const std::vector<TamariClass>& classes) {
  json out = json::array();
  for (const auto& c : classes) {
    json members = json::array();
    for (const auto& m : c.members) members.push_back(to_json(m));
    out.push_back({{"bottom", to_json(c.bottom)}, {"top", to_json(c.top)}, {"members", members}});
  }
  return out;
}

inline json to_json(const Verdict& v) {
  json j{{"check", v.check}, {"ok", v.ok}, {"elements", v.elements}, {"checked", v.checked}};
  if (!v.ok) j["witness"] = v.witness;
  return j;
}

}  // namespace slattice
