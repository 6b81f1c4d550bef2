// slattice: enumerate, draw and verify s-weak orders and s-Tamari lattices.
// Exit status: 0 ok, 1 a verification failed, 2 usage or unsupported input.

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slattice/slattice.hpp"

using namespace slattice;

namespace {

struct Options {
  std::string s;
  std::string kind = "weak";
  std::string format = "json";
  std::string checks = "lattice,semidistributive,polygonal,hh,sublattice,quotient,nu-iso";
  std::string dir = "down";
  std::string to = "nu-path";
  std::vector<std::string> trees;
};

std::optional<WeakComposition> signature(const Options& o) {
  if (o.s.empty()) return std::nullopt;
  return parse_signature(o.s);
}

WeakComposition require_signature(const Options& o) {
  auto s = signature(o);
  if (!s) throw std::invalid_argument("--s is required");
  return *s;
}

// Positional trees first, then one JSON document per non-empty stdin line.
std::vector<SDecreasingTree> read_trees(const Options& o, std::size_t want) {
  auto s = signature(o);
  std::vector<std::string> texts = o.trees;
  std::string line;
  while (texts.size() < want && std::getline(std::cin, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) texts.push_back(line);
  if (texts.size() != want)
    throw std::invalid_argument("expected " + std::to_string(want) + " tree(s), got " + std::to_string(texts.size()));
  std::vector<SDecreasingTree> out;
  for (const auto& t : texts) out.push_back(parse_tree(t, s ? &*s : nullptr));
  if (want == 2 && !(out[0].signature() == out[1].signature()))
    throw std::invalid_argument("trees have different signatures");
  return out;
}

void print_tree(const SDecreasingTree& T, const std::string& format) {
  if (format == "text")
    std::cout << inversions(T).key() << "\n";
  else
    std::cout << to_json(T).dump() << "\n";
}

HasseDiagram diagram(const WeakComposition& s, const std::string& kind) {
  check_limit(s);
  return kind == "tamari" ? tamari_hasse(s) : hasse(s);
}

int cmd_enumerate(const Options& o) {
  auto H = diagram(require_signature(o), o.kind);
  if (o.format == "text") {
    for (const auto& I : H.elements) std::cout << I.key() << "\n";
    return 0;
  }
  json out = json::array();
  for (std::size_t i = 0; i < H.size(); ++i) out.push_back(to_json(H.tree(i)));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_hasse(const Options& o) {
  auto H = diagram(require_signature(o), o.kind);
  if (o.format == "dot") {
    std::cout << to_dot(H, o.kind == "tamari" ? "s_tamari" : "s_weak");
  } else if (o.format == "text") {
    for (const auto& e : H.edges)
      std::cout << H.elements[e.from].key() << " -> " << H.elements[e.to].key() << " " << e.label.str() << "\n";
  } else {
    std::cout << to_json(H).dump(2) << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o) {
  const auto s = require_signature(o);
  std::vector<std::string> checks;
  std::stringstream ss(o.checks);
  for (std::string c; std::getline(ss, c, ',');) {
    static const std::set<std::string> known{"lattice", "semidistributive", "polygonal", "hh",
                                             "sublattice", "quotient", "nu-iso"};
    if (!known.count(c)) throw CLI::ValidationError("--checks", "unknown check '" + c + "'");
    checks.push_back(c);
  }
  // the quotient claim is refused up front rather than reported as a failure
  for (const auto& c : checks)
    if (c == "quotient") require_quotient_support(s);

  std::optional<FiniteLattice> L, W;
  std::optional<PolygonCensus> census;
  auto lattice = [&]() -> const FiniteLattice& {
    if (!L) L.emplace(o.kind == "tamari" ? tamari_lattice(s) : weak_lattice(s));
    return *L;
  };
  auto polygons = [&]() -> const PolygonCensus& {
    if (!census) census = classify_polygons(lattice());
    return *census;
  };

  json out = json::array();
  bool all_ok = true;
  for (const auto& c : checks) {
    Verdict v;
    json extra;
    if (c == "lattice") {
      v = verify_lattice(lattice());
    } else if (c == "semidistributive") {
      auto r = verify_semidistributive(lattice());
      v = r.direct;
      if (!r.agree()) v.fail("direct check and covers criterion disagree");
      extra["covers_route"] = to_json(r.covers_route);
    } else if (c == "polygonal") {
      v = verify_polygonal(lattice(), polygons());
      extra["shapes"] = polygons().counts();
    } else if (c == "hh") {
      v = verify_hh(lattice(), polygons());
    } else if (c == "sublattice") {
      v = verify_sublattice(s);
    } else if (c == "quotient") {
      if (!W) W.emplace(weak_lattice(s));
      v = verify_quotient(*W);
    } else {
      v = verify_nu_isomorphism(s);
    }
    json j = to_json(v);
    if (c != "sublattice" && c != "quotient" && c != "nu-iso") j["kind"] = o.kind;
    for (auto& [k, val] : extra.items()) j[k] = val;
    out.push_back(j);
    all_ok = all_ok && v.ok;
  }
  std::cout << out.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int cmd_join_meet(const Options& o, bool is_join) {
  auto ts = read_trees(o, 2);
  print_tree(is_join ? join(ts[0], ts[1]) : meet(ts[0], ts[1]), o.format);
  return 0;
}

int cmd_project(const Options& o) {
  auto T = read_trees(o, 1).front();
  print_tree(o.dir == "up" ? pi_up(T) : pi_down(T), o.format);
  return 0;
}

int cmd_map(const Options& o) {
  auto T = read_trees(o, 1).front();
  if (o.to == "s-perm") {
    auto w = s_permutation(T);
    if (o.format == "text") {
      for (int v : w) std::cout << v << ' ';
      std::cout << "\n";
    } else {
      std::cout << json(w).dump() << "\n";
    }
  } else if (o.to == "nu-tree") {
    auto t = tree_to_nutree(T);
    if (o.format == "text") {
      for (auto p : t.points) std::cout << p.str();
      std::cout << "\n";
    } else {
      std::cout << to_json(t).dump() << "\n";
    }
  } else {
    auto p = tree_to_path(T);
    if (o.format == "text")
      std::cout << p.steps() << "\n";
    else
      std::cout << json{{"nu", p.nu()}, {"path", p.steps()}}.dump() << "\n";
  }
  return 0;
}

int cmd_classes(const Options& o) {
  auto s = require_signature(o);
  check_limit(s);
  auto cls = tamari_classes(s);
  if (o.format == "text") {
    for (const auto& c : cls) std::cout << c.bottom.key() << " .. " << c.top.key() << " (" << c.members.size() << ")\n";
  } else {
    std::cout << to_json(cls).dump(2) << "\n";
  }
  return 0;
}

int cmd_count(const Options& o) {
  auto s = require_signature(o);
  std::cout << "weak:" << tree_count(s);
  check_limit(s);
  std::cout << " tamari:" << enumerate_tamari(s).size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"s-weak order and s-Tamari lattice toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_s = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--s", o.s, "signature, e.g. 0,2,2");
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };
  auto add_kind = [&](CLI::App* c) {
    c->add_option("--kind", o.kind, "weak or tamari")->check(CLI::IsMember({"weak", "tamari"}));
  };
  auto add_trees = [&](CLI::App* c) {
    c->add_option("trees", o.trees, "trees as JSON (tree or inversion form); read from stdin when omitted");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list the elements");
  add_s(enumerate, true);
  add_kind(enumerate);
  add_format(enumerate, {"json", "text"});

  auto* hasse_cmd = app.add_subcommand("hasse", "cover relations");
  add_s(hasse_cmd, true);
  add_kind(hasse_cmd);
  add_format(hasse_cmd, {"json", "dot", "text"});

  auto* verify = app.add_subcommand("verify", "run property checks, print JSON verdicts");
  add_s(verify, true);
  add_kind(verify);
  verify->add_option("--checks", o.checks, "comma-separated list of checks");

  auto* join_cmd = app.add_subcommand("join", "join of two trees");
  auto* meet_cmd = app.add_subcommand("meet", "meet of two trees");
  auto* project = app.add_subcommand("project", "apply pi_down or pi_up");
  auto* map = app.add_subcommand("map", "map an s-Tamari tree to a nu-path, nu-tree or s-permutation");
  for (auto* c : {join_cmd, meet_cmd, project, map}) {
    add_s(c, false);
    add_format(c, {"json", "text"});
    add_trees(c);
  }
  project->add_option("--dir", o.dir, "down or up")->check(CLI::IsMember({"down", "up"}));
  map->add_option("--to", o.to, "target")->check(CLI::IsMember({"nu-path", "nu-tree", "s-perm"}));

  auto* classes = app.add_subcommand("classes", "s-Tamari congruence classes");
  add_s(classes, true);
  add_format(classes, {"json", "text"});

  auto* count = app.add_subcommand("count", "number of s-decreasing and s-Tamari trees");
  add_s(count, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(o);
    if (hasse_cmd->parsed()) return cmd_hasse(o);
    if (verify->parsed()) return cmd_verify(o);
    if (join_cmd->parsed()) return cmd_join_meet(o, true);
    if (meet_cmd->parsed()) return cmd_join_meet(o, false);
    if (project->parsed()) return cmd_project(o);
    if (map->parsed()) return cmd_map(o);
    if (classes->parsed()) return cmd_classes(o);
    if (count->parsed()) return cmd_count(o);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const unsupported_signature& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const limit_exceeded& e) {
    std::cerr << "too large: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
