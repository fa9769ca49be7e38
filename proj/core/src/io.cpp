#include "ipsat/io.hpp"

#include <fstream>
#include <map>

namespace ipsat {

using nlohmann::json;

namespace {

void check_version(const json& j, const char* what) {
  if (j.contains("v") && j.at("v").get<int>() != 1)
    throw usage_error(std::string(what) + ": unsupported schema version");
}

}  // namespace

json family_to_json(const Family& fam) {
  json sets = json::array();
  for (SetWord w : fam.members()) sets.push_back(w.elements());
  return json{{"v", 1}, {"n", fam.ground().n}, {"sets", std::move(sets)}};
}

Family family_from_json(const json& j) {
  check_version(j, "family");
  const GroundSet g(j.at("n").get<int>());
  std::vector<SetWord> members;
  for (const auto& elems : j.at("sets")) {
    SetWord w;
    for (int e : elems.get<std::vector<int>>()) {
      if (e < 1 || e > g.n)
        throw usage_error("family: element " + std::to_string(e) +
                          " outside [1," + std::to_string(g.n) + "]");
      w = w.with(e);
    }
    members.push_back(w);
  }
  return Family(g, std::move(members));
}

json poset_to_json(const Poset& p) {
  json covers = json::array();
  for (auto [lo, hi] : p.hasse_covers()) covers.push_back({lo, hi});
  return json{{"v", 1}, {"size", p.size()}, {"covers", std::move(covers)}};
}

Poset poset_from_json(const json& j) {
  check_version(j, "poset");
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2)
      throw usage_error("poset: each cover must be a [lower, upper] pair");
    covers.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  return Poset::from_covers(j.at("size").get<int>(), covers);
}

namespace {

json load_json_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw usage_error(std::string(what) + ": cannot open " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace

Family load_family(const std::string& path) {
  return family_from_json(load_json_file(path, "family"));
}

Poset load_poset(const std::string& path) {
  return poset_from_json(load_json_file(path, "poset"));
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw usage_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string family_to_dot(const Family& fam) {
  const auto& mem = fam.members();
  std::string out = "digraph family {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < mem.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + mem[i].to_string() +
           "\"];\n";

  std::map<int, std::vector<std::size_t>> by_card;
  for (std::size_t i = 0; i < mem.size(); ++i)
    by_card[mem[i].cardinality()].push_back(i);
  for (const auto& [card, ids] : by_card) {
    out += "  { rank=same;";
    for (std::size_t i : ids) out += " n" + std::to_string(i) + ";";
    out += " }\n";
  }

  // Cover edges only: a < b with nothing in between.
  for (std::size_t a = 0; a < mem.size(); ++a)
    for (std::size_t b = 0; b < mem.size(); ++b) {
      if (!mem[a].strict_subset_of(mem[b])) continue;
      bool cover = true;
      for (std::size_t c = 0; c < mem.size() && cover; ++c)
        if (c != a && c != b && mem[a].strict_subset_of(mem[c]) &&
            mem[c].strict_subset_of(mem[b]))
          cover = false;
      if (cover)
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    }
  return out + "}\n";
}

}  // namespace ipsat
