#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ipsat/poset.hpp"
#include "ipsat/sets.hpp"

namespace ipsat {

// Family JSON: {"v": 1, "n": <int>, "sets": [[<ints ascending>], ...]}.
// Loading re-canonicalizes, so round trips are lossless and byte-stable.
nlohmann::json family_to_json(const Family& fam);
Family family_from_json(const nlohmann::json& j);

// Poset JSON: {"v": 1, "size": <int>, "covers": [[lower, upper], ...]}.
nlohmann::json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);

Family load_family(const std::string& path);
Poset load_poset(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

/// Hasse diagram of (fam, subset-of) in DOT, one rank per cardinality.
std::string family_to_dot(const Family& fam);

}  // namespace ipsat
