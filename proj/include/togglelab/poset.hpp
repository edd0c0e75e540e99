#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "togglelab/set_family.hpp"

namespace togglelab {

// A finite poset given by its cover relation (lower, upper). strictly_below
// caches the strict order as one mask per element.
struct Poset {
  std::vector<std::string> elements;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> covers;
  std::vector<std::uint64_t> strictly_below;

  std::size_t size() const { return elements.size(); }
};

struct PosetParseResult {
  Poset poset;
  std::vector<std::string> warnings;  // redundant covers that were dropped
};

// Document fields: `elements` (list of strings), `covers` (list of 2-element
// lists [lower, upper]). Rejects unknown labels and cycles; drops (with a
// warning) covers implied by transitivity of the others.
PosetParseResult parse_poset(const nlohmann::json& doc);

// All down-closed subsets, ordered by size then lexicographically as sorted
// index sequences; the family ground is the poset element list.
SetFamily order_ideals(const Poset& p);

// Connectivity of the undirected cover graph. The empty poset counts as
// connected by convention.
bool hasse_connected(const Poset& p);

}  // namespace togglelab
