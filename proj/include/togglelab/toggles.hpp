#pragma once

#include <cstdint>
#include <vector>

#include "togglelab/group.hpp"
#include "togglelab/set_family.hpp"

namespace togglelab {

// The toggle of each ground element: tau_e moves member X to X ^ {e} exactly
// when that set belongs to the family, so every toggle is an involution.
struct ToggleSet {
  std::vector<Perm> toggles;                   // aligned with the ground ordering
  std::vector<std::uint32_t> identity_toggles;  // ground indices whose toggle is trivial

  // Generators for the toggle group: the non-identity toggles, ground order.
  std::vector<Perm> group_generators() const {
    std::vector<Perm> out;
    for (const Perm& t : toggles)
      if (!t.is_identity()) out.push_back(t);
    return out;
  }
};

ToggleSet build_toggles(const SetFamily& f);

// Stabilizer chain of the group generated by all non-identity toggles.
Group toggle_group(const SetFamily& f);

// One toggle orbit covering every member.
bool is_transitive(const SetFamily& f);

}  // namespace togglelab
