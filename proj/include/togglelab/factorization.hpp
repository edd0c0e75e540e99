#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "togglelab/blocks.hpp"
#include "togglelab/set_family.hpp"
#include "togglelab/toggles.hpp"

namespace togglelab {

// Relative to a fixed block system: type 2 elements fix every block setwise,
// type 1 elements move some block.
enum class ToggleType { Type1, Type2 };

struct ToggleTypeMap {
  BlockSystem block_system;
  std::vector<ToggleType> type_of;  // aligned with the ground ordering

  std::vector<std::uint32_t> ground_of_type(ToggleType t) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t e = 0; e < type_of.size(); ++e)
      if (type_of[e] == t) out.push_back(e);
    return out;
  }
};

// Throws if some toggle violates the block law of bs.
ToggleTypeMap classify_toggles(const SetFamily& f, const ToggleSet& ts,
                               const BlockSystem& bs);

// Orbits of the points under the type 1 toggles alone. Under the product
// hypothesis each layer meets every block exactly once.
struct LayerPartition {
  std::vector<std::vector<std::uint32_t>> layers;
};

LayerPartition layers(const SetFamily& f, const ToggleSet& ts, const BlockSystem& bs);

// A toggle-disjoint Cartesian factorization L = L1 (x) L2 with E1 the type 1
// ground elements and E2 the type 2 ground elements of a block system.
struct Factorization {
  std::vector<std::string> ground1, ground2;
  SetFamily left;   // L1 over E1, |L1| = num_blocks
  SetFamily right;  // L2 over E2, |L2| = block_size
  std::uint32_t num_blocks = 0;
  std::uint32_t block_size = 0;

  // Invariants: disjoint grounds, |L1|*|L2| = |L|, and the reconstructed
  // product equals L as a set of sets. Throws std::logic_error on violation.
  void validate(const SetFamily& f) const;
};

// Splits f along bs when the projections verify the product equation:
// |L1| = number of blocks, |L2| = block size, and {X1 u X2} = L. Returns
// nullopt when f is not a product along this system. The product equation is
// checked directly rather than assuming the layer hypothesis.
std::optional<Factorization> try_factor(const SetFamily& f, const BlockSystem& bs);

// order(T(L)) = order(T(L1)) * order(T(L2)) and every toggle of f acts as the
// matching factor toggle on its coordinate under the product indexing.
bool verify_direct_product(const SetFamily& f, const Factorization& fact);

// Recursive factorization record. A node either is a leaf (no nontrivial
// block system yields a product) or carries a split plus the two factor
// subtrees.
struct FactorizationTree {
  SetFamily family;
  Group group;
  std::optional<Factorization> split;
  std::vector<FactorizationTree> children;

  bool is_leaf() const { return children.empty(); }
  std::vector<const FactorizationTree*> leaves() const;
  std::vector<std::size_t> leaf_degrees() const;
};

// Tries nontrivial block systems in their deterministic order and recurses
// on the first successful split. Requires a normalized, transitive family.
FactorizationTree decompose(const SetFamily& f);

}  // namespace togglelab
