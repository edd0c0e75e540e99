#pragma once

#include <cstdint>
#include <vector>

#include "togglelab/permutation.hpp"

namespace togglelab {

// A partition of {0..n-1} into equal-size blocks preserved by a group.
// block_of is canonical: blocks are numbered by first occurrence, so two
// systems are equal partitions iff their block_of arrays are equal.
struct BlockSystem {
  std::vector<std::uint32_t> block_of;
  std::uint32_t num_blocks = 0;
  std::uint32_t block_size = 0;

  bool trivial() const { return num_blocks <= 1 || block_size <= 1; }
  std::size_t degree() const { return block_of.size(); }
  std::vector<std::vector<std::uint32_t>> blocks() const;

  // Renumber blocks by first occurrence and fill in the counts. Throws if the
  // classes do not all have the same size.
  static BlockSystem from_assignment(const std::vector<std::uint32_t>& assignment);

  bool operator==(const BlockSystem&) const = default;
};

// g maps every block onto a block (setwise image is a single block).
bool preserves_blocks(const Perm& g, const BlockSystem& bs);

// g maps every block onto itself; the element-level "type 2" test.
bool fixes_every_block(const Perm& g, const BlockSystem& bs);

// The finest block system of <gens> in which alpha and beta share a block
// (Atkinson's union-find refinement). May be the one-block system. Throws on
// non-transitive input or alpha == beta.
BlockSystem minimal_block(const std::vector<Perm>& gens, std::size_t n,
                          std::uint32_t alpha, std::uint32_t beta);

// All distinct nontrivial systems arising as minimal_block(0, beta),
// beta = 1..n-1, ordered by block size then lexicographically by block_of.
std::vector<BlockSystem> nontrivial_block_systems(const std::vector<Perm>& gens,
                                                  std::size_t n);

// Transitive action with no nontrivial block system. Requires n >= 2.
bool is_primitive(const std::vector<Perm>& gens, std::size_t n);

}  // namespace togglelab
