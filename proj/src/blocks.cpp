#include "togglelab/blocks.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace togglelab {

std::vector<std::vector<std::uint32_t>> BlockSystem::blocks() const {
  std::vector<std::vector<std::uint32_t>> out(num_blocks);
  for (std::uint32_t i = 0; i < block_of.size(); ++i) out[block_of[i]].push_back(i);
  return out;
}

BlockSystem BlockSystem::from_assignment(const std::vector<std::uint32_t>& assignment) {
  BlockSystem bs;
  bs.block_of.assign(assignment.size(), 0);
  std::vector<std::int64_t> renumber(assignment.size(), -1);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    std::uint32_t a = assignment[i];
    if (a >= assignment.size()) throw std::invalid_argument("block id out of range");
    if (renumber[a] < 0) renumber[a] = next++;
    bs.block_of[i] = static_cast<std::uint32_t>(renumber[a]);
  }
  bs.num_blocks = next;
  std::vector<std::uint32_t> sizes(next, 0);
  for (std::uint32_t b : bs.block_of) ++sizes[b];
  for (std::uint32_t s : sizes)
    if (s != sizes[0]) throw std::invalid_argument("blocks have unequal sizes");
  bs.block_size = sizes.empty() ? 0 : sizes[0];
  return bs;
}

bool preserves_blocks(const Perm& g, const BlockSystem& bs) {
  if (g.degree() != bs.degree()) return false;
  std::vector<std::int64_t> image(bs.num_blocks, -1);
  for (std::uint32_t i = 0; i < bs.degree(); ++i) {
    std::uint32_t b = bs.block_of[i];
    std::uint32_t ib = bs.block_of[g(i)];
    if (image[b] < 0)
      image[b] = ib;
    else if (image[b] != ib)
      return false;
  }
  return true;
}

bool fixes_every_block(const Perm& g, const BlockSystem& bs) {
  if (g.degree() != bs.degree()) return false;
  for (std::uint32_t i = 0; i < bs.degree(); ++i)
    if (bs.block_of[g(i)] != bs.block_of[i]) return false;
  return true;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
};

}  // namespace

BlockSystem minimal_block(const std::vector<Perm>& gens, std::size_t n,
                          std::uint32_t alpha, std::uint32_t beta) {
  if (alpha >= n || beta >= n || alpha == beta)
    throw std::invalid_argument("minimal_block requires two distinct points");
  if (!transitive_on(gens, n))
    throw std::invalid_argument("minimal_block requires a transitive group");

  // Close the "same block" relation under all generators: whenever a ~ b,
  // also g(a) ~ g(b).
  UnionFind uf(n);
  std::deque<std::pair<std::uint32_t, std::uint32_t>> queue;
  uf.parent[uf.find(beta)] = uf.find(alpha);
  queue.emplace_back(alpha, beta);
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (const Perm& g : gens) {
      std::uint32_t x = uf.find(g(a));
      std::uint32_t y = uf.find(g(b));
      if (x != y) {
        uf.parent[y] = x;
        queue.emplace_back(x, y);
      }
    }
  }

  std::vector<std::uint32_t> assignment(n);
  for (std::uint32_t i = 0; i < n; ++i) assignment[i] = uf.find(i);
  return BlockSystem::from_assignment(assignment);
}

std::vector<BlockSystem> nontrivial_block_systems(const std::vector<Perm>& gens,
                                                  std::size_t n) {
  if (!transitive_on(gens, n))
    throw std::invalid_argument("block systems require a transitive group");
  std::vector<BlockSystem> out;
  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint32_t beta = 1; beta < n; ++beta) {
    BlockSystem bs = minimal_block(gens, n, 0, beta);
    if (bs.trivial()) continue;
    if (seen.insert(bs.block_of).second) out.push_back(std::move(bs));
  }
  std::sort(out.begin(), out.end(), [](const BlockSystem& a, const BlockSystem& b) {
    if (a.block_size != b.block_size) return a.block_size < b.block_size;
    return a.block_of < b.block_of;
  });
  return out;
}

bool is_primitive(const std::vector<Perm>& gens, std::size_t n) {
  if (n < 2) throw std::invalid_argument("primitivity needs degree >= 2");
  return nontrivial_block_systems(gens, n).empty();
}

}  // namespace togglelab
