#include "togglelab/factorization.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace togglelab {

namespace {

std::uint64_t bits_of(const std::vector<std::uint32_t>& ground_indices) {
  std::uint64_t m = 0;
  for (std::uint32_t e : ground_indices) m |= std::uint64_t{1} << e;
  return m;
}

// Projects the masks of f onto the ground elements selected by `keep`,
// deduplicated in first-occurrence order, as a family over those elements.
SetFamily project(const SetFamily& f, std::uint64_t keep) {
  std::vector<std::string> ground;
  std::vector<int> new_bit(f.ground_size(), -1);
  for (std::size_t b = 0; b < f.ground_size(); ++b) {
    if (keep & (std::uint64_t{1} << b)) {
      new_bit[b] = static_cast<int>(ground.size());
      ground.push_back(f.ground()[b]);
    }
  }
  std::vector<std::uint64_t> masks;
  std::set<std::uint64_t> seen;
  for (std::uint64_t m : f.masks()) {
    std::uint64_t compressed = 0;
    std::uint64_t rest = m & keep;
    while (rest) {
      int b = std::countr_zero(rest);
      compressed |= std::uint64_t{1} << new_bit[static_cast<std::size_t>(b)];
      rest &= rest - 1;
    }
    if (seen.insert(compressed).second) masks.push_back(compressed);
  }
  return SetFamily::from_masks(std::move(ground), std::move(masks));
}

}  // namespace

ToggleTypeMap classify_toggles(const SetFamily& f, const ToggleSet& ts,
                               const BlockSystem& bs) {
  if (ts.toggles.size() != f.ground_size() || bs.degree() != f.size())
    throw std::invalid_argument("toggle set or block system does not match family");
  ToggleTypeMap out;
  out.block_system = bs;
  out.type_of.reserve(ts.toggles.size());
  for (std::uint32_t e = 0; e < ts.toggles.size(); ++e) {
    const Perm& t = ts.toggles[e];
    if (!preserves_blocks(t, bs))
      throw std::invalid_argument("block law violated by toggle of '" + f.ground()[e] + "'");
    out.type_of.push_back(fixes_every_block(t, bs) ? ToggleType::Type2 : ToggleType::Type1);
  }
  return out;
}

LayerPartition layers(const SetFamily& f, const ToggleSet& ts, const BlockSystem& bs) {
  ToggleTypeMap types = classify_toggles(f, ts, bs);
  std::vector<Perm> type1;
  for (std::uint32_t e : types.ground_of_type(ToggleType::Type1))
    type1.push_back(ts.toggles[e]);
  return LayerPartition{orbits(type1, f.size())};
}

void Factorization::validate(const SetFamily& f) const {
  if (left.size() != num_blocks || right.size() != block_size)
    throw std::logic_error("factor sizes disagree with the block counts");
  if (left.size() * right.size() != f.size())
    throw std::logic_error("factor sizes do not multiply to the family size");
  std::set<std::string> g1(ground1.begin(), ground1.end());
  for (const auto& label : ground2)
    if (g1.count(label)) throw std::logic_error("factor grounds overlap");
  if (ground1.size() + ground2.size() != f.ground_size())
    throw std::logic_error("factor grounds do not partition the ground set");
  SetFamily product = cartesian_product(left, right);
  // Grounds of f and of the product may be ordered differently; compare
  // members as sorted label sets.
  auto sorted_members = [](const SetFamily& fam) {
    std::set<std::vector<std::string>> out;
    for (std::uint32_t i = 0; i < fam.size(); ++i) {
      auto labels = fam.member_labels(i);
      std::sort(labels.begin(), labels.end());
      out.insert(std::move(labels));
    }
    return out;
  };
  if (sorted_members(f) != sorted_members(product))
    throw std::logic_error("reconstructed product differs from the family");
}

std::optional<Factorization> try_factor(const SetFamily& f, const BlockSystem& bs) {
  ToggleSet ts = build_toggles(f);
  ToggleTypeMap types = classify_toggles(f, ts, bs);
  std::vector<std::uint32_t> e1 = types.ground_of_type(ToggleType::Type1);
  std::vector<std::uint32_t> e2 = types.ground_of_type(ToggleType::Type2);
  const std::uint64_t bits1 = bits_of(e1);
  const std::uint64_t bits2 = bits_of(e2);

  SetFamily l1 = project(f, bits1);
  SetFamily l2 = project(f, bits2);
  if (l1.size() != bs.num_blocks || l2.size() != bs.block_size) return std::nullopt;

  // Product equation, on the original bit positions: every pairwise union
  // must be a member and the counts must match exactly.
  std::set<std::uint64_t> members(f.masks().begin(), f.masks().end());
  std::set<std::uint64_t> produced;
  for (std::uint64_t m : f.masks())
    for (std::uint64_t m2 : f.masks()) produced.insert((m & bits1) | (m2 & bits2));
  if (produced != members) return std::nullopt;

  Factorization fact;
  for (std::uint32_t e : e1) fact.ground1.push_back(f.ground()[e]);
  for (std::uint32_t e : e2) fact.ground2.push_back(f.ground()[e]);
  fact.left = std::move(l1);
  fact.right = std::move(l2);
  fact.num_blocks = bs.num_blocks;
  fact.block_size = bs.block_size;
  return fact;
}

bool verify_direct_product(const SetFamily& f, const Factorization& fact) {
  fact.validate(f);

  const std::uint64_t bits1 = [&] {
    std::uint64_t m = 0;
    for (std::size_t b = 0; b < f.ground_size(); ++b)
      if (std::find(fact.ground1.begin(), fact.ground1.end(), f.ground()[b]) !=
          fact.ground1.end())
        m |= std::uint64_t{1} << b;
    return m;
  }();

  Group whole = toggle_group(f);
  Group left = toggle_group(fact.left);
  Group right = toggle_group(fact.right);
  if (whole.order() != left.order() * right.order()) return false;

  // Product indexing: member i of f corresponds to the coordinate pair
  // (index in L1 of its E1-part, index in L2 of its E2-part).
  std::vector<std::uint32_t> coord1(f.size()), coord2(f.size());
  {
    // Rebuild the projections with the same bit compression used by the
    // factor families.
    std::vector<int> new_bit1(f.ground_size(), -1), new_bit2(f.ground_size(), -1);
    {
      int c1 = 0, c2 = 0;
      for (std::size_t b = 0; b < f.ground_size(); ++b) {
        if (bits1 & (std::uint64_t{1} << b))
          new_bit1[b] = c1++;
        else
          new_bit2[b] = c2++;
      }
    }
    auto compress = [](std::uint64_t m, const std::vector<int>& new_bit) {
      std::uint64_t out = 0;
      while (m) {
        int b = std::countr_zero(m);
        out |= std::uint64_t{1} << new_bit[static_cast<std::size_t>(b)];
        m &= m - 1;
      }
      return out;
    };
    for (std::uint32_t i = 0; i < f.size(); ++i) {
      auto i1 = fact.left.index_of(compress(f.mask(i) & bits1, new_bit1));
      auto i2 = fact.right.index_of(compress(f.mask(i) & ~bits1, new_bit2));
      if (!i1 || !i2) return false;
      coord1[i] = *i1;
      coord2[i] = *i2;
    }
  }

  ToggleSet ts = build_toggles(f);
  ToggleSet ts1 = build_toggles(fact.left);
  ToggleSet ts2 = build_toggles(fact.right);
  for (std::uint32_t e = 0; e < f.ground_size(); ++e) {
    const Perm& t = ts.toggles[e];
    const std::string& label = f.ground()[e];
    auto in1 = std::find(fact.ground1.begin(), fact.ground1.end(), label);
    if (in1 != fact.ground1.end()) {
      const Perm& t1 = ts1.toggles[in1 - fact.ground1.begin()];
      for (std::uint32_t i = 0; i < f.size(); ++i) {
        std::uint32_t j = t(i);
        if (coord1[j] != t1(coord1[i]) || coord2[j] != coord2[i]) return false;
      }
    } else {
      auto in2 = std::find(fact.ground2.begin(), fact.ground2.end(), label);
      if (in2 == fact.ground2.end()) return false;
      const Perm& t2 = ts2.toggles[in2 - fact.ground2.begin()];
      for (std::uint32_t i = 0; i < f.size(); ++i) {
        std::uint32_t j = t(i);
        if (coord2[j] != t2(coord2[i]) || coord1[j] != coord1[i]) return false;
      }
    }
  }
  return true;
}

std::vector<const FactorizationTree*> FactorizationTree::leaves() const {
  std::vector<const FactorizationTree*> out;
  if (is_leaf()) {
    out.push_back(this);
    return out;
  }
  for (const auto& child : children) {
    auto sub = child.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::vector<std::size_t> FactorizationTree::leaf_degrees() const {
  std::vector<std::size_t> out;
  for (const FactorizationTree* leaf : leaves()) out.push_back(leaf->family.size());
  return out;
}

FactorizationTree decompose(const SetFamily& f) {
  ToggleSet ts = build_toggles(f);
  std::vector<Perm> gens = ts.group_generators();
  if (!transitive_on(gens, f.size()))
    throw std::invalid_argument("decompose requires a transitive toggle group");

  FactorizationTree node;
  node.family = f;
  node.group = Group::from_generators(gens, f.size());
  if (f.size() >= 2) {
    for (const BlockSystem& bs : nontrivial_block_systems(gens, f.size())) {
      if (auto fact = try_factor(f, bs)) {
        node.children.push_back(decompose(fact->left));
        node.children.push_back(decompose(fact->right));
        node.split = std::move(fact);
        break;
      }
    }
  }
  return node;
}

}  // namespace togglelab
