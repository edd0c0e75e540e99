#include "togglelab/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace togglelab {

namespace {

std::vector<std::uint32_t> mask_points(std::uint64_t m) {
  std::vector<std::uint32_t> out;
  while (m) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

}  // namespace

PosetParseResult parse_poset(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("covers"))
    throw std::invalid_argument("poset document needs 'elements' and 'covers' fields");
  PosetParseResult out;
  out.poset.elements = doc.at("elements").get<std::vector<std::string>>();
  const std::size_t k = out.poset.elements.size();
  if (k > kMaxGroundSize) throw std::invalid_argument("poset larger than 64 elements");

  std::unordered_map<std::string, std::uint32_t> pos;
  for (std::uint32_t i = 0; i < k; ++i)
    if (!pos.emplace(out.poset.elements[i], i).second)
      throw std::invalid_argument("duplicate poset element: " + out.poset.elements[i]);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> raw;
  for (const auto& entry : doc.at("covers")) {
    auto pair = entry.get<std::vector<std::string>>();
    if (pair.size() != 2)
      throw std::invalid_argument("cover must be a [lower, upper] pair");
    auto lo = pos.find(pair[0]);
    auto hi = pos.find(pair[1]);
    if (lo == pos.end()) throw std::invalid_argument("unknown label in covers: " + pair[0]);
    if (hi == pos.end()) throw std::invalid_argument("unknown label in covers: " + pair[1]);
    if (lo->second == hi->second)
      throw std::invalid_argument("cycle detected: element covers itself: " + pair[0]);
    raw.emplace_back(lo->second, hi->second);
  }

  // Cycle check on the cover digraph before any reduction.
  {
    std::vector<std::vector<std::uint32_t>> up(k);
    for (auto [lo, hi] : raw) up[lo].push_back(hi);
    std::vector<int> state(k, 0);  // 0 new, 1 open, 2 done
    std::vector<std::pair<std::uint32_t, std::size_t>> stack;
    for (std::uint32_t root = 0; root < k; ++root) {
      if (state[root]) continue;
      stack.emplace_back(root, 0);
      state[root] = 1;
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < up[v].size()) {
          std::uint32_t w = up[v][next++];
          if (state[w] == 1)
            throw std::invalid_argument("cycle detected in covers through element '" +
                                        out.poset.elements[w] + "'");
          if (state[w] == 0) {
            state[w] = 1;
            stack.emplace_back(w, 0);
          }
        } else {
          state[v] = 2;
          stack.pop_back();
        }
      }
    }
  }

  // Strict transitive closure of the full relation.
  std::vector<std::uint64_t> below(k, 0);
  for (auto [lo, hi] : raw) below[hi] |= std::uint64_t{1} << lo;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint32_t v = 0; v < k; ++v) {
      std::uint64_t acc = below[v];
      for (std::uint32_t u : mask_points(below[v])) acc |= below[u];
      if (acc != below[v]) {
        below[v] = acc;
        changed = true;
      }
    }
  }

  // Keep a cover (a,b) only if no other element lies strictly between; exact
  // duplicates and transitively implied pairs are dropped with a warning.
  std::set<std::pair<std::uint32_t, std::uint32_t>> kept;
  for (auto [lo, hi] : raw) {
    if (kept.count({lo, hi})) {
      out.warnings.push_back("dropped duplicate cover [" + out.poset.elements[lo] + "," +
                             out.poset.elements[hi] + "]");
      continue;
    }
    bool redundant = false;
    for (std::uint32_t mid : mask_points(below[hi] & ~(std::uint64_t{1} << lo))) {
      if (below[mid] & (std::uint64_t{1} << lo)) {
        redundant = true;
        break;
      }
    }
    if (redundant) {
      out.warnings.push_back("dropped redundant cover [" + out.poset.elements[lo] + "," +
                             out.poset.elements[hi] + "]");
      continue;
    }
    kept.emplace(lo, hi);
  }
  out.poset.covers.assign(kept.begin(), kept.end());
  out.poset.strictly_below = std::move(below);
  return out;
}

SetFamily order_ideals(const Poset& p) {
  const std::size_t k = p.size();
  std::vector<std::uint64_t> ideals;
  std::unordered_set<std::uint64_t> seen;
  ideals.push_back(0);
  seen.insert(0);
  for (std::size_t qi = 0; qi < ideals.size(); ++qi) {
    std::uint64_t ideal = ideals[qi];
    for (std::uint32_t e = 0; e < k; ++e) {
      std::uint64_t bit = std::uint64_t{1} << e;
      if (ideal & bit) continue;
      if ((p.strictly_below[e] & ~ideal) != 0) continue;  // some lower element missing
      std::uint64_t grown = ideal | bit;
      if (seen.insert(grown).second) {
        if (ideals.size() >= kMaxFamilySize)
          throw std::invalid_argument("poset has more than 2^20 order ideals");
        ideals.push_back(grown);
      }
    }
  }
  std::sort(ideals.begin(), ideals.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    return mask_points(a) < mask_points(b);
  });
  return SetFamily::from_masks(p.elements, std::move(ideals));
}

bool hasse_connected(const Poset& p) {
  const std::size_t k = p.size();
  if (k <= 1) return true;
  std::vector<std::uint32_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (auto [lo, hi] : p.covers) parent[find(lo)] = find(hi);
  std::uint32_t root = find(0);
  for (std::uint32_t i = 1; i < k; ++i)
    if (find(i) != root) return false;
  return true;
}

}  // namespace togglelab
