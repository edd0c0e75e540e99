#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace togglelab {

inline constexpr std::size_t kMaxGroundSize = 64;
inline constexpr std::size_t kMaxFamilySize = std::size_t{1} << 20;

// A duplicate-free family L of subsets of an ordered ground set E. Subsets
// are stored as bit masks over the ground ordering, so symmetric difference
// with a single element is one XOR. Point i of the permutation domain is
// sets()[i], in ingestion order.
class SetFamily {
 public:
  // Validates: distinct ground labels, |E| <= 64; every member label known;
  // no duplicate subsets (diagnostic names the duplicate); 1 <= |L| <= 2^20.
  static SetFamily create(std::vector<std::string> ground,
                          const std::vector<std::vector<std::string>>& sets);
  static SetFamily from_masks(std::vector<std::string> ground,
                              std::vector<std::uint64_t> masks);

  std::size_t size() const { return masks_.size(); }          // n = |L|
  std::size_t ground_size() const { return ground_.size(); }  // |E|

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<std::uint64_t>& masks() const { return masks_; }
  std::uint64_t mask(std::uint32_t i) const { return masks_[i]; }

  std::optional<std::uint32_t> index_of(std::uint64_t mask) const {
    auto it = index_.find(mask);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // All ground bits, i.e. (1 << |E|) - 1 handled for |E| = 64 too.
  std::uint64_t universe() const;

  std::vector<std::string> member_labels(std::uint32_t i) const;
  std::string member_string(std::uint32_t i) const;  // "{a,b}" in ground order

  // Same masks under different labels (sizes must match).
  SetFamily with_ground_labels(std::vector<std::string> labels) const;

  bool operator==(const SetFamily& o) const {
    return ground_ == o.ground_ && masks_ == o.masks_;
  }

  nlohmann::json to_json() const;
  static SetFamily from_json(const nlohmann::json& doc);

 private:
  std::vector<std::string> ground_;
  std::vector<std::uint64_t> masks_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;

  void reindex();
};

struct NormalizeResult {
  SetFamily family;
  std::vector<std::string> removed;  // elements present in all or in no member
};

// Deletes every ground element that occurs in all members or in none, from
// the ground and from every member. Member order is preserved.
NormalizeResult normalize(const SetFamily& f);

inline bool is_normalized(const SetFamily& f) { return normalize(f).removed.empty(); }

// All pairwise unions {X1 | X2}, ordered f1-major; the grounds must be
// label-disjoint, so the unions are automatically distinct.
SetFamily cartesian_product(const SetFamily& f1, const SetFamily& f2);

}  // namespace togglelab
