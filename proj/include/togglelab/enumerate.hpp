#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "togglelab/set_family.hpp"

namespace togglelab {

inline constexpr std::uint32_t kMaxExhaustiveGround = 5;
inline constexpr std::uint32_t kMaxSampledGround = 10;

// A source of normalized families over an auto-labeled ground e0..e{k-1}.
// Exhaustive mode walks every nonempty subfamily of 2^E once, in mask order,
// and collapses raw families that normalize to the same result. Sampled mode
// includes each subset of 2^E independently with probability 1/2 (one engine
// draw per subset, ascending), reproducibly from the seed.
struct FamilyStream {
  enum class Mode { Exhaustive, Sampled };

  std::uint32_t ground_size = 0;
  Mode mode = Mode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;  // families to yield in sampled mode

  bool transitive_only = false;
  std::uint32_t min_size = 0;  // post-normalization |L| floor; 0 disables

  static FamilyStream exhaustive(std::uint32_t k) {
    FamilyStream s;
    s.ground_size = k;
    return s;
  }
  static FamilyStream sampled(std::uint32_t k, std::uint64_t seed, std::uint64_t count) {
    FamilyStream s;
    s.ground_size = k;
    s.mode = Mode::Sampled;
    s.seed = seed;
    s.count = count;
    return s;
  }
};

class FamilyEnumerator {
 public:
  explicit FamilyEnumerator(FamilyStream stream);

  // Next normalized family passing the filters, or nullopt when exhausted.
  // Families that normalize to an empty ground (the one-member degenerate)
  // are always dropped.
  std::optional<SetFamily> next();

  std::uint64_t raw_examined() const { return raw_examined_; }
  std::uint64_t collapsed_duplicates() const { return collapsed_duplicates_; }
  std::uint64_t degenerate_dropped() const { return degenerate_dropped_; }
  std::uint64_t filtered_out() const { return filtered_out_; }

 private:
  std::optional<SetFamily> next_exhaustive();
  std::optional<SetFamily> next_sampled();
  std::optional<SetFamily> admit(SetFamily raw);

  FamilyStream stream_;
  std::uint64_t subset_count_ = 0;  // 2^k
  std::uint64_t next_code_ = 1;     // exhaustive: bit j selects subset with mask j
  std::uint64_t code_end_ = 0;
  std::set<std::pair<std::vector<std::string>, std::vector<std::uint64_t>>> seen_;
  std::mt19937_64 rng_;
  std::uint64_t yielded_ = 0;
  std::uint64_t raw_examined_ = 0;
  std::uint64_t collapsed_duplicates_ = 0;
  std::uint64_t degenerate_dropped_ = 0;
  std::uint64_t filtered_out_ = 0;
};

// Convenience: materialize the whole stream (exhaustive) or `count` families
// (sampled).
std::vector<SetFamily> collect_families(const FamilyStream& stream);

}  // namespace togglelab
