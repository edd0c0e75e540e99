#include "togglelab/enumerate.hpp"

#include <stdexcept>

#include "togglelab/toggles.hpp"

namespace togglelab {

namespace {

std::vector<std::string> auto_ground(std::uint32_t k) {
  std::vector<std::string> out;
  out.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

}  // namespace

FamilyEnumerator::FamilyEnumerator(FamilyStream stream) : stream_(stream) {
  if (stream_.ground_size < 1)
    throw std::invalid_argument("ground size must be at least 1");
  if (stream_.mode == FamilyStream::Mode::Exhaustive) {
    if (stream_.ground_size > kMaxExhaustiveGround)
      throw std::invalid_argument("exhaustive enumeration is infeasible beyond ground size " +
                                  std::to_string(kMaxExhaustiveGround));
  } else {
    if (stream_.ground_size > kMaxSampledGround)
      throw std::invalid_argument("sampled enumeration supports ground size up to " +
                                  std::to_string(kMaxSampledGround));
  }
  subset_count_ = std::uint64_t{1} << stream_.ground_size;
  // One bit per subset of the ground set; code 0 is the empty family.
  if (stream_.mode == FamilyStream::Mode::Exhaustive)
    code_end_ = std::uint64_t{1} << subset_count_;
  rng_.seed(stream_.seed);
}

std::optional<SetFamily> FamilyEnumerator::admit(SetFamily raw) {
  ++raw_examined_;
  NormalizeResult norm = normalize(raw);
  if (norm.family.ground_size() == 0) {
    ++degenerate_dropped_;
    return std::nullopt;
  }
  if (stream_.mode == FamilyStream::Mode::Exhaustive) {
    auto key = std::make_pair(norm.family.ground(), norm.family.masks());
    if (!seen_.insert(std::move(key)).second) {
      ++collapsed_duplicates_;
      return std::nullopt;
    }
  }
  if (stream_.min_size > 0 && norm.family.size() < stream_.min_size) {
    ++filtered_out_;
    return std::nullopt;
  }
  if (stream_.transitive_only && !is_transitive(norm.family)) {
    ++filtered_out_;
    return std::nullopt;
  }
  return std::move(norm.family);
}

std::optional<SetFamily> FamilyEnumerator::next_exhaustive() {
  const std::vector<std::string> ground = auto_ground(stream_.ground_size);
  while (next_code_ < code_end_) {
    std::uint64_t code = next_code_++;
    std::vector<std::uint64_t> masks;
    for (std::uint64_t j = 0; j < subset_count_; ++j)
      if (code & (std::uint64_t{1} << j)) masks.push_back(j);
    if (auto fam = admit(SetFamily::from_masks(ground, std::move(masks)))) return fam;
  }
  return std::nullopt;
}

std::optional<SetFamily> FamilyEnumerator::next_sampled() {
  if (yielded_ >= stream_.count) return std::nullopt;
  const std::vector<std::string> ground = auto_ground(stream_.ground_size);
  // Generous draw budget so a filter that rejects everything still terminates.
  std::uint64_t budget = stream_.count * 1000 + 1000;
  while (raw_examined_ < budget) {
    std::vector<std::uint64_t> masks;
    for (std::uint64_t j = 0; j < subset_count_; ++j)
      if (rng_() & 1) masks.push_back(j);
    if (masks.empty()) {
      ++raw_examined_;
      continue;
    }
    if (auto fam = admit(SetFamily::from_masks(ground, std::move(masks)))) {
      ++yielded_;
      return fam;
    }
  }
  throw std::runtime_error("sampling budget exhausted before reaching the requested count");
}

std::optional<SetFamily> FamilyEnumerator::next() {
  return stream_.mode == FamilyStream::Mode::Exhaustive ? next_exhaustive() : next_sampled();
}

std::vector<SetFamily> collect_families(const FamilyStream& stream) {
  FamilyEnumerator en(stream);
  std::vector<SetFamily> out;
  while (auto fam = en.next()) out.push_back(std::move(*fam));
  return out;
}

}  // namespace togglelab
