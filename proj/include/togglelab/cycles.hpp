#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "togglelab/group.hpp"

namespace togglelab {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000;

enum class Ternary { Yes, No, Undecided };

// The set of cycle lengths k for which the group contains an element that is
// a single k-cycle (all other points fixed), with one witness per length.
// Exact; produced by a full element scan.
struct CycleSpectrum {
  std::map<std::uint32_t, Perm> witness_by_length;

  bool contains(std::uint32_t k) const { return witness_by_length.count(k) != 0; }
};

// nullopt when the group order exceeds `limit`.
std::optional<CycleSpectrum> enumerate_cycle_spectrum(const Group& g,
                                                      std::uint64_t limit);

struct CycleQuery {
  enum class Basis {
    SymmetricOrder,    // order = n!, every cycle type present
    AlternatingOrder,  // order = n!/2, k-cycles present exactly for odd k
    ParityExclusion,   // k even but every generator is even
    Enumeration,       // exact element scan
    Limit,             // order above the enumeration limit: Undecided
  };

  Ternary verdict = Ternary::Undecided;
  Basis basis = Basis::Limit;
  std::optional<Perm> witness;  // set for Yes decided by enumeration
};

// Does the group contain a k-cycle? Decision ladder, in order: symmetric
// order; alternating order (the only index-2 subgroup of S_n); parity
// exclusion for even k; exact enumeration when order <= limit; else
// Undecided. `cached` may hold a spectrum previously enumerated for this
// same group to avoid rescanning. Throws unless 2 <= k <= degree.
CycleQuery cycle_containment(const Group& g, std::uint32_t k,
                             std::uint64_t limit = kDefaultEnumerationLimit,
                             const CycleSpectrum* cached = nullptr);

}  // namespace togglelab
