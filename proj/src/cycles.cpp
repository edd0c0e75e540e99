#include "togglelab/cycles.hpp"

#include <stdexcept>

namespace togglelab {

namespace {

// Length of the unique nontrivial cycle of p, or 0 if p is the identity or
// has more than one nontrivial cycle.
std::uint32_t single_cycle_length(const Perm& p) {
  std::uint32_t start = p.smallest_moved_point();
  if (start == p.degree()) return 0;
  std::uint32_t len = 0;
  std::uint32_t x = start;
  do {
    ++len;
    x = p(x);
  } while (x != start);
  return len == p.support_size() ? len : 0;
}

}  // namespace

std::optional<CycleSpectrum> enumerate_cycle_spectrum(const Group& g,
                                                      std::uint64_t limit) {
  if (g.order() > limit) return std::nullopt;
  CycleSpectrum spectrum;
  g.for_each_element([&](const Perm& p) {
    std::uint32_t len = single_cycle_length(p);
    if (len >= 2) spectrum.witness_by_length.emplace(len, p);
    return true;
  });
  return spectrum;
}

CycleQuery cycle_containment(const Group& g, std::uint32_t k, std::uint64_t limit,
                             const CycleSpectrum* cached) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.degree());
  if (k < 2 || k > n)
    throw std::invalid_argument("cycle length must lie in [2, degree]");

  CycleQuery q;
  if (g.is_symmetric()) {
    q.verdict = Ternary::Yes;
    q.basis = CycleQuery::Basis::SymmetricOrder;
    return q;
  }
  if (g.has_alternating_order()) {
    // A k-cycle is an even permutation exactly when k is odd, and the only
    // subgroup of S_n of order n!/2 is A_n.
    q.verdict = (k % 2 == 1) ? Ternary::Yes : Ternary::No;
    q.basis = CycleQuery::Basis::AlternatingOrder;
    return q;
  }
  if (k % 2 == 0) {
    bool all_even = true;
    for (const Perm& gen : g.generators())
      if (parity(gen) == Parity::Odd) {
        all_even = false;
        break;
      }
    if (all_even) {
      q.verdict = Ternary::No;
      q.basis = CycleQuery::Basis::ParityExclusion;
      return q;
    }
  }
  std::optional<CycleSpectrum> scanned;
  const CycleSpectrum* spectrum = cached;
  if (!spectrum) {
    scanned = enumerate_cycle_spectrum(g, limit);
    if (scanned) spectrum = &*scanned;
  }
  if (spectrum) {
    q.basis = CycleQuery::Basis::Enumeration;
    auto it = spectrum->witness_by_length.find(k);
    if (it == spectrum->witness_by_length.end()) {
      q.verdict = Ternary::No;
    } else {
      q.verdict = Ternary::Yes;
      q.witness = it->second;
    }
    return q;
  }
  q.verdict = Ternary::Undecided;
  q.basis = CycleQuery::Basis::Limit;
  return q;
}

}  // namespace togglelab
