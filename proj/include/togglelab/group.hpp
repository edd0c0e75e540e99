#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "togglelab/bigint.hpp"
#include "togglelab/permutation.hpp"

namespace togglelab {

// One level of a stabilizer chain: a base point, the strong generators that
// fix all earlier base points, and the fundamental orbit of the base point
// with a transversal (transversal[s] maps base_point to orbit[s]).
struct StabilizerLevel {
  std::uint32_t base_point = 0;
  std::vector<Perm> gens;
  std::vector<std::uint32_t> orbit;
  std::vector<std::int32_t> slot_of;  // point -> position in orbit, -1 outside
  std::vector<Perm> transversal;
};

// A permutation group given by generators, with a base and strong generating
// set computed by the deterministic Schreier-Sims algorithm. Base points are
// chosen smallest-moved-point first, so identical generator lists always
// produce identical chains and orders.
class Group {
 public:
  Group() = default;  // trivial group on 0 points

  static Group from_generators(std::vector<Perm> gens, std::size_t degree);
  static Group trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const BigInt& order() const { return order_; }

  // Deduplicated non-identity input generators, in input order.
  const std::vector<Perm>& generators() const { return generators_; }

  std::vector<std::uint32_t> base() const;
  std::vector<Perm> strong_generators() const;

  // Membership via sifting through the chain. Throws on degree mismatch.
  bool contains(const Perm& p) const;

  bool is_symmetric() const;           // order == degree!
  bool has_alternating_order() const;  // 2 * order == degree!

  // Visits every group element exactly once, in a fixed order determined by
  // the chain. The visitor returns false to stop early; the function returns
  // false iff it was stopped.
  template <typename Visitor>
  bool for_each_element(Visitor&& visit) const {
    return walk(0, Perm(degree_), visit);
  }

  const std::vector<StabilizerLevel>& levels() const { return levels_; }

 private:
  template <typename Visitor>
  bool walk(std::size_t level, const Perm& acc, Visitor&& visit) const {
    if (level == levels_.size()) return visit(acc);
    for (const Perm& u : levels_[level].transversal)
      if (!walk(level + 1, acc * u, visit)) return false;
    return true;
  }

  void rebuild_orbit(StabilizerLevel& lv) const;
  // Strips p through levels [from..); returns the residual and the level at
  // which sifting stopped (levels_.size() if fully sifted).
  std::pair<Perm, std::size_t> sift(Perm p, std::size_t from) const;
  void build();

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<StabilizerLevel> levels_;
  BigInt order_ = 1;
};

// Spec alias: the stabilizer-chain description of <gens>.
inline Group schreier_sims(std::vector<Perm> gens, std::size_t degree) {
  return Group::from_generators(std::move(gens), degree);
}

inline bool contains_element(const Group& g, const Perm& p) { return g.contains(p); }

}  // namespace togglelab
