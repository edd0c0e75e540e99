#include "togglelab/group.hpp"

#include <algorithm>

namespace togglelab {

BigInt factorial(std::uint32_t n) {
  BigInt r = 1;
  for (std::uint32_t i = 2; i <= n; ++i) r *= i;
  return r;
}

Group Group::trivial(std::size_t degree) {
  Group g;
  g.degree_ = degree;
  return g;
}

Group Group::from_generators(std::vector<Perm> gens, std::size_t degree) {
  Group g;
  g.degree_ = degree;
  for (auto& p : gens) {
    if (p.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    if (p.is_identity()) continue;
    if (std::find(g.generators_.begin(), g.generators_.end(), p) == g.generators_.end())
      g.generators_.push_back(std::move(p));
  }
  g.build();
  return g;
}

void Group::rebuild_orbit(StabilizerLevel& lv) const {
  lv.orbit.clear();
  lv.transversal.clear();
  lv.slot_of.assign(degree_, -1);
  lv.orbit.push_back(lv.base_point);
  lv.slot_of[lv.base_point] = 0;
  lv.transversal.push_back(Perm(degree_));
  for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
    std::uint32_t pt = lv.orbit[qi];
    for (const Perm& s : lv.gens) {
      std::uint32_t im = s(pt);
      if (lv.slot_of[im] < 0) {
        lv.slot_of[im] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(im);
        lv.transversal.push_back(s * lv.transversal[qi]);
      }
    }
  }
}

std::pair<Perm, std::size_t> Group::sift(Perm p, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const StabilizerLevel& lv = levels_[l];
    std::uint32_t im = p(lv.base_point);
    if (im == lv.base_point) continue;
    if (lv.slot_of[im] < 0) return {std::move(p), l};
    p = lv.transversal[lv.slot_of[im]].inverse() * p;
    if (p.is_identity()) return {std::move(p), l};
  }
  return {std::move(p), levels_.size()};
}

void Group::build() {
  levels_.clear();
  order_ = 1;

  // Initial chain: level l holds every generator fixing the first l base
  // points; each base point is the smallest point moved by the remaining set.
  std::vector<Perm> current = generators_;
  while (!current.empty()) {
    std::uint32_t beta = static_cast<std::uint32_t>(degree_);
    for (const Perm& g : current) beta = std::min(beta, g.smallest_moved_point());
    StabilizerLevel lv;
    lv.base_point = beta;
    lv.gens = current;
    levels_.push_back(std::move(lv));
    std::vector<Perm> next;
    for (Perm& g : current)
      if (!g.moves(beta)) next.push_back(std::move(g));
    current = std::move(next);
  }

  // Verify bottom-up: at each level every Schreier generator must sift to the
  // identity through the deeper (already verified) levels. A non-trivial
  // residual becomes a new strong generator and verification restarts at the
  // deepest level it touched.
  std::ptrdiff_t lvl = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (lvl >= 0) {
    rebuild_orbit(levels_[lvl]);
    bool restart = false;
    const std::size_t orbit_size = levels_[lvl].orbit.size();
    const std::size_t gen_count = levels_[lvl].gens.size();
    for (std::size_t oi = 0; oi < orbit_size && !restart; ++oi) {
      for (std::size_t gi = 0; gi < gen_count; ++gi) {
        const StabilizerLevel& lv = levels_[lvl];
        const Perm& s = lv.gens[gi];
        std::uint32_t im = s(lv.orbit[oi]);
        Perm schreier = lv.transversal[lv.slot_of[im]].inverse() * (s * lv.transversal[oi]);
        if (schreier.is_identity()) continue;
        auto [residual, stop] = sift(std::move(schreier), lvl + 1);
        if (residual.is_identity()) continue;
        if (stop == levels_.size()) {
          StabilizerLevel fresh;
          fresh.base_point = residual.smallest_moved_point();
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = lvl + 1; l <= stop; ++l) levels_[l].gens.push_back(residual);
        lvl = static_cast<std::ptrdiff_t>(stop);
        restart = true;
        break;
      }
    }
    if (!restart) --lvl;
  }

  for (const StabilizerLevel& lv : levels_) order_ *= static_cast<std::uint64_t>(lv.orbit.size());
}

std::vector<std::uint32_t> Group::base() const {
  std::vector<std::uint32_t> b;
  b.reserve(levels_.size());
  for (const auto& lv : levels_) b.push_back(lv.base_point);
  return b;
}

std::vector<Perm> Group::strong_generators() const {
  std::vector<Perm> out;
  for (const auto& lv : levels_)
    for (const Perm& g : lv.gens)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

bool Group::contains(const Perm& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("degree mismatch in membership test");
  auto [residual, stop] = sift(p, 0);
  (void)stop;
  return residual.is_identity();
}

bool Group::is_symmetric() const { return order_ == factorial(static_cast<std::uint32_t>(degree_)); }

bool Group::has_alternating_order() const {
  return order_ * 2 == factorial(static_cast<std::uint32_t>(degree_));
}

}  // namespace togglelab
