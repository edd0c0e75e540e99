#include "togglelab/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace togglelab {

Perm Perm::from_images(std::vector<std::uint32_t> images) {
  const std::size_t n = images.size();
  std::vector<bool> seen(n, false);
  for (std::uint32_t v : images) {
    if (v >= n || seen[v])
      throw std::invalid_argument("image table is not a bijection on {0..n-1}");
    seen[v] = true;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(std::size_t n,
                       const std::vector<std::vector<std::uint32_t>>& cycles) {
  Perm p(n);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cyc = *it;
    if (cyc.size() < 2) continue;
    Perm c(n);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::uint32_t from = cyc[i];
      std::uint32_t to = cyc[(i + 1) % cyc.size()];
      if (from >= n || to >= n) throw std::invalid_argument("cycle point out of range");
      c.images_[from] = to;
    }
    p = p * c;
  }
  return Perm::from_images(p.images_);
}

std::uint32_t Perm::support_size() const {
  std::uint32_t c = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) ++c;
  return c;
}

std::uint32_t Perm::smallest_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<std::uint32_t>(i);
  return static_cast<std::uint32_t>(images_.size());
}

std::string Perm::cycle_string() const {
  CycleStructure cs = cycle_decomposition(*this);
  if (cs.cycles.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cs.cycles) {
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ' ';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

CycleStructure cycle_decomposition(const Perm& p) {
  const std::size_t n = p.degree();
  CycleStructure out;
  std::vector<bool> seen(n, false);
  for (std::uint32_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    if (!p.moves(start)) {
      seen[start] = true;
      ++out.fixed_points;
      continue;
    }
    // Scanning points in increasing order makes each cycle start at its least
    // point and sorts cycles by least point.
    std::vector<std::uint32_t> cyc;
    std::uint32_t x = start;
    do {
      seen[x] = true;
      cyc.push_back(x);
      x = p(x);
    } while (x != start);
    out.cycles.push_back(std::move(cyc));
  }
  return out;
}

Parity parity(const Perm& p) {
  CycleStructure cs = cycle_decomposition(p);
  std::size_t even_len = 0;
  for (const auto& c : cs.cycles)
    if (c.size() % 2 == 0) ++even_len;
  return (even_len % 2 == 1) ? Parity::Odd : Parity::Even;
}

std::vector<std::vector<std::uint32_t>> orbits(const std::vector<Perm>& gens,
                                               std::size_t n) {
  for (const Perm& g : gens)
    if (g.degree() != n) throw std::invalid_argument("generator degree mismatch");
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> orbit{start};
    seen[start] = true;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
      std::uint32_t pt = orbit[qi];
      for (const Perm& g : gens) {
        std::uint32_t im = g(pt);
        if (!seen[im]) {
          seen[im] = true;
          orbit.push_back(im);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace togglelab
