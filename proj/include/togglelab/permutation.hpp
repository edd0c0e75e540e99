#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace togglelab {

// A permutation of the points {0..n-1}, stored as its image table.
// Composition convention, fixed across the whole project: (p * q)(x) = p(q(x)),
// i.e. the right factor is applied first.
class Perm {
 public:
  Perm() = default;

  // Identity on n points.
  explicit Perm(std::size_t n) : images_(n) {
    for (std::size_t i = 0; i < n; ++i) images_[i] = static_cast<std::uint32_t>(i);
  }

  // Validates that `images` is a bijection on {0..n-1}.
  static Perm from_images(std::vector<std::uint32_t> images);

  // Convenience: product of disjoint-or-not cycles over n points, applied
  // right cycle first (irrelevant when disjoint).
  static Perm from_cycles(std::size_t n,
                          const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }

  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  bool moves(std::uint32_t point) const { return images_[point] != point; }

  // Number of points with p(i) != i.
  std::uint32_t support_size() const;

  // degree() when the permutation is the identity.
  std::uint32_t smallest_moved_point() const;

  Perm inverse() const {
    Perm r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[images_[i]] = static_cast<std::uint32_t>(i);
    return r;
  }

  // Apply q first, then p.
  friend Perm operator*(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree())
      throw std::invalid_argument("permutation degree mismatch in composition");
    Perm r;
    r.images_.resize(p.degree());
    for (std::size_t i = 0; i < p.degree(); ++i) r.images_[i] = p.images_[q.images_[i]];
    return r;
  }

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

  const std::vector<std::uint32_t>& images() const { return images_; }

  // Cycle notation, e.g. "(0 1)(2 4 3)"; "()" for the identity.
  std::string cycle_string() const;

 private:
  std::vector<std::uint32_t> images_;
};

struct CycleStructure {
  // Nontrivial cycles only (length >= 2). Canonical form: each cycle starts
  // at its least point, cycles sorted by least point.
  std::vector<std::vector<std::uint32_t>> cycles;
  std::uint32_t fixed_points = 0;

  std::vector<std::uint32_t> cycle_lengths() const {
    std::vector<std::uint32_t> out;
    out.reserve(cycles.size());
    for (const auto& c : cycles) out.push_back(static_cast<std::uint32_t>(c.size()));
    return out;
  }

  bool is_single_cycle() const { return cycles.size() == 1; }
};

CycleStructure cycle_decomposition(const Perm& p);

enum class Parity { Even, Odd };

// Odd iff the number of even-length cycles is odd.
Parity parity(const Perm& p);

inline Parity operator^(Parity a, Parity b) {
  return a == b ? Parity::Even : Parity::Odd;
}

// Finest partition of {0..n-1} closed under all generators. Orbits are sorted
// internally and listed by least element.
std::vector<std::vector<std::uint32_t>> orbits(const std::vector<Perm>& gens,
                                               std::size_t n);

inline bool transitive_on(const std::vector<Perm>& gens, std::size_t n) {
  return n <= 1 || orbits(gens, n).size() == 1;
}

}  // namespace togglelab
