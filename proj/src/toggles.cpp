#include "togglelab/toggles.hpp"

namespace togglelab {

ToggleSet build_toggles(const SetFamily& f) {
  ToggleSet ts;
  const std::size_t n = f.size();
  ts.toggles.reserve(f.ground_size());
  for (std::uint32_t e = 0; e < f.ground_size(); ++e) {
    const std::uint64_t bit = std::uint64_t{1} << e;
    std::vector<std::uint32_t> images(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      auto j = f.index_of(f.mask(i) ^ bit);
      images[i] = j ? *j : i;
    }
    Perm t = Perm::from_images(std::move(images));
    if (t.is_identity()) ts.identity_toggles.push_back(e);
    ts.toggles.push_back(std::move(t));
  }
  return ts;
}

Group toggle_group(const SetFamily& f) {
  return Group::from_generators(build_toggles(f).group_generators(), f.size());
}

bool is_transitive(const SetFamily& f) {
  return transitive_on(build_toggles(f).group_generators(), f.size());
}

}  // namespace togglelab
