#include "togglelab/set_family.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace togglelab {

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ',';
    os << labels[i];
  }
  os << '}';
  return os.str();
}

}  // namespace

void SetFamily::reindex() {
  index_.clear();
  index_.reserve(masks_.size());
  for (std::uint32_t i = 0; i < masks_.size(); ++i) index_.emplace(masks_[i], i);
}

std::uint64_t SetFamily::universe() const {
  if (ground_.size() >= 64) return ~std::uint64_t{0};
  return (std::uint64_t{1} << ground_.size()) - 1;
}

SetFamily SetFamily::from_masks(std::vector<std::string> ground,
                                std::vector<std::uint64_t> masks) {
  if (ground.size() > kMaxGroundSize)
    throw std::invalid_argument("ground set larger than 64 elements");
  if (masks.empty()) throw std::invalid_argument("family must contain at least one set");
  if (masks.size() > kMaxFamilySize)
    throw std::invalid_argument("family larger than 2^20 sets");
  {
    std::unordered_set<std::string> seen;
    for (const auto& label : ground)
      if (!seen.insert(label).second)
        throw std::invalid_argument("duplicate ground label: " + label);
  }
  SetFamily f;
  f.ground_ = std::move(ground);
  const std::uint64_t uni = f.universe();
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t m : masks) {
    if ((m & ~uni) != 0) throw std::invalid_argument("member mask outside ground set");
    if (!seen.insert(m).second) {
      f.masks_ = {m};
      throw std::invalid_argument("duplicate member set: " + f.member_string(0));
    }
  }
  f.masks_ = std::move(masks);
  f.reindex();
  return f;
}

SetFamily SetFamily::create(std::vector<std::string> ground,
                            const std::vector<std::vector<std::string>>& sets) {
  if (ground.size() > kMaxGroundSize)
    throw std::invalid_argument("ground set larger than 64 elements");
  std::unordered_map<std::string, std::uint32_t> pos;
  for (std::uint32_t i = 0; i < ground.size(); ++i) pos.emplace(ground[i], i);
  if (pos.size() != ground.size())
    throw std::invalid_argument("duplicate ground label");
  std::vector<std::uint64_t> masks;
  masks.reserve(sets.size());
  for (const auto& member : sets) {
    std::uint64_t m = 0;
    for (const auto& label : member) {
      auto it = pos.find(label);
      if (it == pos.end())
        throw std::invalid_argument("unknown element '" + label + "' in member set " +
                                    join_labels(member));
      std::uint64_t bit = std::uint64_t{1} << it->second;
      if (m & bit)
        throw std::invalid_argument("repeated element '" + label + "' in member set " +
                                    join_labels(member));
      m |= bit;
    }
    masks.push_back(m);
  }
  return from_masks(std::move(ground), std::move(masks));
}

std::vector<std::string> SetFamily::member_labels(std::uint32_t i) const {
  std::vector<std::string> out;
  std::uint64_t m = masks_[i];
  while (m) {
    int b = std::countr_zero(m);
    out.push_back(ground_[static_cast<std::size_t>(b)]);
    m &= m - 1;
  }
  return out;
}

std::string SetFamily::member_string(std::uint32_t i) const {
  return join_labels(member_labels(i));
}

SetFamily SetFamily::with_ground_labels(std::vector<std::string> labels) const {
  if (labels.size() != ground_.size())
    throw std::invalid_argument("relabeling must preserve ground size");
  return from_masks(std::move(labels), masks_);
}

nlohmann::json SetFamily::to_json() const {
  nlohmann::json doc;
  doc["ground"] = ground_;
  nlohmann::json sets = nlohmann::json::array();
  for (std::uint32_t i = 0; i < masks_.size(); ++i) sets.push_back(member_labels(i));
  doc["sets"] = std::move(sets);
  return doc;
}

SetFamily SetFamily::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("ground") || !doc.contains("sets"))
    throw std::invalid_argument("family document needs 'ground' and 'sets' fields");
  std::vector<std::string> ground = doc.at("ground").get<std::vector<std::string>>();
  auto sets = doc.at("sets").get<std::vector<std::vector<std::string>>>();
  return create(std::move(ground), sets);
}

NormalizeResult normalize(const SetFamily& f) {
  const std::uint64_t uni = f.universe();
  std::uint64_t in_all = uni;
  std::uint64_t in_any = 0;
  for (std::uint64_t m : f.masks()) {
    in_all &= m;
    in_any |= m;
  }
  const std::uint64_t drop = (in_all | (uni & ~in_any));

  NormalizeResult out;
  if (drop == 0) {
    out.family = f;
    return out;
  }

  std::vector<std::string> ground;
  std::vector<int> new_bit(f.ground_size(), -1);
  for (std::size_t b = 0; b < f.ground_size(); ++b) {
    if (drop & (std::uint64_t{1} << b)) {
      out.removed.push_back(f.ground()[b]);
    } else {
      new_bit[b] = static_cast<int>(ground.size());
      ground.push_back(f.ground()[b]);
    }
  }
  std::vector<std::uint64_t> masks;
  masks.reserve(f.size());
  for (std::uint64_t m : f.masks()) {
    std::uint64_t compressed = 0;
    std::uint64_t rest = m & ~drop;
    while (rest) {
      int b = std::countr_zero(rest);
      compressed |= std::uint64_t{1} << new_bit[static_cast<std::size_t>(b)];
      rest &= rest - 1;
    }
    masks.push_back(compressed);
  }
  out.family = SetFamily::from_masks(std::move(ground), std::move(masks));
  return out;
}

SetFamily cartesian_product(const SetFamily& f1, const SetFamily& f2) {
  for (const auto& label : f2.ground())
    if (std::find(f1.ground().begin(), f1.ground().end(), label) != f1.ground().end())
      throw std::invalid_argument("grounds overlap at element '" + label + "'");
  if (f1.ground_size() + f2.ground_size() > kMaxGroundSize)
    throw std::invalid_argument("product ground exceeds 64 elements");
  if (f1.size() * f2.size() > kMaxFamilySize)
    throw std::invalid_argument("product family exceeds 2^20 sets");

  std::vector<std::string> ground = f1.ground();
  ground.insert(ground.end(), f2.ground().begin(), f2.ground().end());
  const std::size_t shift = f1.ground_size();
  std::vector<std::uint64_t> masks;
  masks.reserve(f1.size() * f2.size());
  for (std::uint64_t m1 : f1.masks())
    for (std::uint64_t m2 : f2.masks()) masks.push_back(m1 | (m2 << shift));
  return SetFamily::from_masks(std::move(ground), std::move(masks));
}

}  // namespace togglelab
