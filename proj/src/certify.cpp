#include "togglelab/certify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace togglelab {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  std::chrono::microseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  }
};

std::string order_string(const BigInt& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

nlohmann::json perm_json(const Perm& p) {
  return nlohmann::json{{"images", p.images()}, {"cycles", p.cycle_string()}};
}

nlohmann::json query_json(const CycleQuery& q, std::uint32_t k) {
  const char* basis = nullptr;
  switch (q.basis) {
    case CycleQuery::Basis::SymmetricOrder: basis = "symmetric-order"; break;
    case CycleQuery::Basis::AlternatingOrder: basis = "alternating-order"; break;
    case CycleQuery::Basis::ParityExclusion: basis = "parity-exclusion"; break;
    case CycleQuery::Basis::Enumeration: basis = "enumeration"; break;
    case CycleQuery::Basis::Limit: basis = "above-enumeration-limit"; break;
  }
  nlohmann::json out{{"cycle_length", k}, {"basis", basis}};
  if (q.witness) out["witness"] = perm_json(*q.witness);
  return out;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (p * p > n) return true;  // n is prime
  while (n % p == 0) n /= p;
  return n == 1;
}

Ternary ternary_and(Ternary a, Ternary b) {
  if (a == Ternary::No || b == Ternary::No) return Ternary::No;
  if (a == Ternary::Undecided || b == Ternary::Undecided) return Ternary::Undecided;
  return Ternary::Yes;
}

void require_transitive(const FamilyAnalysis& a, const char* who) {
  if (!a.transitive)
    throw std::invalid_argument(std::string(who) + " requires a transitive family");
}

CertResult make_result(const std::string& name, CertStatus status, nlohmann::json witness,
                       const Timer& t) {
  CertResult r;
  r.name = name;
  r.status = status;
  r.witness = std::move(witness);
  r.timing = t.elapsed();
  return r;
}

nlohmann::json fail_payload(const std::string& name, const SetFamily& f) {
  return nlohmann::json{{"certifier", name}, {"family", f.to_json()}};
}

nlohmann::json undecided_payload(std::uint32_t k, const FamilyAnalysis& a,
                                 const CertConfig& cfg) {
  return nlohmann::json{{"reason", "cycle containment undecided above enumeration limit"},
                        {"cycle_length", k},
                        {"order", order_string(a.group.order())},
                        {"enumeration_limit", cfg.enumeration_limit}};
}

}  // namespace

const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Pass: return "pass";
    case CertStatus::Fail: return "fail";
    case CertStatus::VacuouslyTrue: return "vacuously-true";
    case CertStatus::Undecided: return "undecided";
  }
  return "?";
}

void StatusTally::add(CertStatus s) {
  switch (s) {
    case CertStatus::Pass: ++pass; break;
    case CertStatus::Fail: ++fail; break;
    case CertStatus::VacuouslyTrue: ++vacuous; break;
    case CertStatus::Undecided: ++undecided; break;
  }
}

const std::vector<std::string>& theorem_certifiers() {
  static const std::vector<std::string> names{
      kCertTransposition,          kCertThreeCycle,
      kCertShortCyclePrimitive,    kCertJordanJones,
      kCertImprimitiveDecomposition, kCertPrimePowerPrimitive};
  return names;
}

std::vector<std::string> resolve_suite(const std::string& selection) {
  if (selection.empty() || selection == "all") {
    std::vector<std::string> all = theorem_certifiers();
    all.push_back(kLemmaSuite);
    return all;
  }
  std::vector<std::string> out;
  std::stringstream ss(selection);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto& known = theorem_certifiers();
    if (item != kLemmaSuite &&
        std::find(known.begin(), known.end(), item) == known.end())
      throw std::invalid_argument("unknown certifier: " + item);
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("empty certifier selection");
  return out;
}

FamilyAnalysis analyze_family(const SetFamily& f, const CertConfig& cfg) {
  (void)cfg;
  FamilyAnalysis a;
  a.family = f;
  a.toggles = build_toggles(f);
  std::vector<Perm> gens = a.toggles.group_generators();
  a.group = Group::from_generators(gens, f.size());
  a.transitive = transitive_on(gens, f.size());
  if (a.transitive && f.size() >= 2)
    a.nontrivial_systems = nontrivial_block_systems(gens, f.size());
  return a;
}

CycleQuery FamilyAnalysis::cycle_query(std::uint32_t k, const CertConfig& cfg) {
  // The order-based branches never need an element scan; do the scan only
  // when containment would fall through to enumeration, and keep it.
  if (!spectrum_ready && !group.is_symmetric() && !group.has_alternating_order()) {
    spectrum = enumerate_cycle_spectrum(group, cfg.enumeration_limit);
    spectrum_ready = true;
  }
  return cycle_containment(group, k, cfg.enumeration_limit,
                           spectrum ? &*spectrum : nullptr);
}

CertResult certify_transposition(FamilyAnalysis& a, const CertConfig& cfg) {
  Timer t;
  require_transitive(a, kCertTransposition);
  const std::uint32_t n = static_cast<std::uint32_t>(a.family.size());
  if (n < 2)
    return make_result(kCertTransposition, CertStatus::VacuouslyTrue,
                       {{"note", "degree below 2"}}, t);
  CycleQuery q = a.cycle_query(2, cfg);
  if (q.verdict == Ternary::Undecided)
    return make_result(kCertTransposition, CertStatus::Undecided,
                       undecided_payload(2, a, cfg), t);
  if (q.verdict == Ternary::No)
    return make_result(kCertTransposition, CertStatus::VacuouslyTrue,
                       {{"note", "no transposition present"}}, t);
  if (a.group.order() == factorial(n)) return make_result(kCertTransposition, CertStatus::Pass, {}, t);
  nlohmann::json w = fail_payload(kCertTransposition, a.family);
  w["order"] = order_string(a.group.order());
  w["expected_order"] = order_string(factorial(n));
  w["containment"] = query_json(q, 2);
  return make_result(kCertTransposition, CertStatus::Fail, std::move(w), t);
}

CertResult certify_three_cycle(FamilyAnalysis& a, const CertConfig& cfg) {
  Timer t;
  require_transitive(a, kCertThreeCycle);
  const std::uint32_t n = static_cast<std::uint32_t>(a.family.size());
  if (n < 3)
    return make_result(kCertThreeCycle, CertStatus::VacuouslyTrue,
                       {{"note", "degree below 3"}}, t);
  CycleQuery q = a.cycle_query(3, cfg);
  if (q.verdict == Ternary::Undecided)
    return make_result(kCertThreeCycle, CertStatus::Undecided, undecided_payload(3, a, cfg), t);
  if (q.verdict == Ternary::No)
    return make_result(kCertThreeCycle, CertStatus::VacuouslyTrue,
                       {{"note", "no 3-cycle present"}}, t);
  const BigInt full = factorial(n);
  if (a.group.order() == full || a.group.order() * 2 == full)
    return make_result(kCertThreeCycle, CertStatus::Pass, {}, t);
  nlohmann::json w = fail_payload(kCertThreeCycle, a.family);
  w["order"] = order_string(a.group.order());
  w["containment"] = query_json(q, 3);
  return make_result(kCertThreeCycle, CertStatus::Fail, std::move(w), t);
}

namespace {

// Scans k in [lo, hi] for a contained k-cycle. Returns the first Yes query,
// or Undecided if nothing was affirmed but some query was undecided.
struct RangeScan {
  Ternary verdict = Ternary::No;
  std::uint32_t length = 0;
  CycleQuery query;
};

RangeScan scan_cycle_range(FamilyAnalysis& a, std::uint32_t lo, std::uint32_t hi,
                           const CertConfig& cfg) {
  RangeScan scan;
  for (std::uint32_t k = lo; k <= hi && k >= 2; ++k) {
    CycleQuery q = a.cycle_query(k, cfg);
    if (q.verdict == Ternary::Yes) {
      scan.verdict = Ternary::Yes;
      scan.length = k;
      scan.query = q;
      return scan;
    }
    if (q.verdict == Ternary::Undecided) {
      scan.verdict = Ternary::Undecided;
      scan.length = k;
      scan.query = q;
    }
  }
  return scan;
}

}  // namespace

CertResult certify_short_cycle_primitive(FamilyAnalysis& a, const CertConfig& cfg) {
  Timer t;
  require_transitive(a, kCertShortCyclePrimitive);
  const std::uint32_t n = static_cast<std::uint32_t>(a.family.size());
  if (n < 3)
    return make_result(kCertShortCyclePrimitive, CertStatus::VacuouslyTrue,
                       {{"note", "no short cycle possible below degree 3"}}, t);
  RangeScan scan = scan_cycle_range(a, 2, n - 1, cfg);
  if (scan.verdict == Ternary::Undecided)
    return make_result(kCertShortCyclePrimitive, CertStatus::Undecided,
                       undecided_payload(scan.length, a, cfg), t);
  if (scan.verdict == Ternary::No)
    return make_result(kCertShortCyclePrimitive, CertStatus::VacuouslyTrue,
                       {{"note", "no short cycle present"}}, t);
  if (a.primitive())
    return make_result(kCertShortCyclePrimitive, CertStatus::Pass,
                       {{"short_cycle", query_json(scan.query, scan.length)}}, t);
  nlohmann::json w = fail_payload(kCertShortCyclePrimitive, a.family);
  w["short_cycle"] = query_json(scan.query, scan.length);
  w["block_system"] = a.nontrivial_systems.front().block_of;
  return make_result(kCertShortCyclePrimitive, CertStatus::Fail, std::move(w), t);
}

CertResult certify_jordan_jones(FamilyAnalysis& a, const CertConfig& cfg) {
  Timer t;
  require_transitive(a, kCertJordanJones);
  const std::uint32_t n = static_cast<std::uint32_t>(a.family.size());
  if (n < 5)
    return make_result(kCertJordanJones, CertStatus::VacuouslyTrue,
                       {{"note", "no cycle length in [2, degree-3] exists"}}, t);
  RangeScan scan = scan_cycle_range(a, 2, n - 3, cfg);
  if (scan.verdict == Ternary::Undecided)
    return make_result(kCertJordanJones, CertStatus::Undecided,
                       undecided_payload(scan.length, a, cfg), t);
  if (scan.verdict == Ternary::No)
    return make_result(kCertJordanJones, CertStatus::VacuouslyTrue,
                       {{"note", "no cycle with three or more fixed points"}}, t);
  const BigInt full = factorial(n);
  if (a.group.order() == full || a.group.order() * 2 == full)
    return make_result(kCertJordanJones, CertStatus::Pass,
                       {{"cycle", query_json(scan.query, scan.length)}}, t);
  nlohmann::json w = fail_payload(kCertJordanJones, a.family);
  w["order"] = order_string(a.group.order());
  w["cycle"] = query_json(scan.query, scan.length);
  return make_result(kCertJordanJones, CertStatus::Fail, std::move(w), t);
}

namespace {

void collect_splits(const FactorizationTree& node,
                    std::vector<const FactorizationTree*>& out) {
  if (node.is_leaf()) return;
  out.push_back(&node);
  for (const auto& child : node.children) collect_splits(child, out);
}

}  // namespace

CertResult certify_imprimitive_decomposition(FamilyAnalysis& a, const CertConfig& cfg) {
  Timer t;
  require_transitive(a, kCertImprimitiveDecomposition);
  const std::uint32_t n = static_cast<std::uint32_t>(a.family.size());
  if (n < 2 || a.primitive())
    return make_result(kCertImprimitiveDecomposition, CertStatus::VacuouslyTrue,
                       {{"note", "group is primitive"}}, t);
  CycleQuery q = a.cycle_query(n, cfg);
  if (q.verdict == Ternary::Undecided)
    return make_result(kCertImprimitiveDecomposition, CertStatus::Undecided,
                       undecided_payload(n, a, cfg), t);
  if (q.verdict == Ternary::No)
    return make_result(kCertImprimitiveDecomposition, CertStatus::VacuouslyTrue,
                       {{"note", "imprimitive but no long cycle"}}, t);

  FactorizationTree tree = decompose(a.family);
  auto leaves = tree.leaves();
  auto degrees = tree.leaf_degrees();
  auto fail = [&](const std::string& why, nlohmann::json extra = {}) {
    nlohmann::json w = fail_payload(kCertImprimitiveDecomposition, a.family);
    w["why"] = why;
    w["leaf_degrees"] = degrees;
    if (!extra.is_null()) w["detail"] = std::move(extra);
    return make_result(kCertImprimitiveDecomposition, CertStatus::Fail, std::move(w), t);
  };

  if (leaves.size() < 2) return fail("no factorization found");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 2) return fail("leaf of degree 1");
    for (std::size_t j = i + 1; j < degrees.size(); ++j)
      if (std::gcd(degrees[i], degrees[j]) != 1) return fail("leaf degrees not coprime");
  }
  for (const FactorizationTree* leaf : leaves) {
    CycleQuery lq = cycle_containment(leaf->group, static_cast<std::uint32_t>(leaf->family.size()),
                                      cfg.enumeration_limit);
    if (lq.verdict == Ternary::Undecided)
      return make_result(kCertImprimitiveDecomposition, CertStatus::Undecided,
                         {{"reason", "leaf long-cycle containment undecided"},
                          {"leaf_degree", leaf->family.size()}},
                         t);
    if (lq.verdict == Ternary::No)
      return fail("leaf group lacks a long cycle", {{"leaf_degree", leaf->family.size()}});
  }
  std::vector<const FactorizationTree*> splits;
  collect_splits(tree, splits);
  for (const FactorizationTree* node : splits)
    if (!verify_direct_product(node->family, *node->split))
      return fail("split is not a direct product", {{"degree", node->family.size()}});
  return make_result(kCertImprimitiveDecomposition, CertStatus::Pass,
                     {{"leaf_degrees", degrees}}, t);
}

CertResult certify_prime_power_primitive(FamilyAnalysis& a, const CertConfig& cfg) {
  Timer t;
  require_transitive(a, kCertPrimePowerPrimitive);
  const std::uint32_t n = static_cast<std::uint32_t>(a.family.size());
  if (!is_prime_power(n))
    return make_result(kCertPrimePowerPrimitive, CertStatus::VacuouslyTrue,
                       {{"note", "degree is not a prime power"}}, t);
  CycleQuery q = a.cycle_query(n, cfg);
  if (q.verdict == Ternary::Undecided)
    return make_result(kCertPrimePowerPrimitive, CertStatus::Undecided,
                       undecided_payload(n, a, cfg), t);
  if (q.verdict == Ternary::No)
    return make_result(kCertPrimePowerPrimitive, CertStatus::VacuouslyTrue,
                       {{"note", "no long cycle present"}}, t);
  if (a.primitive())
    return make_result(kCertPrimePowerPrimitive, CertStatus::Pass, {}, t);
  nlohmann::json w = fail_payload(kCertPrimePowerPrimitive, a.family);
  w["block_system"] = a.nontrivial_systems.front().block_of;
  w["containment"] = query_json(q, n);
  return make_result(kCertPrimePowerPrimitive, CertStatus::Fail, std::move(w), t);
}

#define TOGGLELAB_FAMILY_WRAPPER(fn)                                  \
  CertResult fn(const SetFamily& f, const CertConfig& cfg) {          \
    FamilyAnalysis a = analyze_family(f, cfg);                        \
    return fn(a, cfg);                                                \
  }

TOGGLELAB_FAMILY_WRAPPER(certify_transposition)
TOGGLELAB_FAMILY_WRAPPER(certify_three_cycle)
TOGGLELAB_FAMILY_WRAPPER(certify_short_cycle_primitive)
TOGGLELAB_FAMILY_WRAPPER(certify_jordan_jones)
TOGGLELAB_FAMILY_WRAPPER(certify_imprimitive_decomposition)
TOGGLELAB_FAMILY_WRAPPER(certify_prime_power_primitive)
#undef TOGGLELAB_FAMILY_WRAPPER

CertResult run_certifier(const std::string& name, FamilyAnalysis& a, const CertConfig& cfg) {
  if (name == kCertTransposition) return certify_transposition(a, cfg);
  if (name == kCertThreeCycle) return certify_three_cycle(a, cfg);
  if (name == kCertShortCyclePrimitive) return certify_short_cycle_primitive(a, cfg);
  if (name == kCertJordanJones) return certify_jordan_jones(a, cfg);
  if (name == kCertImprimitiveDecomposition) return certify_imprimitive_decomposition(a, cfg);
  if (name == kCertPrimePowerPrimitive) return certify_prime_power_primitive(a, cfg);
  throw std::invalid_argument("unknown certifier: " + name);
}

CertResult certify_product_long_cycle(const SetFamily& f1, const SetFamily& f2,
                                      const CertConfig& cfg) {
  Timer t;
  const char* name = "product-long-cycle";
  if (f1.size() < 2 || f2.size() < 2)
    throw std::invalid_argument("each factor needs at least two member sets");
  const std::uint32_t l = static_cast<std::uint32_t>(f1.size());
  const std::uint32_t m = static_cast<std::uint32_t>(f2.size());

  SetFamily product = cartesian_product(f1, f2);  // throws on overlapping grounds
  FamilyAnalysis pa = analyze_family(product, cfg);
  CycleQuery left = pa.cycle_query(l * m, cfg);

  FamilyAnalysis a1 = analyze_family(f1, cfg);
  FamilyAnalysis a2 = analyze_family(f2, cfg);
  const bool coprime = std::gcd(l, m) == 1;
  CycleQuery q1 = a1.cycle_query(l, cfg);
  CycleQuery q2 = a2.cycle_query(m, cfg);
  Ternary right = coprime ? ternary_and(q1.verdict, q2.verdict) : Ternary::No;

  if (left.verdict == Ternary::Undecided || right == Ternary::Undecided) {
    nlohmann::json w{{"reason", "a containment query exceeded the enumeration limit"},
                     {"factor_sizes", {l, m}}};
    return make_result(name, CertStatus::Undecided, std::move(w), t);
  }
  if ((left.verdict == Ternary::Yes) == (right == Ternary::Yes))
    return make_result(name, CertStatus::Pass,
                       {{"factor_sizes", {l, m}},
                        {"coprime", coprime},
                        {"long_cycle_in_product", left.verdict == Ternary::Yes}},
                       t);
  nlohmann::json w{{"certifier", name},
                   {"family1", f1.to_json()},
                   {"family2", f2.to_json()},
                   {"factor_sizes", {l, m}},
                   {"coprime", coprime},
                   {"left", query_json(left, l * m)},
                   {"factor1", query_json(q1, l)},
                   {"factor2", query_json(q2, m)}};
  return make_result(name, CertStatus::Fail, std::move(w), t);
}

// ---------------------------------------------------------------------------
// Lemma suite
// ---------------------------------------------------------------------------

namespace {

struct WordSampler {
  const std::vector<Perm>* toggles;
  std::vector<std::uint32_t> pool;  // ground indices to draw from
  std::size_t degree;

  // All length-1 and length-2 words, then words_per_length random words for
  // each length in [3, word_bound]; capped to keep clause costs bounded.
  std::vector<std::pair<std::vector<std::uint32_t>, Perm>> words(
      const CertConfig& cfg, std::mt19937_64& rng, std::size_t cap = 512) const {
    std::vector<std::pair<std::vector<std::uint32_t>, Perm>> out;
    if (pool.empty()) return out;
    for (std::uint32_t e : pool) out.push_back({{e}, (*toggles)[e]});
    for (std::uint32_t e1 : pool)
      for (std::uint32_t e2 : pool) {
        if (out.size() >= cap) break;
        out.push_back({{e1, e2}, (*toggles)[e1] * (*toggles)[e2]});
      }
    for (std::uint32_t len = 3; len <= cfg.word_bound; ++len) {
      for (std::uint32_t w = 0; w < cfg.words_per_length && out.size() < cap; ++w) {
        std::vector<std::uint32_t> word(len);
        Perm p(degree);
        for (auto& e : word) {
          e = pool[static_cast<std::size_t>(rng() % pool.size())];
          p = (*toggles)[e] * p;
        }
        out.push_back({std::move(word), std::move(p)});
      }
    }
    return out;
  }
};

nlohmann::json lemma_fail(const std::string& clause, const SetFamily& f,
                          const ToggleSet& ts, const BlockSystem& bs) {
  nlohmann::json toggles = nlohmann::json::array();
  for (const Perm& t : ts.toggles) toggles.push_back(t.images());
  return nlohmann::json{{"certifier", clause},
                        {"family", f.to_json()},
                        {"block_system", bs.block_of},
                        {"toggles", std::move(toggles)}};
}

std::vector<std::uint32_t> restriction_cycle_lengths(const Perm& p,
                                                     const std::vector<std::uint32_t>& block) {
  std::vector<std::uint32_t> lengths;
  std::set<std::uint32_t> left(block.begin(), block.end());
  while (!left.empty()) {
    std::uint32_t start = *left.begin();
    std::uint32_t len = 0;
    std::uint32_t x = start;
    do {
      left.erase(x);
      ++len;
      x = p(x);
    } while (x != start);
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace

std::vector<CertResult> check_lemma_suite(const SetFamily& f, const BlockSystem& bs,
                                          const CertConfig& cfg) {
  return check_lemma_suite(f, build_toggles(f), bs, cfg);
}

std::vector<CertResult> check_lemma_suite(const SetFamily& f, const ToggleSet& ts,
                                          const BlockSystem& bs, const CertConfig& cfg) {
  Timer t;
  ToggleTypeMap types = classify_toggles(f, ts, bs);  // throws on an invalid system
  const auto type1 = types.ground_of_type(ToggleType::Type1);
  const auto type2 = types.ground_of_type(ToggleType::Type2);
  const auto blocks = bs.blocks();
  std::vector<CertResult> out;

  auto emit = [&](const std::string& clause, CertStatus status, nlohmann::json witness) {
    out.push_back(make_result(clause, status, std::move(witness), t));
  };

  // Type 1 toggles mapping a block to itself fix it pointwise.
  {
    const std::string clause = "type1-fixed-block-pointwise";
    if (type1.empty()) {
      emit(clause, CertStatus::VacuouslyTrue, {{"note", "no type 1 toggles"}});
    } else {
      bool failed = false;
      for (std::uint32_t e : type1) {
        const Perm& tau = ts.toggles[e];
        for (const auto& block : blocks) {
          if (bs.block_of[tau(block.front())] != bs.block_of[block.front()]) continue;
          for (std::uint32_t i : block) {
            if (tau(i) != i) {
              nlohmann::json w = lemma_fail(clause, f, ts, bs);
              w["toggle"] = f.ground()[e];
              w["point"] = i;
              emit(clause, CertStatus::Fail, std::move(w));
              failed = true;
              break;
            }
          }
          if (failed) break;
        }
        if (failed) break;
      }
      if (!failed) emit(clause, CertStatus::Pass, {});
    }
  }

  // Every type 1 toggle commutes with every type 2 toggle.
  {
    const std::string clause = "type1-type2-commute";
    if (type1.empty() || type2.empty()) {
      emit(clause, CertStatus::VacuouslyTrue, {{"note", "one of the toggle types is empty"}});
    } else {
      bool failed = false;
      for (std::uint32_t e1 : type1) {
        for (std::uint32_t e2 : type2) {
          if (ts.toggles[e1] * ts.toggles[e2] == ts.toggles[e2] * ts.toggles[e1]) continue;
          nlohmann::json w = lemma_fail(clause, f, ts, bs);
          w["type1_toggle"] = f.ground()[e1];
          w["type2_toggle"] = f.ground()[e2];
          emit(clause, CertStatus::Fail, std::move(w));
          failed = true;
          break;
        }
        if (failed) break;
      }
      if (!failed) emit(clause, CertStatus::Pass, {});
    }
  }

  // A type 2 toggle restricts to the same cycle structure on every block.
  {
    const std::string clause = "type2-uniform-block-cycles";
    if (type2.empty()) {
      emit(clause, CertStatus::VacuouslyTrue, {{"note", "no type 2 toggles"}});
    } else {
      bool failed = false;
      for (std::uint32_t e : type2) {
        auto reference = restriction_cycle_lengths(ts.toggles[e], blocks.front());
        for (std::size_t b = 1; b < blocks.size(); ++b) {
          if (restriction_cycle_lengths(ts.toggles[e], blocks[b]) == reference) continue;
          nlohmann::json w = lemma_fail(clause, f, ts, bs);
          w["toggle"] = f.ground()[e];
          w["block"] = blocks[b];
          emit(clause, CertStatus::Fail, std::move(w));
          failed = true;
          break;
        }
        if (failed) break;
      }
      if (!failed) emit(clause, CertStatus::Pass, {});
    }
  }

  std::mt19937_64 rng(cfg.word_seed);
  WordSampler sampler1{&ts.toggles, type1, f.size()};
  WordSampler sampler2{&ts.toggles, type2, f.size()};
  auto words1 = sampler1.words(cfg, rng);
  auto words2 = sampler2.words(cfg, rng);

  // A product of type 2 toggles that fixes one block pointwise is trivial.
  {
    const std::string clause = "type2-block-fix-is-identity";
    if (words2.empty()) {
      emit(clause, CertStatus::VacuouslyTrue, {{"note", "no type 2 toggles"}});
    } else {
      bool failed = false;
      for (const auto& [word, rho] : words2) {
        for (const auto& block : blocks) {
          bool fixes_all = true;
          for (std::uint32_t i : block)
            if (rho(i) != i) {
              fixes_all = false;
              break;
            }
          if (!fixes_all || rho.is_identity()) continue;
          nlohmann::json w = lemma_fail(clause, f, ts, bs);
          w["word"] = word;
          w["block"] = block;
          w["product"] = perm_json(rho);
          emit(clause, CertStatus::Fail, std::move(w));
          failed = true;
          break;
        }
        if (failed) break;
      }
      if (!failed) emit(clause, CertStatus::Pass, {{"words_checked", words2.size()}});
    }
  }

  // A product of type 1 toggles acts on each block by symmetric difference
  // with one fixed set.
  {
    const std::string clause = "type1-symmetric-difference";
    if (words1.empty()) {
      emit(clause, CertStatus::VacuouslyTrue, {{"note", "no type 1 toggles"}});
    } else {
      bool failed = false;
      for (const auto& [word, sigma] : words1) {
        for (const auto& block : blocks) {
          const std::uint64_t x = f.mask(block.front()) ^ f.mask(sigma(block.front()));
          for (std::uint32_t i : block) {
            if (f.mask(sigma(i)) == (f.mask(i) ^ x)) continue;
            nlohmann::json w = lemma_fail(clause, f, ts, bs);
            w["word"] = word;
            w["block"] = block;
            emit(clause, CertStatus::Fail, std::move(w));
            failed = true;
            break;
          }
          if (failed) break;
        }
        if (failed) break;
      }
      if (!failed) emit(clause, CertStatus::Pass, {{"words_checked", words1.size()}});
    }
  }

  // Words over the two disjoint ground parts agree at a point only when both
  // fix it.
  {
    const std::string clause = "disjoint-words-agree-iff-fix";
    if (words1.empty() || words2.empty()) {
      emit(clause, CertStatus::VacuouslyTrue, {{"note", "one of the toggle types is empty"}});
    } else {
      bool failed = false;
      const std::size_t cap = 128;
      for (std::size_t i1 = 0; i1 < words1.size() && i1 < cap && !failed; ++i1) {
        const auto& [word_sigma, sigma] = words1[i1];
        for (std::size_t i2 = 0; i2 < words2.size() && i2 < cap && !failed; ++i2) {
          const auto& [word_rho, rho] = words2[i2];
          for (std::uint32_t a = 0; a < f.size(); ++a) {
            if (sigma(a) != rho(a)) continue;
            if (sigma(a) == a) continue;
            nlohmann::json w = lemma_fail(clause, f, ts, bs);
            w["word_type1"] = word_sigma;
            w["word_type2"] = word_rho;
            w["point"] = a;
            emit(clause, CertStatus::Fail, std::move(w));
            failed = true;
            break;
          }
        }
      }
      if (!failed) emit(clause, CertStatus::Pass, {});
    }
  }

  return out;
}

CertResult replay_witness(const nlohmann::json& witness, const CertConfig& cfg) {
  if (!witness.is_object() || !witness.contains("certifier"))
    throw std::invalid_argument("witness has no certifier field");
  const std::string name = witness.at("certifier").get<std::string>();

  if (name == "product-long-cycle") {
    SetFamily f1 = SetFamily::from_json(witness.at("family1"));
    SetFamily f2 = SetFamily::from_json(witness.at("family2"));
    return certify_product_long_cycle(f1, f2, cfg);
  }

  SetFamily f = SetFamily::from_json(witness.at("family"));
  const auto& theorems = theorem_certifiers();
  if (std::find(theorems.begin(), theorems.end(), name) != theorems.end()) {
    FamilyAnalysis a = analyze_family(f, cfg);
    return run_certifier(name, a, cfg);
  }

  // Lemma clause: rebuild the block system and (possibly injected) toggles.
  BlockSystem bs = BlockSystem::from_assignment(
      witness.at("block_system").get<std::vector<std::uint32_t>>());
  ToggleSet ts;
  if (witness.contains("toggles")) {
    for (const auto& images : witness.at("toggles"))
      ts.toggles.push_back(Perm::from_images(images.get<std::vector<std::uint32_t>>()));
    for (std::uint32_t e = 0; e < ts.toggles.size(); ++e)
      if (ts.toggles[e].is_identity()) ts.identity_toggles.push_back(e);
  } else {
    ts = build_toggles(f);
  }
  for (const CertResult& r : check_lemma_suite(f, ts, bs, cfg))
    if (r.name == name) return r;
  throw std::invalid_argument("witness names an unknown lemma clause: " + name);
}

// ---------------------------------------------------------------------------
// Sweep and survey
// ---------------------------------------------------------------------------

namespace {

struct FamilyOutcome {
  bool transitive = false;
  std::vector<CertResult> certifier_results;
  std::vector<CertResult> lemma_results;
  std::uint64_t lemma_pairs = 0;
  nlohmann::json family_doc;
  std::string order;
  std::size_t degree = 0;
};

FamilyOutcome certify_one(const SetFamily& f, const std::vector<std::string>& theorems,
                          bool lemma_suite, const CertConfig& cfg) {
  FamilyOutcome out;
  out.family_doc = f.to_json();
  out.degree = f.size();
  FamilyAnalysis a = analyze_family(f, cfg);
  out.order = order_string(a.group.order());
  out.transitive = a.transitive;
  if (!a.transitive) return out;
  for (const std::string& name : theorems)
    out.certifier_results.push_back(run_certifier(name, a, cfg));
  if (lemma_suite) {
    for (const BlockSystem& bs : a.nontrivial_systems) {
      ++out.lemma_pairs;
      auto results = check_lemma_suite(f, a.toggles, bs, cfg);
      out.lemma_results.insert(out.lemma_results.end(), results.begin(), results.end());
    }
  }
  return out;
}

}  // namespace

namespace {

SweepReport sweep_core(const std::function<std::optional<SetFamily>()>& pull,
                       const FamilyStream& stream, const std::vector<std::string>& suite,
                       const CertConfig& cfg, unsigned jobs) {
  Timer timer;
  SweepReport rep;
  rep.stream = stream;
  rep.suite = suite;
  rep.config = cfg;

  bool lemma_suite = false;
  std::vector<std::string> theorems;
  for (const std::string& name : suite) {
    if (name == kLemmaSuite)
      lemma_suite = true;
    else
      theorems.push_back(name);
  }
  for (const std::string& name : theorems) rep.certifier_tally[name];

  const std::size_t batch_size = std::max<std::size_t>(1, jobs) * 16;

  auto absorb = [&](FamilyOutcome&& outcome) {
    ++rep.families_yielded;
    if (!outcome.transitive) {
      ++rep.skipped_intransitive;
      return;
    }
    ++rep.families_examined;
    bool any_undecided = false;
    for (CertResult& r : outcome.certifier_results) {
      rep.certifier_tally[r.name].add(r.status);
      if (r.status == CertStatus::Fail) {
        if (rep.failures.size() < 200) rep.failures.push_back(r);
      } else if (r.status == CertStatus::Undecided) {
        any_undecided = true;
        if (rep.undecided_cases.size() < 1000)
          rep.undecided_cases.push_back(nlohmann::json{{"certifier", r.name},
                                                       {"family", outcome.family_doc},
                                                       {"degree", outcome.degree},
                                                       {"order", outcome.order}});
      }
    }
    rep.lemma_pairs_examined += outcome.lemma_pairs;
    for (CertResult& r : outcome.lemma_results) {
      rep.lemma_tally[r.name].add(r.status);
      if (r.status == CertStatus::Fail && rep.failures.size() < 200)
        rep.failures.push_back(r);
    }
    if (any_undecided) ++rep.families_with_undecided;
  };

  while (true) {
    std::vector<SetFamily> batch;
    while (batch.size() < batch_size) {
      auto fam = pull();
      if (!fam) break;
      batch.push_back(std::move(*fam));
    }
    if (batch.empty()) break;

    std::vector<FamilyOutcome> outcomes(batch.size());
    if (jobs <= 1 || batch.size() == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i)
        outcomes[i] = certify_one(batch[i], theorems, lemma_suite, cfg);
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr error;
      std::mutex error_mutex;
      auto worker = [&] {
        try {
          for (std::size_t i = next.fetch_add(1); i < batch.size(); i = next.fetch_add(1))
            outcomes[i] = certify_one(batch[i], theorems, lemma_suite, cfg);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      };
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < std::min<std::size_t>(jobs, batch.size()); ++w)
        pool.emplace_back(worker);
      for (auto& th : pool) th.join();
      if (error) std::rethrow_exception(error);
    }
    for (auto& outcome : outcomes) absorb(std::move(outcome));
  }

  rep.undecided_rate = rep.families_examined == 0
                           ? 0.0
                           : static_cast<double>(rep.families_with_undecided) /
                                 static_cast<double>(rep.families_examined);
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(timer.elapsed());
  return rep;
}

}  // namespace

SweepReport sweep(const FamilyStream& stream, const std::vector<std::string>& suite,
                  const CertConfig& cfg, unsigned jobs) {
  FamilyEnumerator en(stream);
  SweepReport rep = sweep_core([&] { return en.next(); }, stream, suite, cfg, jobs);
  rep.collapsed_duplicates = en.collapsed_duplicates();
  rep.degenerate_dropped = en.degenerate_dropped();
  return rep;
}

SweepReport certify_families(const std::vector<SetFamily>& families,
                             nlohmann::json source_doc,
                             const std::vector<std::string>& suite, const CertConfig& cfg,
                             unsigned jobs) {
  std::size_t idx = 0;
  SweepReport rep = sweep_core(
      [&]() -> std::optional<SetFamily> {
        if (idx >= families.size()) return std::nullopt;
        return families[idx++];
      },
      FamilyStream{}, suite, cfg, jobs);
  rep.source_doc = std::move(source_doc);
  return rep;
}

SurveyReport survey_exceptionals(const FamilyStream& stream, const CertConfig& cfg) {
  Timer timer;
  SurveyReport rep;
  rep.stream = stream;
  rep.config = cfg;
  rep.note =
      "bounded search over the given stream; an empty candidate list does not "
      "decide which primitive groups with a cycle of length >= degree-2 are "
      "toggle groups";

  FamilyEnumerator en(stream);
  while (auto fam = en.next()) {
    ++rep.families_yielded;
    FamilyAnalysis a = analyze_family(*fam, cfg);
    if (!a.transitive) continue;
    ++rep.transitive;
    const std::uint32_t n = static_cast<std::uint32_t>(fam->size());
    if (n < 2 || !a.primitive()) continue;
    ++rep.primitive;
    if (a.group.is_symmetric() || a.group.has_alternating_order()) continue;
    for (std::uint32_t k = n; k >= 2 && k + 2 >= n; --k) {
      CycleQuery q = a.cycle_query(k, cfg);
      if (q.verdict == Ternary::Undecided) {
        rep.undecided_cases.push_back(nlohmann::json{{"family", fam->to_json()},
                                                     {"degree", n},
                                                     {"order", order_string(a.group.order())},
                                                     {"cycle_length", k}});
        continue;
      }
      if (q.verdict != Ternary::Yes) continue;
      SurveyCandidate cand;
      cand.family = fam->to_json();
      cand.degree = n;
      cand.order = order_string(a.group.order());
      cand.cycle_length = k;
      cand.witness = q.witness ? q.witness->cycle_string() : "";
      rep.candidates.push_back(std::move(cand));
      break;
    }
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(timer.elapsed());
  return rep;
}

}  // namespace togglelab
