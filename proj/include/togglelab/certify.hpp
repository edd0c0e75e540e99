#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "togglelab/blocks.hpp"
#include "togglelab/cycles.hpp"
#include "togglelab/enumerate.hpp"
#include "togglelab/factorization.hpp"
#include "togglelab/group.hpp"
#include "togglelab/set_family.hpp"
#include "togglelab/toggles.hpp"

namespace togglelab {

// Vacuous truth is reported as its own status: a sweep has to show how often
// a hypothesis actually fired. Undecided only ever arises from a cycle
// containment query above the enumeration limit and is never a pass.
enum class CertStatus { Pass, Fail, VacuouslyTrue, Undecided };

const char* to_string(CertStatus s);

struct CertConfig {
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
  std::uint32_t word_bound = 8;       // max sampled word length in the lemma suite
  std::uint32_t words_per_length = 32;
  std::uint64_t word_seed = 2024;     // word sampling is deterministic per config
};

struct CertResult {
  std::string name;
  CertStatus status = CertStatus::Pass;
  // On Fail: a payload sufficient to replay the violation (always carries the
  // family). On Undecided: the blocking query. Possibly empty otherwise.
  nlohmann::json witness;
  std::chrono::microseconds timing{0};
};

// Everything several certifiers want to share about one family: the toggle
// set, the stabilizer chain, block systems, and at most one element scan.
struct FamilyAnalysis {
  SetFamily family;
  ToggleSet toggles;
  Group group;
  bool transitive = false;
  std::vector<BlockSystem> nontrivial_systems;  // meaningful when transitive, n >= 2

  bool spectrum_ready = false;
  std::optional<CycleSpectrum> spectrum;

  bool primitive() const { return nontrivial_systems.empty(); }
  // Cycle containment with the scan cached across queries.
  CycleQuery cycle_query(std::uint32_t k, const CertConfig& cfg);
};

FamilyAnalysis analyze_family(const SetFamily& f, const CertConfig& cfg = {});

// Certifier names are stable identifiers used in suites and reports.
inline constexpr const char* kCertTransposition = "transposition";
inline constexpr const char* kCertThreeCycle = "three-cycle";
inline constexpr const char* kCertShortCyclePrimitive = "short-cycle-primitive";
inline constexpr const char* kCertJordanJones = "jordan-jones";
inline constexpr const char* kCertImprimitiveDecomposition = "imprimitive-decomposition";
inline constexpr const char* kCertPrimePowerPrimitive = "prime-power-primitive";
inline constexpr const char* kLemmaSuite = "lemma-suite";

const std::vector<std::string>& theorem_certifiers();

// "all", a single name, or a comma-separated list; validates names.
std::vector<std::string> resolve_suite(const std::string& selection);

// A transitive group of degree n containing a transposition is all of S_n.
CertResult certify_transposition(FamilyAnalysis& a, const CertConfig& cfg = {});
// A transitive group of degree n containing a 3-cycle contains A_n.
CertResult certify_three_cycle(FamilyAnalysis& a, const CertConfig& cfg = {});
// A transitive group containing a nontrivial cycle with a fixed point is primitive.
CertResult certify_short_cycle_primitive(FamilyAnalysis& a, const CertConfig& cfg = {});
// A cycle of length <= n-3 forces A_n (via the primitivity step).
CertResult certify_jordan_jones(FamilyAnalysis& a, const CertConfig& cfg = {});
// Imprimitive + long cycle: the family splits into coprime factors, each with
// a long cycle, and each split is a direct product of the factor groups.
CertResult certify_imprimitive_decomposition(FamilyAnalysis& a, const CertConfig& cfg = {});
// Prime-power degree + long cycle forces primitivity.
CertResult certify_prime_power_primitive(FamilyAnalysis& a, const CertConfig& cfg = {});

CertResult certify_transposition(const SetFamily& f, const CertConfig& cfg = {});
CertResult certify_three_cycle(const SetFamily& f, const CertConfig& cfg = {});
CertResult certify_short_cycle_primitive(const SetFamily& f, const CertConfig& cfg = {});
CertResult certify_jordan_jones(const SetFamily& f, const CertConfig& cfg = {});
CertResult certify_imprimitive_decomposition(const SetFamily& f, const CertConfig& cfg = {});
CertResult certify_prime_power_primitive(const SetFamily& f, const CertConfig& cfg = {});

CertResult run_certifier(const std::string& name, FamilyAnalysis& a,
                         const CertConfig& cfg = {});

// The product of disjoint factors contains a long cycle iff the factor sizes
// are coprime and both factors contain long cycles; both sides are computed
// independently and compared. Requires |L1|, |L2| >= 2 and disjoint grounds.
CertResult certify_product_long_cycle(const SetFamily& f1, const SetFamily& f2,
                                      const CertConfig& cfg = {});

// Block-structure property checks, one result per clause:
//   type1-fixed-block-pointwise, type1-type2-commute,
//   type2-uniform-block-cycles, type2-block-fix-is-identity,
//   type1-symmetric-difference, disjoint-words-agree-iff-fix.
// Quantifiers over arbitrary products are sampled: all single toggles, all
// pairs, plus words up to cfg.word_bound. The ToggleSet overload is the
// injection point for negative controls.
std::vector<CertResult> check_lemma_suite(const SetFamily& f, const BlockSystem& bs,
                                          const CertConfig& cfg = {});
std::vector<CertResult> check_lemma_suite(const SetFamily& f, const ToggleSet& ts,
                                          const BlockSystem& bs,
                                          const CertConfig& cfg = {});

// Re-runs the certifier named in a Fail witness on the payload it carries.
CertResult replay_witness(const nlohmann::json& witness, const CertConfig& cfg = {});

struct StatusTally {
  std::uint64_t pass = 0, fail = 0, vacuous = 0, undecided = 0;
  std::uint64_t total() const { return pass + fail + vacuous + undecided; }
  void add(CertStatus s);
};

struct SweepReport {
  FamilyStream stream;
  nlohmann::json source_doc;  // overrides the stream description when non-null
  std::vector<std::string> suite;
  CertConfig config;

  std::uint64_t families_yielded = 0;
  std::uint64_t families_examined = 0;  // transitive families that were certified
  std::uint64_t skipped_intransitive = 0;
  std::uint64_t collapsed_duplicates = 0;
  std::uint64_t degenerate_dropped = 0;

  std::map<std::string, StatusTally> certifier_tally;
  std::uint64_t lemma_pairs_examined = 0;  // (family, nontrivial system) pairs
  std::map<std::string, StatusTally> lemma_tally;

  std::uint64_t families_with_undecided = 0;
  double undecided_rate = 0.0;  // families with any Undecided / families examined
  std::vector<nlohmann::json> undecided_cases;
  std::vector<CertResult> failures;

  std::chrono::milliseconds elapsed{0};

  bool all_clear() const { return failures.empty(); }
};

SweepReport sweep(const FamilyStream& stream, const std::vector<std::string>& suite,
                  const CertConfig& cfg = {}, unsigned jobs = 1);

// Same reporting over an explicit family list (e.g. a single file input).
SweepReport certify_families(const std::vector<SetFamily>& families,
                             nlohmann::json source_doc,
                             const std::vector<std::string>& suite,
                             const CertConfig& cfg = {}, unsigned jobs = 1);

// Search harness for primitive families whose group contains a cycle of
// length n, n-1 or n-2 without having symmetric or alternating order. A
// bounded search, not a verdict on any classification claim.
struct SurveyCandidate {
  nlohmann::json family;
  std::uint32_t degree = 0;
  std::string order;
  std::uint32_t cycle_length = 0;
  std::string witness;  // cycle form of the witness element
};

struct SurveyReport {
  FamilyStream stream;
  CertConfig config;
  std::uint64_t families_yielded = 0;
  std::uint64_t transitive = 0;
  std::uint64_t primitive = 0;
  std::vector<SurveyCandidate> candidates;
  std::vector<nlohmann::json> undecided_cases;
  std::string note;
  std::chrono::milliseconds elapsed{0};
};

SurveyReport survey_exceptionals(const FamilyStream& stream, const CertConfig& cfg = {});

}  // namespace togglelab
