#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "togglelab/certify.hpp"

namespace togglelab {

inline constexpr int kReportSchemaVersion = 1;

// Effective run configuration, echoed verbatim into every report so a run can
// be reproduced from its output alone.
struct RunConfig {
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
  std::uint32_t word_bound = 8;
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  std::string output_mode = "human";  // human | json

  CertConfig cert() const {
    CertConfig c;
    c.enumeration_limit = enumeration_limit;
    c.word_bound = word_bound;
    return c;
  }
};

nlohmann::json to_json(const RunConfig& cfg);
nlohmann::json to_json(const CertResult& r);
nlohmann::json to_json(const StatusTally& t);
nlohmann::json stream_json(const FamilyStream& s);
nlohmann::json to_json(const SweepReport& rep);
nlohmann::json to_json(const SurveyReport& rep);

// Full structured document: schema version, command, config echo, body. The
// output is byte-stable for identical inputs and configuration (timings are
// deliberately omitted from structured reports).
std::string structured_report(const std::string& command, const RunConfig& cfg,
                              const nlohmann::json& body);

std::string human_sweep_report(const SweepReport& rep);
std::string human_survey_report(const SurveyReport& rep);

}  // namespace togglelab
