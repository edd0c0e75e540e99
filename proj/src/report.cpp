#include "togglelab/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace togglelab {

nlohmann::json to_json(const RunConfig& cfg) {
  return nlohmann::json{{"enumeration_limit", cfg.enumeration_limit},
                        {"word_bound", cfg.word_bound},
                        {"seed", cfg.seed},
                        {"jobs", cfg.jobs},
                        {"output", cfg.output_mode}};
}

nlohmann::json to_json(const CertResult& r) {
  nlohmann::json out{{"name", r.name}, {"status", to_string(r.status)}};
  if (!r.witness.is_null()) out["witness"] = r.witness;
  return out;
}

nlohmann::json to_json(const StatusTally& t) {
  return nlohmann::json{{"pass", t.pass},
                        {"fail", t.fail},
                        {"vacuously_true", t.vacuous},
                        {"undecided", t.undecided}};
}

nlohmann::json stream_json(const FamilyStream& s) {
  nlohmann::json out{{"ground_size", s.ground_size}};
  if (s.mode == FamilyStream::Mode::Exhaustive) {
    out["mode"] = "exhaustive";
  } else {
    out["mode"] = "sampled";
    out["seed"] = s.seed;
    out["count"] = s.count;
  }
  if (s.transitive_only) out["transitive_only"] = true;
  if (s.min_size > 0) out["min_size"] = s.min_size;
  return out;
}

nlohmann::json to_json(const SweepReport& rep) {
  nlohmann::json certifiers = nlohmann::json::object();
  for (const auto& [name, tally] : rep.certifier_tally) certifiers[name] = to_json(tally);

  nlohmann::json out{
      {"source", rep.source_doc.is_null() ? stream_json(rep.stream) : rep.source_doc},
      {"suite", rep.suite},
      {"families",
       {{"yielded", rep.families_yielded},
        {"examined", rep.families_examined},
        {"skipped_intransitive", rep.skipped_intransitive},
        {"collapsed_duplicates", rep.collapsed_duplicates},
        {"degenerate_dropped", rep.degenerate_dropped}}},
      {"certifiers", std::move(certifiers)},
      {"undecided",
       {{"families", rep.families_with_undecided},
        {"rate", rep.undecided_rate},
        {"cases", rep.undecided_cases}}},
      {"failures", nlohmann::json::array()}};
  for (const CertResult& r : rep.failures) out["failures"].push_back(to_json(r));

  if (rep.lemma_pairs_examined > 0 ||
      std::find(rep.suite.begin(), rep.suite.end(), kLemmaSuite) != rep.suite.end()) {
    nlohmann::json clauses = nlohmann::json::object();
    for (const auto& [name, tally] : rep.lemma_tally) clauses[name] = to_json(tally);
    out["lemma_suite"] = {{"pairs_examined", rep.lemma_pairs_examined},
                          {"clauses", std::move(clauses)}};
  }
  return out;
}

nlohmann::json to_json(const SurveyReport& rep) {
  nlohmann::json candidates = nlohmann::json::array();
  for (const SurveyCandidate& c : rep.candidates)
    candidates.push_back(nlohmann::json{{"family", c.family},
                                        {"degree", c.degree},
                                        {"order", c.order},
                                        {"cycle_length", c.cycle_length},
                                        {"witness", c.witness}});
  return nlohmann::json{{"source", stream_json(rep.stream)},
                        {"families",
                         {{"yielded", rep.families_yielded},
                          {"transitive", rep.transitive},
                          {"primitive", rep.primitive}}},
                        {"candidates", std::move(candidates)},
                        {"undecided_cases", rep.undecided_cases},
                        {"note", rep.note}};
}

std::string structured_report(const std::string& command, const RunConfig& cfg,
                              const nlohmann::json& body) {
  nlohmann::json doc{{"schema_version", kReportSchemaVersion},
                     {"tool", "toggle-lab"},
                     {"command", command},
                     {"config", to_json(cfg)},
                     {"report", body}};
  return doc.dump(2) + "\n";
}

namespace {

void tally_table(std::ostringstream& os, const std::map<std::string, StatusTally>& tallies) {
  std::size_t width = 12;
  for (const auto& [name, tally] : tallies) width = std::max(width, name.size());
  os << "  " << std::left << std::setw(static_cast<int>(width)) << "certifier"
     << std::right << std::setw(8) << "pass" << std::setw(8) << "fail" << std::setw(10)
     << "vacuous" << std::setw(11) << "undecided" << "\n";
  for (const auto& [name, tally] : tallies) {
    os << "  " << std::left << std::setw(static_cast<int>(width)) << name << std::right
       << std::setw(8) << tally.pass << std::setw(8) << tally.fail << std::setw(10)
       << tally.vacuous << std::setw(11) << tally.undecided << "\n";
  }
}

}  // namespace

std::string human_sweep_report(const SweepReport& rep) {
  std::ostringstream os;
  os << "sweep over "
     << (rep.source_doc.is_null() ? stream_json(rep.stream) : rep.source_doc).dump()
     << "\n";
  os << "families: yielded " << rep.families_yielded << ", examined "
     << rep.families_examined << " (skipped intransitive " << rep.skipped_intransitive
     << ", collapsed duplicates " << rep.collapsed_duplicates << ", degenerate dropped "
     << rep.degenerate_dropped << ")\n";
  tally_table(os, rep.certifier_tally);
  if (rep.lemma_pairs_examined > 0 || !rep.lemma_tally.empty()) {
    os << "lemma suite over " << rep.lemma_pairs_examined
       << " (family, block system) pairs\n";
    tally_table(os, rep.lemma_tally);
  }
  os << "undecided: " << rep.families_with_undecided << " families (rate "
     << rep.undecided_rate << ")\n";
  if (!rep.undecided_cases.empty()) {
    os << "undecided cases:\n";
    for (const auto& c : rep.undecided_cases) os << "  " << c.dump() << "\n";
  }
  os << "failures: " << rep.failures.size() << "\n";
  for (const CertResult& r : rep.failures)
    os << "  FAIL " << r.name << " witness " << r.witness.dump() << "\n";
  os << "elapsed: " << rep.elapsed.count() << " ms\n";
  os << "result: " << (rep.all_clear() ? "all clear" : "FAILURES PRESENT") << "\n";
  return os.str();
}

std::string human_survey_report(const SurveyReport& rep) {
  std::ostringstream os;
  os << "survey over " << stream_json(rep.stream).dump() << "\n";
  os << "families: yielded " << rep.families_yielded << ", transitive " << rep.transitive
     << ", primitive " << rep.primitive << "\n";
  os << "candidates (primitive, cycle of length >= degree-2, order not n! or n!/2): "
     << rep.candidates.size() << "\n";
  for (const SurveyCandidate& c : rep.candidates) {
    os << "  degree " << c.degree << " order " << c.order << " cycle length "
       << c.cycle_length << " witness " << c.witness << "\n";
    os << "    family " << c.family.dump() << "\n";
  }
  if (!rep.undecided_cases.empty()) {
    os << "undecided cases: " << rep.undecided_cases.size() << "\n";
    for (const auto& c : rep.undecided_cases) os << "  " << c.dump() << "\n";
  }
  os << "note: " << rep.note << "\n";
  os << "elapsed: " << rep.elapsed.count() << " ms\n";
  return os.str();
}

}  // namespace togglelab
