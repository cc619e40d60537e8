#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nilsymp/json_io.hpp"
#include "nilsymp/obstruct.hpp"
#include "nilsymp/symp.hpp"

namespace nilsymp {

struct CaseKey {
  std::string family;  // "A".."G"
  int rank = 0;
  std::vector<int> pi0;  // sorted, 1-based

  std::string code() const;
  bool operator<(const CaseKey& o) const;
  bool operator==(const CaseKey& o) const = default;
};

struct SurveyRow {
  CaseKey key;
  int dim = 0;
  int k = 0;
  bool abelian = false;
  bool member = false;  // classification-candidate membership
  Verdict verdict_n;
  Verdict verdict_ext;
};

struct SurveyOptions {
  int max_rank = 8;
  int samples = 64;
  std::uint64_t prime = 4611686018427387847ull;
  std::uint64_t seed_mix = 0;
  bool verdicts = true;  // membership-only surveys skip the decision pipeline
  bool resign = false;   // random Jacobi-consistent re-signing of every table
  std::uint64_t resign_seed = 1;
};

struct GoldenMismatch {
  std::string row;
  std::string field;
  std::string expected;
  std::string actual;
};

struct SurveyResult {
  SurveyOptions options;
  std::vector<SurveyRow> rows;  // sorted by CaseKey
  std::vector<GoldenMismatch> membership_diffs;
  std::vector<GoldenMismatch> verdict_diffs;
  bool compared = false;

  bool matches_goldens() const { return membership_diffs.empty() && verdict_diffs.empty(); }
};

SurveyResult run_survey(const SurveyOptions& opts);

/// Compare against the committed reference tables; fills the diff lists.
void compare_with_goldens(SurveyResult& result, const std::filesystem::path& membership_path,
                          const std::filesystem::path& classification_path);

Json survey_to_json(const SurveyResult& r);
std::string survey_to_csv(const SurveyResult& r);
/// Regenerate both golden files from the computed rows (the --bless path).
void bless_goldens(const SurveyResult& r, const std::filesystem::path& membership_path,
                   const std::filesystem::path& classification_path);

/// Human-readable case report: dims, grading, series, Betti numbers when the
/// dimension permits, hwv list, obstructions, and the final verdicts.
std::string explain_case(const CaseKey& key, const SurveyOptions& opts);

CaseKey parse_case_key(const std::string& type_code, const std::vector<int>& pi0);

}  // namespace nilsymp
