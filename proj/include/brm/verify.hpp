#pragma once

// Batch verification: each suite runs one family of checks over a grid of
// parameters and reports per-case status.  Modular mode evaluates both sides
// at seeded random points of Z/p instead of comparing exact expressions.

#include "brm/modular.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace brm {

enum class Mode { Symbolic, Modular };
Mode parse_mode(std::string_view s);

struct VerifyConfig {
  std::optional<int> n;  // exact values override the ranges
  std::optional<int> m;
  int max_n = 3;
  int max_m = 3;
  std::optional<int> max_span;  // j - i limit for the formula suites
  Mode mode = Mode::Symbolic;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  int points = 20;
  int words = 6;  // random words per (n, m) for loop-energy
};

enum class CaseStatus { Pass, Fail, Skipped };
std::string_view to_string(CaseStatus s);

struct CaseResult {
  std::string descriptor;
  CaseStatus status = CaseStatus::Pass;
  double seconds = 0;
  std::string lhs;  // filled on failure
  std::string rhs;
  std::string note;
};

struct VerifyReport {
  std::string suite;
  std::vector<CaseResult> cases;
  double seconds = 0;

  bool passed() const;
  std::size_t count(CaseStatus s) const;
  const CaseResult* first_failure() const;
  std::string summary(bool with_time = false) const;  // one line
  nlohmann::json to_json(bool with_time = false) const;
};

const std::vector<std::string>& suite_names();  // without "all"
// Throws std::invalid_argument for an unknown suite.
VerifyReport run_suite(std::string_view name, const VerifyConfig& cfg);
std::vector<VerifyReport> run_all(const VerifyConfig& cfg);

// The 15-term factor claimed to divide the numerator of s2*s3*s1*s2 (x_2^{(1)}), n = 2.
const char* q1_factor_text();

}  // namespace brm
