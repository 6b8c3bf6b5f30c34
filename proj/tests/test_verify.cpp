#include "brm/verify.hpp"

#include <doctest.h>

using namespace brm;

TEST_SUITE("verify") {

TEST_CASE("every suite passes on a small grid") {
  VerifyConfig cfg;
  cfg.max_n = 2;
  cfg.max_m = 3;
  for (const auto& r : run_all(cfg)) {
    INFO(r.summary());
    CHECK(r.passed());
    CHECK(r.count(CaseStatus::Fail) == 0);
    CHECK(r.first_failure() == nullptr);
  }
}

TEST_CASE("modular mode") {
  VerifyConfig cfg;
  cfg.mode = Mode::Modular;
  cfg.n = 3;
  cfg.m = 3;
  auto r = run_suite("transposition", cfg);
  CHECK(r.passed());
  CHECK(!r.cases.empty());
}

TEST_CASE("names and errors") {
  CHECK(suite_names().size() == 15);
  CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
  CHECK(parse_mode("modular") == Mode::Modular);
  CHECK_THROWS(parse_mode("fast"));
  CHECK(to_string(CaseStatus::Skipped) == "skipped");
}

TEST_CASE("guarded cases are skipped") {
  VerifyConfig cfg;
  cfg.n = 5;
  cfg.m = 7;
  auto r = run_suite("comb-tau", cfg);
  CHECK(r.count(CaseStatus::Skipped) > 0);
  CHECK(r.count(CaseStatus::Fail) == 0);
}

TEST_CASE("output is deterministic") {
  VerifyConfig cfg;
  cfg.max_n = 2;
  cfg.max_m = 3;
  auto a = run_suite("loop-energy", cfg), b = run_suite("loop-energy", cfg);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.summary() == b.summary());
  auto j = a.to_json();
  CHECK(j["suite"] == "loop-energy");
  CHECK(j.contains("cases"));
  CHECK_FALSE(j.contains("seconds"));
}

}
