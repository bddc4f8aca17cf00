#include <doctest.h>

#include <set>

#include "besselpow/verify.hpp"

using namespace besselpow;

TEST_CASE("default harness run") {
  VerifyReport report = run_verify(VerifyConfig{});
  CHECK(report.ok());
  CHECK(report.count(CheckStatus::Fail) == 0);
  CHECK(report.count(CheckStatus::ExpectedDiscrepancy) >= 2);
  const std::set<std::string> known{std::string(kZetaTableNote), std::string(kBenderBdef),
                                    std::string(kModseq1Product),
                                    std::string(kBinomialTypeNormalized)};
  std::set<std::string> seen;
  for (const auto& r : report.runs) {
    CHECK(r.discrepancy_id.empty() == (r.status != CheckStatus::ExpectedDiscrepancy));
    if (!r.discrepancy_id.empty()) {
      CHECK(known.count(r.discrepancy_id) == 1);
      seen.insert(r.discrepancy_id);
    }
  }
  CHECK(seen == known);
  // sorted by id, then parameters
  for (std::size_t i = 1; i < report.runs.size(); ++i) {
    const auto& a = report.runs[i - 1];
    const auto& b = report.runs[i];
    CHECK((a.check_id < b.check_id ||
           (a.check_id == b.check_id && a.parameters.dump() <= b.parameters.dump())));
  }
  Json j = report.to_json();
  CHECK(j["version"] == std::string(kReportVersion));
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["config"]["mutation"] == "none");
}

TEST_CASE("report is deterministic") {
  VerifyConfig c;
  c.max_n = 5;
  CHECK(run_verify(c).to_json().dump() == run_verify(c).to_json().dump());
}

TEST_CASE("shallow run at nu = 0 passes") {
  VerifyConfig c;
  c.nus = {Rational(0)};
  c.max_n = 4;
  CHECK(run_verify(c).ok());
}

TEST_CASE("mutation turns passes into failures") {
  VerifyConfig c;
  c.max_n = 4;
  VerifyReport clean = run_verify(c);
  c.flip_zeta_sign = true;
  VerifyReport bad = run_verify(c);
  CHECK_FALSE(bad.ok());
  REQUIRE(clean.runs.size() == bad.runs.size());
  std::size_t flipped = 0;
  for (std::size_t i = 0; i < clean.runs.size(); ++i) {
    CHECK(clean.runs[i].check_id == bad.runs[i].check_id);
    if (clean.runs[i].status == CheckStatus::Pass && bad.runs[i].status == CheckStatus::Fail) {
      ++flipped;
    }
  }
  CHECK(flipped > 0);
  const CheckResult* z = nullptr;
  for (const auto& r : bad.runs) {
    if (r.check_id == "zeta.recurrence_vs_series") {
      z = &r;
      break;
    }
  }
  REQUIRE(z != nullptr);
  CHECK(z->status == CheckStatus::Fail);
  CHECK(z->detail.rfind("zeta(4)", 0) == 0);
}

TEST_CASE("configuration errors") {
  VerifyConfig c;
  c.max_n = 0;
  CHECK_THROWS_AS(run_verify(c), std::invalid_argument);
  c.max_n = 3;
  c.nus = {Rational(-2)};
  CHECK_THROWS_AS(run_verify(c), std::invalid_argument);
}
