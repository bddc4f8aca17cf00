#pragma once

#include <optional>
#include <string>
#include <vector>

#include "besselpow/rational.hpp"
#include "besselpow/serialize.hpp"

namespace besselpow {

enum class CheckStatus { Pass, Fail, ExpectedDiscrepancy };

std::string_view status_name(CheckStatus s);

// Stable ids of the documented disagreements with the source formulas.
inline constexpr std::string_view kZetaTableNote = "ZETA-TABLE-NOTE";
inline constexpr std::string_view kBenderBdef = "BENDER-BDEF";
inline constexpr std::string_view kModseq1Product = "MODSEQ1-PRODUCT";
inline constexpr std::string_view kBinomialTypeNormalized = "BINOMIAL-TYPE-NORMALIZED";

struct CheckResult {
  std::string check_id;
  Json parameters;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::string discrepancy_id;  // set iff status == ExpectedDiscrepancy
};

struct VerifyConfig {
  /// std::nullopt stands for symbolic nu.
  std::vector<std::optional<Rational>> nus{std::nullopt, Rational(0), Rational(1),
                                           make_rational(1, 2), make_rational(5, 3)};
  unsigned max_n = 8;
  /// Negates the zeta convolution sum everywhere the harness builds a table.
  bool flip_zeta_sign = false;
};

struct VerifyReport {
  Json config;
  std::vector<CheckResult> runs;  // sorted by check id, then parameters

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::Fail) == 0; }
  const CheckResult* first_failure() const;
  const CheckResult* find(std::string_view check_id) const;
  Json to_json() const;
};

inline constexpr std::string_view kReportVersion = "besselpow-verify/1";

VerifyReport run_verify(const VerifyConfig& config);

/// "sym" or the canonical rational string.
std::string nu_label(const std::optional<Rational>& nu);

}  // namespace besselpow
