// Exit gate: one PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "besselpow/bpoly.hpp"
#include "besselpow/combinatorics.hpp"
#include "besselpow/sequences.hpp"
#include "besselpow/series.hpp"
#include "besselpow/verify.hpp"
#include "besselpow/zeta.hpp"

using namespace besselpow;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome failed(std::string detail) { return {false, std::move(detail)}; }

RatFunc frac(NuPoly num, NuPoly den) { return RatFunc(std::move(num), std::move(den)); }

// B_0..B_3 transcribed from the list of first examples.
std::vector<RPoly> shown_b() {
  const FieldValue z(RatFunc{});
  const NuPoly n1 = NuPoly::linear(1), n2 = NuPoly::linear(2), n3 = NuPoly::linear(3);
  const NuPoly n1sq = n1 * n1;
  return {
      RPoly::constant(FieldValue(RatFunc(Rational(1)))),
      RPoly({z, FieldValue(RatFunc(Rational(1)))}),
      RPoly({z, FieldValue(frac(NuPoly::constant(-1), n1)), FieldValue(frac(n2, n1))}),
      RPoly({z, FieldValue(frac(NuPoly::constant(4), n1sq)),
             FieldValue(frac(n3 * Rational(-3), n1sq)), FieldValue(frac(n3 * n2, n1sq))}),
  };
}

std::vector<RPoly> route(RouteId id, const FieldValue& nu, unsigned n) {
  return b_polys(id, nu, n);
}

Outcome c1() {
  const auto shown = shown_b();
  const FieldValue nu = FieldValue::symbolic_nu();
  for (RouteId id : agreeing_routes()) {
    auto b = route(id, nu, 3);
    for (unsigned n = 0; n <= 3; ++n) {
      if (!(b[n] == shown[n])) {
        return failed(std::string(route_name(id)) + " B_" + std::to_string(n) + " = " +
                      b[n].to_string());
      }
    }
  }
  return {true, "B_0..B_3 symbolic in nu and r on series, bell, pochhammer, step, binomial"};
}

Outcome equal_routes(const FieldValue& nu, unsigned n_max, const std::string& label) {
  const auto ref = b_via_series(nu, n_max);
  for (RouteId id : agreeing_routes()) {
    if (id == RouteId::SeriesEuler) continue;
    auto b = route(id, nu, n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
      if (!(b[n] == ref[n])) {
        return failed(label + ": " + std::string(route_name(id)) + " differs at n = " +
                      std::to_string(n));
      }
    }
  }
  return {};
}

Outcome c2() {
  if (auto o = equal_routes(FieldValue::symbolic_nu(), 12, "nu = sym"); !o.ok) return o;
  for (const Rational& nu : {Rational(0), Rational(1), make_rational(1, 2), make_rational(5, 3)}) {
    if (auto o = equal_routes(FieldValue(nu), 25, "nu = " + to_string(nu)); !o.ok) return o;
  }
  return {true, "five routes agree: n <= 12 symbolic nu, n <= 25 at nu in {0,1,1/2,5/3}"};
}

Outcome c3() {
  const FieldValue nu = FieldValue::symbolic_nu();
  ZetaTable table(nu);
  auto series = zeta_from_series_all(nu, 30);
  for (unsigned n = 1; n <= 30; ++n) {
    if (!(table.get(n) == series[n - 1])) return failed("zeta(" + std::to_string(2 * n) + ")");
  }
  VerifyConfig vc;
  vc.nus = {std::nullopt};
  vc.max_n = 4;
  VerifyReport report = run_verify(vc);
  unsigned noted = 0;
  for (const auto& r : report.runs) {
    if (r.check_id == "zeta.displayed_values" && r.status == CheckStatus::ExpectedDiscrepancy &&
        r.discrepancy_id == kZetaTableNote) {
      ++noted;
    }
  }
  if (noted != 3) return failed("expected 3 ZETA-TABLE-NOTE entries, found " + std::to_string(noted));
  return {true, "recurrence = series-log for 2n <= 60; displayed zeta(4), zeta(6), zeta(8) "
                "recorded as ZETA-TABLE-NOTE"};
}

Outcome c4() {
  ZetaTable table(FieldValue::symbolic_nu());
  for (unsigned n = 1; n <= 40; ++n) {
    NuPoly phi = rayleigh_phi(n, table);
    if (phi.degree() != rayleigh_degree(n)) {
      return failed("phi_" + std::to_string(2 * n) + " degree " + std::to_string(phi.degree()));
    }
    for (const auto& c : phi.coeffs()) {
      if (!is_integer(c) || c <= 0) return failed("phi_" + std::to_string(2 * n) + " coefficient");
    }
  }
  return {true, "phi_2..phi_80 have positive integer coefficients and the predicted degree"};
}

Outcome c5() {
  ZetaTable one(FieldValue(Rational(1)));
  auto rec = m_recurrence_table(60);
  for (unsigned k = 1; k <= 60; ++k) {
    Rational m = m_closed(k, one);
    if (m != rec[k - 1] || !is_integer(m)) return failed("M_" + std::to_string(k));
    Rational a = a_tilde(k, one);
    if (!is_integer(a) || m != Rational(k) * a / 2) return failed("a_tilde_" + std::to_string(k));
  }
  if (rec[0] != 1 || rec[1] != 1 || rec[2] != 3 || rec[3] != 16) return failed("M_1..M_4");
  ZetaTable symbolic(FieldValue::symbolic_nu());
  for (long nu = 0; nu <= 10; ++nu) {
    for (unsigned n = 2; n <= 30; ++n) {
      Rational v = b_tilde(n, Rational(nu), symbolic);
      if (!is_integer(v) || v <= 0) {
        return failed("b_tilde(" + std::to_string(n) + ", " + std::to_string(nu) + ")");
      }
    }
  }
  return {true, "M_k, a_tilde_n for k, n <= 60; b_tilde_n(nu) for n <= 30, nu <= 10"};
}

Outcome c6() {
  const FieldValue nu = FieldValue::symbolic_nu();
  const auto b = b_via_series(nu, 8);
  for (unsigned n = 0; n <= 8; ++n) {
    auto v = binomial_type_check(nu, n, b);
    if (!v.normalized) return failed("normalized form, n = " + std::to_string(n));
    if (!v.cholewinski) return failed("Cholewinski form, n = " + std::to_string(n));
  }
  return {true, "normalized (C(2n,2k)) and Cholewinski-binomial forms, n <= 8, symbolic nu, "
                "grid {0..n}^2"};
}

Outcome c7() {
  const FieldValue zero(Rational(0));
  const auto alt = b_via_binomial_recurrence(zero, 2);
  for (unsigned n = 1; n <= 10; ++n) {
    if (walk_moment(n, 2) != Rational(n)) return failed("W_" + std::to_string(n) + "(2)");
    if (!(alt[1](zero.constant(n)) == FieldValue(Rational(n)))) return failed("binomial W(2)");
  }
  if (walk_moment(3, 4) != 15 || !(alt[2](zero.constant(3)) == FieldValue(Rational(15)))) {
    return failed("W_3(4)");
  }
  if (walk_moment(4, 4) != 28 || !(alt[2](zero.constant(4)) == FieldValue(Rational(28)))) {
    return failed("W_4(4)");
  }
  return {true, "W_n(2) = n (n <= 10), W_3(4) = 15, W_4(4) = 28"};
}

Outcome c8() {
  VerifyConfig clean;
  VerifyReport base = run_verify(clean);
  const CheckResult* bender = base.find("bpoly.bender_bdef");
  if (!bender || bender->status != CheckStatus::ExpectedDiscrepancy ||
      bender->discrepancy_id != kBenderBdef) {
    return failed("BENDER-BDEF entry missing");
  }
  const FieldValue nu(Rational(0));
  if (b_bender_as_printed(nu, 2, nu.zero()).is_zero()) return failed("as-printed value is 0");
  if (!base.ok()) return failed("clean run has failures: " + base.first_failure()->check_id);

  VerifyConfig mutated = clean;
  mutated.flip_zeta_sign = true;
  VerifyReport bad = run_verify(mutated);
  std::size_t flipped = 0;
  for (std::size_t i = 0; i < base.runs.size() && i < bad.runs.size(); ++i) {
    if (base.runs[i].status == CheckStatus::Pass && bad.runs[i].status == CheckStatus::Fail) {
      ++flipped;
    }
  }
  const CheckResult* zeta = nullptr;
  for (const auto& r : bad.runs) {
    if (r.check_id == "zeta.recurrence_vs_series" && r.status == CheckStatus::Fail) {
      zeta = &r;
      break;
    }
  }
  if (flipped == 0 || !zeta) return failed("mutation went unnoticed");
  return {true, "B_2(0) = 1/12 as printed at nu = 0, BENDER-BDEF recorded; zeta sign flip turns " +
                    std::to_string(flipped) + " passes into failures (" + zeta->detail + ")"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"C1", "first examples B_0..B_3", 1.0, c1},
      {"C2", "route equivalence", 120.0, c2},
      {"C3", "zeta consistency", 0.0, c3},
      {"C4", "Rayleigh integrality", 60.0, c4},
      {"C5", "integer sequences", 0.0, c5},
      {"C6", "binomial type", 0.0, c6},
      {"C7", "random-walk link", 0.0, c7},
      {"C8", "documented mismatch detection", 0.0, c8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = failed(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && c.budget_s > 0 && secs > c.budget_s) {
      o = failed("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s");
    }
    if (!o.ok) ++failures;
    std::printf("%s %s %s (%.3f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
