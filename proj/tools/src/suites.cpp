#include "suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <set>
#include <utility>

#include "ellip/bounds.hpp"
#include "ellip/constants.hpp"
#include "ellip/elliptic.hpp"
#include "ellip/errors.hpp"
#include "ellip/grid.hpp"
#include "ellip/lemmas.hpp"
#include "ellip/verify.hpp"
#include "format.hpp"

namespace ellip::cli {

namespace {

constexpr std::array<double, 5> kHPowers = {0.5, 0.75, 1.0, 1.5, 2.0};

std::string limit_text(const Limit& l) {
  return l.divergent ? "inf" : significant(l.value, 9);
}

std::string observed_text(double v) {
  return std::isinf(v) ? "inf" : significant(v, 9);
}

Check monotone_check(const MonotoneReport& rep) {
  std::string d = std::string(to_string(rep.direction)) +
                  ", worst=" + shortest(rep.worst_violation) +
                  ", violations=" + std::to_string(rep.violations) +
                  ", ties=" + std::to_string(rep.ties) +
                  ", out-of-range=" + std::to_string(rep.range_violations) +
                  ", tol=" + shortest(kMonotoneTol) +
                  "; left " + observed_text(rep.left_limit) + " (want " +
                  limit_text(rep.expected_left) + " +- " +
                  shortest(rep.left_tol) + "), right " +
                  observed_text(rep.right_limit) + " (want " +
                  limit_text(rep.expected_right) + " +- " +
                  shortest(rep.right_tol) + "), grid=" +
                  std::to_string(rep.grid_size);
  return {rep.name, rep.passed(), std::move(d)};
}

Check lemma25_line() {
  std::size_t bad = 0;
  double min_margin = INFINITY;
  for (double p : uniform_grid(0.5, 2.0, 100)) {
    const auto m = lemma25_check(p);
    min_margin = std::min({min_margin, m.lower, m.upper});
    if (!(m.lower > 0.0 && m.upper > 0.0)) ++bad;
  }
  const double f1 = lemma25_f1(2.0);
  const double f2 = lemma25_f2(2.0);
  const bool consts = std::abs(f1 - 81.0 / 64.0) < 1e-15 &&
                      std::abs(f2 - 64.0 / 49.0) < 1e-15 &&
                      f1 < 4.0 / kPi && 4.0 / kPi < f2;
  return {"lemma25", bad == 0 && consts,
          "margins positive on 100 p in [1/2, 2] (min " +
              significant(min_margin, 6) + ", failures " +
              std::to_string(bad) + "); f1(2)=" + fixed(f1, 6) +
              " f2(2)=" + fixed(f2, 6) + " bracket 4/pi=" + fixed(4 / kPi, 6)};
}

Check lemma26_line(std::size_t grid) {
  std::size_t mismatches = 0;
  std::set<int> cases;
  std::string first_bad;
  const auto sample = lemma26_sample();
  for (const auto& s : sample) {
    cases.insert(lemma26_proof_case(s.u, s.p));
    const SignCase want = lemma26_expected(s.u, s.p);
    try {
      const auto got = lemma26_classify(s.u, s.p, std::max<std::size_t>(grid, 100));
      if (got.case_id != want) {
        ++mismatches;
        if (first_bad.empty()) {
          first_bad = "; first mismatch u=" + shortest(s.u) + " p=" +
                      shortest(s.p) + " got " + to_string(got.case_id);
        }
      }
    } catch (const VerificationFailure& e) {
      ++mismatches;
      if (first_bad.empty()) first_bad = std::string("; ") + e.what();
    }
  }
  return {"lemma26", mismatches == 0 && cases.size() == 4,
          std::to_string(sample.size()) + " (u, p) pairs, " +
              std::to_string(mismatches) + " mismatches, proof cases covered " +
              std::to_string(cases.size()) + "/4" + first_bad};
}

Check validity_line(const ValidityReport& v) {
  return {"valid " + v.spec.label(), v.passed(),
          std::string(to_string(v.spec.side())) + " bound, violations=" +
              std::to_string(v.violations) + ", worst margin " +
              shortest(v.worst_margin) + " at r=" + shortest(v.worst_r) +
              ", slack=" + shortest(kValiditySlack) + ", grid=" +
              std::to_string(v.grid_size)};
}

Check falsifier_line(const std::string& what, const BoundSpec& spec, Side side) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = falsify(spec, side);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {"sharp " + what, res.found && secs < 1.0,
          spec.label() + " as " + to_string(side) + " bound fails at r=" +
              shortest(res.r) + " by " + shortest(res.violation) + " (" +
              std::to_string(res.evaluations) + " evaluations, " +
              significant(secs, 3) + " s)"};
}

Check crossover_line(const std::string& name, const BoundSpec& a,
                     const BoundSpec& b) {
  const auto coarse = find_crossover(a, b, 1000);
  const auto fine = find_crossover(a, b, 10000);
  const double shift = std::abs(coarse.delta - fine.delta);
  const bool ok = coarse.found && fine.found && shift < 1e-10 &&
                  coarse.better_near_one == a;
  return {name, ok,
          a.label() + " vs " + b.label() + ": delta=" + shortest(coarse.delta) +
              ", shift under 10x scan " + shortest(shift) +
              ", better near 1: " + coarse.better_near_one.label()};
}

Check limit_line(const std::string& name, double got, double want, double tol) {
  return {name, std::abs(got - want) <= tol,
          "r -> 1 value " + fixed(got, 9) + ", want " + fixed(want, 9) +
              " within " + shortest(tol)};
}

}  // namespace

std::vector<SignSample> lemma26_sample() {
  std::vector<SignSample> out;
  constexpr std::size_t kPerP = 20;
  for (double p : kHPowers) {
    const double a = 1.0 / (4.0 * p);
    const double t = std::pow(4.0 / kPi, 1.0 / p) - 1.0;
    const double b = std::min(1.0, 1.0 / (4.0 * p - 1.0));
    const std::array<std::pair<double, double>, 4> regions = {
        {{0.0, a}, {a, t}, {t, b}, {b, 1.0}}};
    std::size_t degenerate = 0;
    for (const auto& [lo, hi] : regions) degenerate += hi - lo < 1e-12;
    const std::size_t open = regions.size() - degenerate;
    std::size_t extra = kPerP - degenerate - open * ((kPerP - degenerate) / open);
    for (const auto& [lo, hi] : regions) {
      if (hi - lo < 1e-12) {
        out.push_back({lo, p});
        continue;
      }
      std::size_t n = (kPerP - degenerate) / open;
      if (extra > 0) {
        ++n;
        --extra;
      }
      for (std::size_t i = 1; i <= n; ++i) {
        const double frac = static_cast<double>(i) / static_cast<double>(n + 1);
        out.push_back({lo + frac * (hi - lo), p});
      }
    }
  }
  return out;
}

std::vector<Check> lemmas_suite(std::size_t grid) {
  std::vector<Check> out;
  for (int idx = 1; idx <= 7; ++idx) {
    out.push_back(monotone_check(sweep_monotone("lemma22." + std::to_string(idx), grid)));
  }
  out.push_back(monotone_check(sweep_monotone("lemma23.g", grid)));
  for (double p : kHPowers) {
    out.push_back(monotone_check(sweep_monotone("lemma24.h", grid, LemmaParams{0.0, p})));
  }
  out.push_back(lemma25_line());
  out.push_back(lemma26_line(grid));
  out.push_back(monotone_check(sweep_monotone("lemma27.F", grid)));
  return out;
}

std::vector<Check> sharpness_suite(std::size_t grid) {
  std::vector<Check> out;
  const auto families = sharp_families();
  for (const auto& v : validity_sweep(families, grid)) out.push_back(validity_line(v));

  const auto& sc = sharp_constants();
  out.push_back(falsifier_line("thm11 beta_star+1e-3",
                               BoundSpec::thm11(sc.beta_star + 1e-3), Side::Lower));
  out.push_back(falsifier_line("thm11 alpha_star-1e-3",
                               BoundSpec::thm11(sc.alpha_star - 1e-3), Side::Upper));
  for (double p : {0.5, 1.0, 2.0}) {
    const std::string tag = "p=" + shortest(p);
    out.push_back(falsifier_line("thm12 lower " + tag + " t+1e-3",
                                 BoundSpec::thm12(thm12_lower_threshold(p) + 1e-3, p),
                                 Side::Lower));
    out.push_back(falsifier_line("thm12 upper " + tag + " t-1e-3",
                                 BoundSpec::thm12(thm12_upper_threshold(p) - 1e-3, p),
                                 Side::Upper));
  }

  // Past p = 2 the decreasing claim for h must break somewhere.
  const auto h = sweep_monotone("lemma24.h", grid, LemmaParams{0.0, 2.5});
  out.push_back({"sharp lemma24 p=2.5", h.violations > 0,
                 "h not decreasing: " + std::to_string(h.violations) +
                     " rising steps, largest " + shortest(h.worst_violation)});
  return out;
}

std::vector<Check> remarks_suite(std::size_t grid) {
  std::vector<Check> out;
  const double gap41 = remark41_max_gap(grid);
  out.push_back({"remark41", gap41 < 1e-15,
                 "max |alzer-qiu - thm11(alpha_star)| = " + shortest(gap41) +
                     " (tol 1e-15)"});
  const double res42 = remark42_max_residual(grid);
  out.push_back({"remark42", res42 < 1e-14,
                 "max identity residual = " + shortest(res42) + " (tol 1e-14)"});

  const auto dom = remark45_dominance(grid);
  out.push_back({"remark45 dominance", dom.passed(),
                 "cor31-lower > vuorinen: " + std::to_string(dom.certified) + "/" +
                     std::to_string(dom.grid_size) + " exact, " +
                     std::to_string(dom.resolved) + " resolved in double (min " +
                     shortest(dom.min_resolved_margin) + "), failures " +
                     std::to_string(dom.failures)});

  const auto& sc = sharp_constants();
  out.push_back(crossover_line("remark43 crossover", BoundSpec::cor31_upper(),
                               BoundSpec::alzer_qiu_upper()));
  out.push_back(crossover_line("remark44 crossover", BoundSpec::thm11(sc.beta_star),
                               BoundSpec::vuorinen_lower()));
  const auto none = find_crossover(BoundSpec::cor31_lower(), BoundSpec::vuorinen_lower());
  out.push_back({"remark45 no crossover",
                 !none.found && none.better_near_one == BoundSpec::cor31_lower(),
                 std::string(none.found ? "crossover at delta=" + shortest(none.delta)
                                        : "NO-CROSSOVER") +
                     ", better: " + none.better_near_one.label()});

  const auto near_one = Modulus::from_complement(1e-12);
  out.push_back(limit_line("limit alzer-qiu", alzer_qiu_upper(near_one),
                           (kPi / 8.0) * (std::sqrt(2.0 + std::sqrt(2.0)) +
                                          std::sqrt(2.0 - std::sqrt(2.0))),
                           5e-7));
  out.push_back(limit_line("limit vuorinen", vuorinen_lower(near_one),
                           std::pow(2.0, -5.0 / 3.0) * kPi, 5e-7));
  out.push_back(limit_line("limit cor31-upper", corollary31(near_one).hi, 1.0, 5e-7));
  out.push_back(limit_line("limit thm11 beta_star",
                           thm11_bound(near_one, sc.beta_star), 1.0, 5e-7));

  double landen = 0.0;
  for (double r : uniform_grid(kSweepMargin, 1.0 - kSweepMargin, grid)) {
    landen = std::max(landen, landen_residual(Modulus(r)));
  }
  out.push_back({"identity landen", landen < 1e-12,
                 "max residual " + shortest(landen) + " (tol 1e-12)"});
  double deriv = 0.0;
  for (double r : uniform_grid(0.01, 0.99, std::min<std::size_t>(grid, 1000))) {
    deriv = std::max(deriv, derivative_residuals(Modulus(r), 1e-5).max());
  }
  out.push_back({"identity derivatives", deriv < 1e-8,
                 "max residual on [0.01, 0.99] with h=1e-5: " + shortest(deriv) +
                     " (tol 1e-8)"});
  return out;
}

std::vector<Check> run_suite(std::string_view name, std::size_t grid) {
  if (name == "lemmas") return lemmas_suite(grid);
  if (name == "sharpness") return sharpness_suite(grid);
  if (name == "remarks") return remarks_suite(grid);
  if (name == "all") {
    auto out = lemmas_suite(grid);
    for (auto&& c : sharpness_suite(grid)) out.push_back(std::move(c));
    for (auto&& c : remarks_suite(grid)) out.push_back(std::move(c));
    return out;
  }
  throw ConfigurationError("unknown suite '" + std::string(name) +
                           "' (expected lemmas, sharpness, remarks or all)");
}

}  // namespace ellip::cli
