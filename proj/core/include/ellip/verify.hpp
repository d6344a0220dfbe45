#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ellip/bounds.hpp"
#include "ellip/modulus.hpp"

namespace ellip {

enum class Direction { Increasing, Decreasing };

[[nodiscard]] const char* to_string(Direction d) noexcept;

/// Claimed limit of a lemma function at an endpoint of (0, 1).
struct Limit {
  double value = 0.0;
  bool divergent = false;  // +infinity

  static Limit finite(double v) { return {v, false}; }
  static Limit infinite() { return {0.0, true}; }
};

/// A lemma function together with what the lemma claims about it.
struct LemmaFunction {
  std::string name;
  Direction direction;
  Limit left;   // r -> 0+
  Limit right;  // r -> 1-
  double left_tol = 1e-3;
  double right_tol = 1e-3;
  std::function<double(const Modulus&)> eval;
  /// Optional eval minus a constant, computed without cancellation. When
  /// set, the monotonicity steps compare these values instead.
  std::function<double(const Modulus&)> shifted = {};
};

/// Optional parameters of a lemma function (only `p` is used, by lemma24.h).
struct LemmaParams {
  double u = 0.0;
  double p = 1.0;
};

/// Looks up a lemma function by identifier: lemma22.1 .. lemma22.7,
/// lemma23.g, lemma24.h (uses params.p, default 1), lemma27.F.
/// Throws ConfigurationError for an unknown identifier.
[[nodiscard]] LemmaFunction lemma_function(std::string_view id,
                                           std::optional<LemmaParams> params = {});

/// Identifiers accepted by lemma_function, in report order.
[[nodiscard]] std::vector<std::string> lemma_function_ids();

/// Tolerance on consecutive differences when testing monotonicity.
inline constexpr double kMonotoneTol = 1e-12;

/// Result of sweeping one lemma function across a uniform grid.
struct MonotoneReport {
  std::string name;
  Direction direction;
  double left_limit;   // extrapolated r -> 0+
  double right_limit;  // extrapolated r -> 1-, +inf when growth is unbounded
  Limit expected_left;
  Limit expected_right;
  double left_tol;
  double right_tol;
  double worst_violation = 0.0;    // largest step against the claimed direction
  std::size_t violations = 0;      // steps against the direction beyond tol
  std::size_t ties = 0;            // steps with exactly zero change
  std::size_t range_violations = 0;  // samples outside the claimed range
  std::size_t grid_size = 0;

  [[nodiscard]] bool monotone() const noexcept {
    return violations == 0 && ties == 0;
  }
  [[nodiscard]] bool left_ok() const noexcept;
  [[nodiscard]] bool right_ok() const noexcept;
  [[nodiscard]] bool passed() const noexcept {
    return monotone() && range_violations == 0 && left_ok() && right_ok();
  }
};

/// Evaluates `fn` on `grid` points spaced uniformly in (1e-6, 1 - 1e-6) and
/// checks the claimed direction, range and endpoint limits.
///
/// The left limit is a quadratic (Richardson) extrapolation in r^2 from the
/// three grid points nearest 0. The right limit cannot be reached that way:
/// near r = 1 these functions depend on log(1/r'), so the extrapolation uses
/// an approach sequence r' = 1e-8, 1e-10, 1e-12 with abscissa 1/K(r). A
/// claimed infinite limit is confirmed when each doubling of the decade
/// depth (r' = 1e-16, 1e-32, 1e-64) multiplies the value by at least 1.5,
/// which holds for logarithmic and power-law growth alike.
///
/// Throws DomainError when grid < 1000.
[[nodiscard]] MonotoneReport sweep_monotone(const LemmaFunction& fn,
                                            std::size_t grid);
[[nodiscard]] MonotoneReport sweep_monotone(std::string_view id,
                                            std::size_t grid,
                                            std::optional<LemmaParams> params = {});

// --- sign structure of f_{u,p} --------------------------------------------

enum class SignCase { AllNegative, AllPositive, PositiveThenNegative };

[[nodiscard]] const char* to_string(SignCase c) noexcept;

struct SignCaseReport {
  double u;
  double p;
  SignCase case_id;
  std::optional<double> eta;  // sign-change radius, mixed case only
  std::size_t grid_size;
};

/// Samples lemma26_f on `grid` uniform points in (1e-6, 1 - 1e-6) and
/// classifies the sign pattern; eta is refined by bisection to 1e-10.
/// Throws VerificationFailure for any other pattern (a second sign change,
/// negative-then-positive) and DomainError when grid < 100.
[[nodiscard]] SignCaseReport lemma26_classify(double u, double p,
                                              std::size_t grid);

/// Pattern predicted from the thresholds 1/(4p) and (4/pi)^{1/p} - 1.
[[nodiscard]] SignCase lemma26_expected(double u, double p);

/// Which of the four proof cases (u, p) falls in:
/// 1: u <= 1/(4p); 2: u >= 1/(4p-1); 3: (4/pi)^{1/p}-1 < u < 1/(4p-1);
/// 4: 1/(4p) < u < (4/pi)^{1/p}-1.
[[nodiscard]] int lemma26_proof_case(double u, double p);

// --- bound comparisons ------------------------------------------------------

struct CrossoverResult {
  bool found = false;
  double delta = 0.0;  // 1 - root
  double root = 0.0;
  BoundSpec bound_a;
  BoundSpec bound_b;
  /// The bound closer to E on (root, 1); when no crossover exists, the bound
  /// that is closer everywhere.
  BoundSpec better_near_one;
};

/// Largest root of a(r) - b(r) on (0, 1): sign scan over `scan_points`
/// uniform points, then bisection to a bracket of 1e-13. Samples whose
/// difference is within rounding noise of zero are ignored by the scan.
[[nodiscard]] CrossoverResult find_crossover(const BoundSpec& a,
                                             const BoundSpec& b,
                                             std::size_t scan_points = 1000);

struct FalsifierResult {
  bool found = false;
  double r = 0.0;
  double violation = 0.0;  // > 0 means the claimed inequality fails at r
  std::size_t evaluations = 0;
};

/// Searches for r where `spec` fails as a bound on the `claimed` side: a
/// coarse uniform grid followed by golden-section refinement of the largest
/// violation. A violation must exceed `slack` to count.
[[nodiscard]] FalsifierResult falsify(const BoundSpec& spec, Side claimed,
                                      std::size_t coarse = 1000,
                                      double slack = 1e-13);

/// Slack used when comparing a bound with the reference value.
inline constexpr double kValiditySlack = 1e-13;

struct ValidityReport {
  BoundSpec spec;
  std::size_t grid_size = 0;
  std::size_t violations = 0;
  double worst_margin = 0.0;  // min over grid of the signed gap to E
  double worst_r = 0.0;

  [[nodiscard]] bool passed() const noexcept { return violations == 0; }
};

/// Checks each spec on its own side at `grid` uniform points in
/// (1e-6, 1 - 1e-6); E is evaluated once per point.
[[nodiscard]] std::vector<ValidityReport> validity_sweep(
    std::span<const BoundSpec> specs, std::size_t grid);

// --- closed-form identities and dominance checks ---------------------------

/// max |alzer_qiu_upper - thm11_bound(alpha_star)| on the sweep grid.
[[nodiscard]] double remark41_max_gap(std::size_t grid);

/// max over x in (0, 1) of the residual of
/// (1 + x^2) - {[mu + (1-mu)x]^2 + [(1-mu) + mu x]^2} = (1 - 8/pi^2)(1 - x)^2.
[[nodiscard]] double remark42_max_residual(std::size_t grid);

struct DominanceReport {
  std::size_t grid_size = 0;
  std::size_t resolved = 0;   // points where the double difference exceeds noise
  std::size_t certified = 0;  // points where the exact polynomial sign is positive
  std::size_t failures = 0;   // resolved-negative or exact-nonpositive points
  double min_resolved_margin = 0.0;

  [[nodiscard]] bool passed() const noexcept {
    return failures == 0 && certified == grid_size;
  }
};

/// The cor31 lower bound versus the Vuorinen bound on the sweep grid.
///
/// Near r = 0 the two agree to O(r^8), below double resolution, so each
/// point is checked twice: the double-precision difference must never be
/// negative beyond rounding noise, and the equivalent polynomial inequality
/// (9 + 14x^2 + 9x^4)^6 > 524288 (1 + x^2)^9 (1 + x^3)^2 at x = r'^{1/2} is
/// evaluated in exact integer arithmetic.
[[nodiscard]] DominanceReport remark45_dominance(std::size_t grid);

/// Exact sign test of the polynomial inequality above at a double x.
[[nodiscard]] bool remark45_polynomial_positive(double x);

}  // namespace ellip
