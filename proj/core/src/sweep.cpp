#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "ellip/elliptic.hpp"
#include "ellip/errors.hpp"
#include "ellip/grid.hpp"
#include "ellip/lemmas.hpp"
#include "ellip/verify.hpp"

namespace ellip {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Value at x = 0 of the parabola through three points.
double extrapolate_to_zero(const std::array<double, 3>& x,
                           const std::array<double, 3>& y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    double w = 1.0;
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != i) w *= x[j] / (x[j] - x[i]);
    }
    acc += w * y[i];
  }
  return acc;
}

double extrapolate_right(const LemmaFunction& fn) {
  std::array<double, 3> s{};
  std::array<double, 3> y{};
  const std::array<double, 3> comps = {1e-8, 1e-10, 1e-12};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto m = Modulus::from_complement(comps[i]);
    s[i] = 1.0 / complete_k(m);
    y[i] = fn.eval(m);
  }
  return extrapolate_to_zero(s, y);
}

bool grows_without_bound(const LemmaFunction& fn) {
  const std::array<double, 3> comps = {1e-16, 1e-32, 1e-64};
  std::array<double, 3> y{};
  for (std::size_t i = 0; i < 3; ++i) {
    y[i] = fn.eval(Modulus::from_complement(comps[i]));
  }
  return y[0] > 0.0 && y[1] >= 1.5 * y[0] && y[2] >= 1.5 * y[1];
}

bool limit_ok(const Limit& want, double got, double tol) {
  if (want.divergent) return std::isinf(got) && got > 0.0;
  return std::abs(got - want.value) <= tol;
}

}  // namespace

const char* to_string(Direction d) noexcept {
  return d == Direction::Increasing ? "increasing" : "decreasing";
}

const char* to_string(SignCase c) noexcept {
  switch (c) {
    case SignCase::AllNegative: return "all-negative";
    case SignCase::AllPositive: return "all-positive";
    case SignCase::PositiveThenNegative: return "positive-then-negative";
  }
  return "?";
}

bool MonotoneReport::left_ok() const noexcept {
  return limit_ok(expected_left, left_limit, left_tol);
}

bool MonotoneReport::right_ok() const noexcept {
  return limit_ok(expected_right, right_limit, right_tol);
}

std::vector<std::string> lemma_function_ids() {
  return {"lemma22.1", "lemma22.2", "lemma22.3", "lemma22.4", "lemma22.5",
          "lemma22.6", "lemma22.7", "lemma23.g", "lemma24.h", "lemma27.F"};
}

LemmaFunction lemma_function(std::string_view id,
                             std::optional<LemmaParams> params) {
  using D = Direction;
  const double pi2 = kPi * kPi;
  const auto part = [](int idx) {
    return [idx](const Modulus& m) { return lemma22_function(idx, m); };
  };
  const std::string name(id);
  if (id == "lemma22.1") {
    return {name, D::Increasing, Limit::finite(kPi / 4), Limit::finite(1.0),
            1e-3, 1e-3, part(1)};
  }
  const auto shifted = [](int idx) {
    return [idx](const Modulus& m) { return lemma22_shifted(idx, m); };
  };
  if (id == "lemma22.2") {
    return {name, D::Increasing, Limit::finite(kHalfPi), Limit::infinite(),
            1e-3, 1e-3, part(2), shifted(2)};
  }
  if (id == "lemma22.3") {
    return {name, D::Increasing, Limit::finite(0.5), Limit::finite(1.0),
            1e-3, 1e-3, part(3)};
  }
  if (id == "lemma22.4") {
    return {name, D::Decreasing, Limit::finite(0.5), Limit::finite(0.0),
            1e-3, 1e-3, part(4)};
  }
  if (id == "lemma22.5") {
    return {name, D::Decreasing, Limit::finite(kPi / 4), Limit::finite(0.0),
            1e-2, 1e-2, part(5), shifted(5)};
  }
  if (id == "lemma22.6") {
    return {name, D::Decreasing, Limit::finite(2.0), Limit::finite(1.0),
            1e-3, 1e-3, part(6)};
  }
  if (id == "lemma22.7") {
    return {name, D::Increasing, Limit::finite(pi2 / 2), Limit::finite(16 - pi2),
            1e-3, 1e-3, part(7)};
  }
  if (id == "lemma23.g") {
    return {name, D::Increasing, Limit::finite(1.5), Limit::infinite(),
            1e-2, 1e-3, [](const Modulus& m) { return lemma23_g(m); }};
  }
  if (id == "lemma24.h") {
    const double p = params ? params->p : 1.0;
    if (!(p >= 0.5)) throw DomainError("lemma24.h requires p >= 1/2");
    return {name + "(p=" + std::to_string(p).substr(0, 4) + ")", D::Decreasing,
            Limit::finite(4 * p), Limit::finite(4 * p - 1), 1e-3, 1e-3,
            [p](const Modulus& m) { return lemma24_h(m, p); }};
  }
  if (id == "lemma27.F") {
    return {name, D::Increasing, Limit::finite(pi2 / 8),
            Limit::finite(8 * (pi2 - 8) / pi2), 1e-3, 1e-3,
            [](const Modulus& m) { return lemma27_F(m); }};
  }
  throw ConfigurationError("unknown lemma function '" + name + "'");
}

MonotoneReport sweep_monotone(const LemmaFunction& fn, std::size_t grid) {
  if (grid < 1000) throw DomainError("monotonicity sweeps need grid >= 1000");
  const auto rs = uniform_grid(kSweepMargin, 1.0 - kSweepMargin, grid);
  std::vector<double> values(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) values[i] = fn.eval(Modulus(rs[i]));

  MonotoneReport rep{};
  rep.name = fn.name;
  rep.direction = fn.direction;
  rep.expected_left = fn.left;
  rep.expected_right = fn.right;
  rep.left_tol = fn.left_tol;
  rep.right_tol = fn.right_tol;
  rep.grid_size = grid;

  std::vector<double> steps_of = values;
  if (fn.shifted) {
    for (std::size_t i = 0; i < rs.size(); ++i) {
      steps_of[i] = fn.shifted(Modulus(rs[i]));
    }
  }
  const double sign = fn.direction == Direction::Increasing ? 1.0 : -1.0;
  for (std::size_t i = 0; i + 1 < steps_of.size(); ++i) {
    const double step = sign * (steps_of[i + 1] - steps_of[i]);
    if (step == 0.0) {
      ++rep.ties;
    } else if (step < -kMonotoneTol) {
      ++rep.violations;
      rep.worst_violation = std::max(rep.worst_violation, -step);
    }
  }

  const double a = fn.left.divergent ? kInf : fn.left.value;
  const double b = fn.right.divergent ? kInf : fn.right.value;
  const double lo = std::min(a, b) - kMonotoneTol;
  const double hi = std::max(a, b) + kMonotoneTol;
  for (double v : values) {
    if (!(v > lo && v < hi)) ++rep.range_violations;
  }

  std::array<double, 3> m{};
  std::array<double, 3> y{};
  for (std::size_t i = 0; i < 3; ++i) {
    m[i] = rs[i] * rs[i];
    y[i] = values[i];
  }
  rep.left_limit = extrapolate_to_zero(m, y);

  if (fn.right.divergent) {
    rep.right_limit = grows_without_bound(fn)
                          ? kInf
                          : fn.eval(Modulus::from_complement(1e-64));
  } else {
    rep.right_limit = extrapolate_right(fn);
  }
  return rep;
}

MonotoneReport sweep_monotone(std::string_view id, std::size_t grid,
                              std::optional<LemmaParams> params) {
  return sweep_monotone(lemma_function(id, params), grid);
}

// --- sign of the log-difference function f(u, p) ---------------------------

SignCase lemma26_expected(double u, double p) {
  if (u <= 1.0 / (4.0 * p)) return SignCase::AllNegative;
  if (u >= std::pow(4.0 / kPi, 1.0 / p) - 1.0) return SignCase::AllPositive;
  return SignCase::PositiveThenNegative;
}

int lemma26_proof_case(double u, double p) {
  if (u <= 1.0 / (4.0 * p)) return 1;
  if (u >= 1.0 / (4.0 * p - 1.0)) return 2;
  if (u > std::pow(4.0 / kPi, 1.0 / p) - 1.0) return 3;
  return 4;
}

SignCaseReport lemma26_classify(double u, double p, std::size_t grid) {
  if (grid < 100) throw DomainError("lemma26_classify needs grid >= 100");
  const auto rs = uniform_grid(kSweepMargin, 1.0 - kSweepMargin, grid);
  const auto f = [u, p](double r) { return lemma26_f(Modulus(r), u, p); };

  // Collapse the sampled signs into runs, skipping exact zeros.
  std::vector<int> runs;
  std::size_t last_pos = 0;
  std::size_t first_neg_after_pos = 0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const double v = f(rs[i]);
    if (v == 0.0) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (runs.empty() || runs.back() != s) {
      runs.push_back(s);
      if (s < 0 && runs.size() == 2) first_neg_after_pos = i;
    }
    if (s > 0) last_pos = i;
  }

  SignCaseReport rep{u, p, SignCase::AllNegative, std::nullopt, grid};
  const auto describe = [&] {
    return "f_{u,p} with u = " + std::to_string(u) + ", p = " +
           std::to_string(p);
  };
  if (runs.empty()) {
    throw VerificationFailure(describe() + " vanished on the whole grid");
  }
  if (runs.size() == 1) {
    rep.case_id = runs[0] > 0 ? SignCase::AllPositive : SignCase::AllNegative;
    return rep;
  }
  if (runs.size() > 2 || runs[0] < 0) {
    throw VerificationFailure(describe() + " has sign pattern with " +
                              std::to_string(runs.size() - 1) +
                              " change(s) starting " +
                              (runs[0] < 0 ? "negative" : "positive"));
  }
  double lo = rs[last_pos];
  double hi = rs[first_neg_after_pos];
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  rep.case_id = SignCase::PositiveThenNegative;
  rep.eta = 0.5 * (lo + hi);
  return rep;
}

}  // namespace ellip
