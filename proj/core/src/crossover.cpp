#include <algorithm>
#include <cmath>
#include <limits>

#include "ellip/elliptic.hpp"
#include "ellip/errors.hpp"
#include "ellip/grid.hpp"
#include "ellip/verify.hpp"

namespace ellip {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double noise(double a, double b) {
  return 16.0 * kEps * std::max(std::abs(a), std::abs(b));
}

// Signed amount by which `spec` fails the claimed side at r (> 0 is a failure).
double violation_at(const BoundSpec& spec, Side claimed, double r) {
  const Modulus m(r);
  const double gap = spec(m) - complete_e(m);
  return claimed == Side::Lower ? gap : -gap;
}

}  // namespace

CrossoverResult find_crossover(const BoundSpec& a, const BoundSpec& b,
                               std::size_t scan_points) {
  if (scan_points < 2) throw DomainError("crossover scan needs >= 2 points");
  const auto diff = [&](double r) {
    const Modulus m(r);
    const double va = a(m);
    const double vb = b(m);
    const double d = va - vb;
    return std::abs(d) <= noise(va, vb) ? 0.0 : d;
  };
  const auto closeness = [](const BoundSpec& s, double r) {
    const Modulus m(r);
    return std::abs(s(m) - complete_e(m));
  };

  const auto rs = uniform_grid(kSweepMargin, 1.0 - kSweepMargin, scan_points);
  // Walk from the right so the first sign change met is the largest root.
  double prev_r = rs.back();
  double prev_d = diff(prev_r);
  for (std::size_t k = rs.size() - 1; k-- > 0;) {
    const double d = diff(rs[k]);
    if (d == 0.0) continue;
    if (prev_d == 0.0) {
      prev_r = rs[k];
      prev_d = d;
      continue;
    }
    if ((d > 0.0) != (prev_d > 0.0)) {
      double lo = rs[k];
      double hi = prev_r;
      const bool lo_positive = d > 0.0;
      while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        const double dm = diff(mid);
        if (dm == 0.0) {
          lo = hi = mid;
          break;
        }
        ((dm > 0.0) == lo_positive ? lo : hi) = mid;
      }
      const double root = 0.5 * (lo + hi);
      const double probe = 0.5 * (root + 1.0);
      const BoundSpec& winner =
          closeness(a, probe) <= closeness(b, probe) ? a : b;
      return {.found = true, .delta = 1.0 - root, .root = root,
              .bound_a = a, .bound_b = b, .better_near_one = winner};
    }
    prev_r = rs[k];
    prev_d = d;
  }
  const double probe = rs[rs.size() / 2];
  const BoundSpec& winner = closeness(a, probe) <= closeness(b, probe) ? a : b;
  return {.found = false, .delta = 0.0, .root = 0.0,
          .bound_a = a, .bound_b = b, .better_near_one = winner};
}

FalsifierResult falsify(const BoundSpec& spec, Side claimed, std::size_t coarse,
                        double slack) {
  if (claimed == Side::Invalid) {
    throw ConfigurationError("falsify needs a claimed side");
  }
  if (coarse < 3) throw DomainError("falsifier needs >= 3 coarse points");
  const auto rs = uniform_grid(kSweepMargin, 1.0 - kSweepMargin, coarse);
  FalsifierResult res;
  std::size_t best = 0;
  double best_v = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const double v = violation_at(spec, claimed, rs[i]);
    ++res.evaluations;
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }

  double a = rs[best == 0 ? 0 : best - 1];
  double b = rs[std::min(best + 1, rs.size() - 1)];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = violation_at(spec, claimed, x1);
  double f2 = violation_at(spec, claimed, x2);
  res.evaluations += 2;
  while (b - a > 1e-12) {
    if (f1 > f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = violation_at(spec, claimed, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = violation_at(spec, claimed, x2);
    }
    ++res.evaluations;
  }
  double r = rs[best];
  double v = best_v;
  if (f1 > v) { r = x1; v = f1; }
  if (f2 > v) { r = x2; v = f2; }
  res.r = r;
  res.violation = v;
  res.found = v > slack;
  return res;
}

std::vector<ValidityReport> validity_sweep(std::span<const BoundSpec> specs,
                                           std::size_t grid) {
  if (grid < 2) throw DomainError("validity sweep needs >= 2 points");
  for (const auto& s : specs) {
    if (s.side() == Side::Invalid) {
      throw ValidationError("bound " + s.label() + " has no valid side");
    }
  }
  std::vector<ValidityReport> out;
  out.reserve(specs.size());
  for (const auto& s : specs) {
    out.push_back({.spec = s, .grid_size = grid, .violations = 0,
                   .worst_margin = std::numeric_limits<double>::infinity(),
                   .worst_r = 0.0});
  }
  for (double r : uniform_grid(kSweepMargin, 1.0 - kSweepMargin, grid)) {
    const Modulus m(r);
    const double e = complete_e(m);
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const double gap = specs[i](m) - e;
      const double margin = specs[i].side() == Side::Lower ? -gap : gap;
      auto& rep = out[i];
      if (margin < rep.worst_margin) {
        rep.worst_margin = margin;
        rep.worst_r = r;
      }
      if (margin < -kValiditySlack) ++rep.violations;
    }
  }
  return out;
}

}  // namespace ellip
