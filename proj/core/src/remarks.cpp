#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "ellip/bounds.hpp"
#include "ellip/constants.hpp"
#include "ellip/errors.hpp"
#include "ellip/grid.hpp"
#include "ellip/verify.hpp"

namespace ellip {

namespace mp = boost::multiprecision;

double remark41_max_gap(std::size_t grid) {
  const double q = sharp_constants().alpha_star;
  double worst = 0.0;
  for (double r : uniform_grid(kSweepMargin, 1.0 - kSweepMargin, grid)) {
    const Modulus m(r);
    worst = std::max(worst, std::abs(alzer_qiu_upper(m) - thm11_bound(m, q)));
  }
  return worst;
}

double remark42_max_residual(std::size_t grid) {
  const double mu = sharp_constants().mu_star;
  const double c = 1.0 - 8.0 / (kPi * kPi);
  double worst = 0.0;
  for (double x : uniform_grid(kSweepMargin, 1.0 - kSweepMargin, grid)) {
    const double u = mu + (1.0 - mu) * x;
    const double v = (1.0 - mu) + mu * x;
    const double lhs = (1.0 + x * x) - (u * u + v * v);
    worst = std::max(worst, std::abs(lhs - c * (1.0 - x) * (1.0 - x)));
  }
  return worst;
}

bool remark45_polynomial_positive(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("polynomial test needs 0 < x < 1");
  }
  // x = n / 2^s exactly; scale every factor by 2^(24 s).
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  const auto n_bits = static_cast<long long>(std::ldexp(mant, 53));
  const int s = 53 - exp;
  const mp::cpp_int n = n_bits;
  const mp::cpp_int d = mp::cpp_int(1) << s;
  const mp::cpp_int n2 = n * n;
  const mp::cpp_int d2 = d * d;
  const mp::cpp_int a = 9 * d2 * d2 + 14 * n2 * d2 + 9 * n2 * n2;
  const mp::cpp_int b = d2 + n2;
  const mp::cpp_int c = d2 * d + n2 * n;
  const mp::cpp_int lhs = mp::pow(a, 6);
  const mp::cpp_int rhs = 524288 * mp::pow(b, 9) * c * c;
  return lhs > rhs;
}

DominanceReport remark45_dominance(std::size_t grid) {
  DominanceReport rep;
  rep.grid_size = grid;
  rep.min_resolved_margin = std::numeric_limits<double>::infinity();
  const auto lower = BoundSpec::cor31_lower();
  for (double r : uniform_grid(kSweepMargin, 1.0 - kSweepMargin, grid)) {
    const Modulus m(r);
    const double a = lower(m);
    const double b = vuorinen_lower(m);
    const double diff = a - b;
    const double noise =
        16.0 * std::numeric_limits<double>::epsilon() * std::max(a, b);
    bool bad = false;
    if (std::abs(diff) > noise) {
      ++rep.resolved;
      rep.min_resolved_margin = std::min(rep.min_resolved_margin, diff);
      bad = diff < 0.0;
    }
    if (remark45_polynomial_positive(std::sqrt(m.comp()))) {
      ++rep.certified;
    } else {
      bad = true;
    }
    if (bad) ++rep.failures;
  }
  return rep;
}

}  // namespace ellip
