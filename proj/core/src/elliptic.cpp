#include "ellip/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ellip/errors.hpp"

namespace ellip {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxAgmSteps = 40;

bool agm_converged(double a, double b) {
  return std::abs(a - b) <= 4.0 * kEps * a;
}

void require_open_unit(double r, const char* what) {
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError(std::string(what) + " requires 0 < r < 1, got " +
                      std::to_string(r));
  }
}

}  // namespace

double agm(double a, double b) {
  if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("agm requires finite positive arguments");
  }
  for (int i = 0; i < kMaxAgmSteps && !agm_converged(a, b); ++i) {
    const double next_a = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next_a;
  }
  return 0.5 * (a + b);
}

// E = K (1 - sum_{n>=0} 2^{n-1} c_n^2) with c_0 = r and
// c_{n+1} = c_n^2 / (4 a_{n+1}), which avoids forming a_n - b_n.
EllipticValues complete_ke(const Modulus& m) {
  if (m.comp() == 0.0) {
    throw DivergenceError("K(r) diverges at r = 1");
  }
  double a = 1.0;
  double b = m.comp();
  double c = m.r();
  double weight = 0.5;
  double defect = weight * c * c;
  for (int i = 0; i < kMaxAgmSteps && !agm_converged(a, b); ++i) {
    const double next_a = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next_a;
    c = c * c / (4.0 * a);
    weight *= 2.0;
    defect += weight * c * c;
  }
  const double k = kHalfPi / a;
  return {k, k * (1.0 - defect)};
}

double complete_k(const Modulus& m) { return complete_ke(m).k_val; }

double complete_e(const Modulus& m) {
  if (m.comp() == 0.0) return 1.0;
  return complete_ke(m).e_val;
}

double ellipse_perimeter(double r) {
  require_open_unit(r, "ellipse_perimeter");
  return 4.0 * complete_e(Modulus::from_complement(r));
}

MeanPair::MeanPair(double a_, double b_) : a(a_), b(b_) {
  if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("mean arguments must be finite and positive");
  }
}

double toader_mean(const MeanPair& p) {
  if (p.a == p.b) return p.a;
  const double hi = std::max(p.a, p.b);
  const double lo = std::min(p.a, p.b);
  // Modulus sqrt(1 - (lo/hi)^2) has complement lo/hi.
  return 2.0 * hi * complete_e(Modulus::from_complement(lo / hi)) / kPi;
}

double DerivativeResiduals::max() const noexcept {
  return std::max({dk, de, d_e_minus_rc2k, d_k_minus_e});
}

DerivativeResiduals derivative_residuals(const Modulus& m, double h) {
  if (!(h > 0.0 && h <= 1e-3)) {
    throw DomainError("derivative step must lie in (0, 1e-3]");
  }
  const double r = m.r();
  if (!(r > h && r < 1.0 - h)) {
    throw DomainError("central-difference stencil leaves (0, 1) at r = " +
                      std::to_string(r));
  }
  const auto e_minus_rc2k = [](const Modulus& x, const EllipticValues& v) {
    return v.e_val - x.comp2() * v.k_val;
  };
  struct Slopes {
    double k, e, d, kme;
  };
  // Central differences at step s; combining s = h and s = h/2 cancels the
  // h^2 error term while the stencil stays inside [r - h, r + h].
  const auto slopes = [&](double s) {
    const Modulus lo(r - s);
    const Modulus hi(r + s);
    const auto below = complete_ke(lo);
    const auto above = complete_ke(hi);
    const double w = 2.0 * s;
    return Slopes{(above.k_val - below.k_val) / w,
                  (above.e_val - below.e_val) / w,
                  (e_minus_rc2k(hi, above) - e_minus_rc2k(lo, below)) / w,
                  ((above.k_val - above.e_val) - (below.k_val - below.e_val)) / w};
  };
  const Slopes coarse = slopes(h);
  const Slopes fine = slopes(0.5 * h);
  const auto extrap = [](double c, double f) { return (4.0 * f - c) / 3.0; };

  const auto at = complete_ke(m);
  const double k = at.k_val;
  const double e = at.e_val;
  const double rc2 = m.comp2();

  DerivativeResiduals out{};
  out.dk = std::abs(extrap(coarse.k, fine.k) - (e - rc2 * k) / (r * rc2));
  out.de = std::abs(extrap(coarse.e, fine.e) - (e - k) / r);
  out.d_e_minus_rc2k = std::abs(extrap(coarse.d, fine.d) - r * k);
  out.d_k_minus_e = std::abs(extrap(coarse.kme, fine.kme) - r * e / rc2);
  return out;
}

double landen_residual(const Modulus& m) {
  const double r = m.r();
  require_open_unit(r, "landen_residual");
  // The transformed modulus 2 sqrt(r)/(1+r) has complement (1-r)/(1+r);
  // building it from the complement keeps precision as r -> 1.
  const Modulus landen = Modulus::from_complement((1.0 - r) / (1.0 + r));
  const auto v = complete_ke(m);
  const double lhs = complete_e(landen);
  const double rhs = (2.0 * v.e_val - m.comp2() * v.k_val) / (1.0 + r);
  return std::abs(lhs - rhs);
}

}  // namespace ellip
