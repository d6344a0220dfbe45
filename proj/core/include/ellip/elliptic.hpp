#pragma once

#include <numbers>

#include "ellip/modulus.hpp"

namespace ellip {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// K(r) and E(r) from a single AGM run.
struct EllipticValues {
  double k_val;
  double e_val;
};

/// Arithmetic-geometric mean of two positive reals.
///
/// Iterates a <- (a + b) / 2, b <- sqrt(a b) until |a - b| <= 4 eps a
/// (capped at 40 steps). Throws DomainError for non-positive or non-finite
/// input.
[[nodiscard]] double agm(double a, double b);

/// K(r) = pi / (2 agm(1, r')). Throws DivergenceError when r' == 0.
[[nodiscard]] double complete_k(const Modulus& m);

/// E(r) from the AGM defect sequence; E(1) == 1 exactly.
[[nodiscard]] double complete_e(const Modulus& m);

/// Both integrals from one AGM run. Throws DivergenceError when r' == 0,
/// since K is infinite there.
[[nodiscard]] EllipticValues complete_ke(const Modulus& m);

/// Perimeter of the ellipse with semiaxes 1 and r, i.e. 4 E(sqrt(1 - r^2)).
/// Requires 0 < r < 1.
[[nodiscard]] double ellipse_perimeter(double r);

/// A pair of positive reals fed to a bivariate mean.
struct MeanPair {
  double a;
  double b;

  /// Throws DomainError unless a > 0 and b > 0.
  MeanPair(double a_, double b_);
};

/// Toader mean (2/pi) int_0^{pi/2} sqrt(a^2 cos^2 + b^2 sin^2).
[[nodiscard]] double toader_mean(const MeanPair& p);

/// |finite difference - closed form| for the four derivative identities.
struct DerivativeResiduals {
  double dk;               // dK/dr = (E - r'^2 K) / (r r'^2)
  double de;               // dE/dr = (E - K) / r
  double d_e_minus_rc2k;   // d(E - r'^2 K)/dr = r K
  double d_k_minus_e;      // d(K - E)/dr = r E / r'^2

  [[nodiscard]] double max() const noexcept;
};

/// Central differences at steps h and h/2 combined by one Richardson step
/// (error O(h^4)); requires h in (0, 1e-3] and h < r < 1 - h.
[[nodiscard]] DerivativeResiduals derivative_residuals(const Modulus& m,
                                                       double h);

/// |E(2 sqrt(r) / (1 + r)) - (2E - r'^2 K) / (1 + r)|, requires 0 < r < 1.
[[nodiscard]] double landen_residual(const Modulus& m);

}  // namespace ellip
