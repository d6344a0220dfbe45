#pragma once

#include "ellip/modulus.hpp"

namespace ellip {

/// Building blocks of the monotone-function lemmas, each scaled so that it
/// has a finite nonzero limit at r = 0. With m = r^2, D = E - r'^2 K:
///
///   d_over_m       D / m
///   kme_over_m     (K - E) / m
///   delta_over_m2  ((K - E) - D) / m^2
///   excess_over_m  (2E - r'^2 K - pi/2) / m
///   ediff_over_m2  (E^2 - r'^2 K^2) / m^2
///
/// Each numerator loses its leading Taylor terms to cancellation, so for
/// r < kSeriesSwitch they are summed from their Maclaurin series in m,
/// whose coefficients are formed with the cancelling terms removed exactly.
/// Above the switch the direct expressions lose at most a few digits.
struct LemmaTerms {
  double m;
  double k;
  double e;
  double d_over_m;
  double kme_over_m;
  double delta_over_m2;
  double excess_over_m;
  double ediff_over_m2;
};

inline constexpr double kSeriesSwitch = 0.7;

/// Requires 0 < r < 1 (a from_complement modulus with r rounding to 1 is
/// accepted as long as r' > 0).
[[nodiscard]] LemmaTerms lemma_terms(const Modulus& m);

/// Same quantities from the truncated series alone; exposed for tests.
[[nodiscard]] LemmaTerms lemma_terms_series(const Modulus& m);
/// Same quantities from the direct K, E expressions alone.
[[nodiscard]] LemmaTerms lemma_terms_direct(const Modulus& m);

/// The seven functions of the first monotonicity lemma, idx in 1..7:
///   1 (E - r'^2 K)/r^2            increasing onto (pi/4, 1)
///   2 E / r'^{1/2}                increasing onto (pi/2, inf)
///   3 (K - E)/(r^2 K)             increasing onto (1/2, 1)
///   4 (E - r'^2 K)/(r^2 K)        decreasing onto (0, 1/2)
///   5 r'^{3/4} (K - E)/r^2        decreasing onto (0, pi/4)
///   6 (E - r'^2 K)^2/(E^2 - r'^2 K^2)   decreasing onto (1, 2)
///   7 [4 (2E - r'^2 K)^2 - pi^2]/r^2    increasing onto (pi^2/2, 16 - pi^2)
[[nodiscard]] double lemma22_function(int idx, const Modulus& m);

/// Parts 2 and 5 agree with their r -> 0 limit through the r^2 term, so in
/// double precision they are flat for r below about 1e-4. This returns the
/// function minus that limit (pi/2, resp. pi/4) without cancellation; the
/// sweep compares these values when testing monotonicity.
[[nodiscard]] double lemma22_shifted(int idx, const Modulus& m);

/// g = [(K-E)(E-r'^2K) + E((K-E) - (E-r'^2K))] / (E-r'^2K)^2,
/// increasing onto (3/2, inf).
[[nodiscard]] double lemma23_g(const Modulus& m);

/// h = (2p - 1) r^2 + 2p r^2 E / (E - r'^2 K) for p >= 1/2; decreasing onto
/// (4p - 1, 4p) exactly when p <= 2.
[[nodiscard]] double lemma24_h(const Modulus& m, double p);

struct Lemma25Margins {
  double lower;  // (4/pi)^{1/p} - 1 - 1/(4p)
  double upper;  // 1/(4p - 1) - ((4/pi)^{1/p} - 1)
};

/// Requires p in [1/2, 2].
[[nodiscard]] Lemma25Margins lemma25_check(double p);
/// ((4p + 1)/(4p))^p, increasing on [1/2, 2] with f1(2) = 81/64.
[[nodiscard]] double lemma25_f1(double p);
/// (4p/(4p - 1))^p, decreasing on [1/2, 2] with f2(2) = 64/49.
[[nodiscard]] double lemma25_f2(double p);

/// f = p log(1 + u r^2) - log[(2/pi)(2E - r'^2 K)], u in [0,1], p in [1/2,2].
[[nodiscard]] double lemma26_f(const Modulus& m, double u, double p);

/// F = (2E - r'^2 K)^2 [1 + (pi^2 - 4(2E - r'^2 K)^2)/(pi^2 r^2)],
/// increasing onto (pi^2/8, 8(pi^2 - 8)/pi^2).
[[nodiscard]] double lemma27_F(const Modulus& m);

}  // namespace ellip
