#include "ellip/lemmas.hpp"

#include <array>
#include <cmath>
#include <string>

#include "ellip/elliptic.hpp"
#include "ellip/errors.hpp"

namespace ellip {

namespace {

// Enough terms for |m|^N < 1e-24 at the series switch (m = 0.49).
constexpr std::size_t kTerms = 80;
using Coeffs = std::array<double, kTerms>;

// Coefficients in units of pi/2 (or (pi/2)^2 for ediff), indexed by the
// power of m, before the division by m or m^2.
struct SeriesTables {
  Coeffs k{};
  Coeffs e{};
  Coeffs d{};
  Coeffs kme{};
  Coeffs delta{};
  Coeffs excess{};
  Coeffs ediff{};
  Coeffs part2{};  // E (1-m)^{-1/4} - pi/2
  Coeffs part5{};  // (1-m)^{3/8} (K - E)/m - pi/4
};

// Binomial series of (1 - m)^a.
Coeffs binomial(double a) {
  Coeffs b{};
  b[0] = 1.0;
  for (std::size_t n = 1; n < b.size(); ++n) {
    const double nn = static_cast<double>(n);
    b[n] = b[n - 1] * (nn - 1.0 - a) / nn;
  }
  return b;
}

const SeriesTables& tables() {
  static const SeriesTables t = [] {
    SeriesTables s;
    // K/(pi/2) = sum [(1/2)_n / n!]^2 m^n, E/(pi/2) = sum [..]^2 m^n/(1-2n).
    double c = 1.0;
    for (std::size_t n = 0; n < kTerms; ++n) {
      if (n > 0) {
        c *= (2.0 * static_cast<double>(n) - 1.0) / (2.0 * static_cast<double>(n));
      }
      s.k[n] = c * c;
      s.e[n] = s.k[n] / (1.0 - 2.0 * static_cast<double>(n));
    }
    for (std::size_t n = 1; n < kTerms; ++n) {
      s.d[n] = s.e[n] - s.k[n] + s.k[n - 1];
      s.kme[n] = s.k[n] - s.e[n];
      s.excess[n] = 2.0 * s.e[n] - s.k[n] + s.k[n - 1];
    }
    for (std::size_t n = 2; n < kTerms; ++n) {
      s.delta[n] = s.kme[n] - s.d[n];
      double acc = 0.0;
      for (std::size_t i = 0; i <= n; ++i) {
        acc += s.e[i] * s.e[n - i] - s.k[i] * s.k[n - i];
      }
      for (std::size_t i = 0; i + 1 <= n; ++i) {
        acc += s.k[i] * s.k[n - 1 - i];
      }
      s.ediff[n] = acc;
    }
    const Coeffs w2 = binomial(-0.25);
    const Coeffs w5 = binomial(0.375);
    for (std::size_t n = 0; n < kTerms; ++n) {
      double a2 = 0.0;
      double a5 = 0.0;
      for (std::size_t i = 0; i <= n; ++i) {
        a2 += s.e[i] * w2[n - i];
        if (i + 1 < kTerms) a5 += s.kme[i + 1] * w5[n - i];
      }
      s.part2[n] = a2;
      s.part5[n] = a5;
    }
    // Both products agree with their limit through the m^1 term.
    s.part2[0] = s.part2[1] = 0.0;
    s.part5[0] = s.part5[1] = 0.0;
    return s;
  }();
  return t;
}

// sum_{n >= shift} c[n] m^{n - shift}
double horner(const Coeffs& c, double m, std::size_t shift) {
  double acc = 0.0;
  for (std::size_t n = kTerms; n-- > shift;) acc = acc * m + c[n];
  return acc;
}

void require_open(const Modulus& m, const char* what) {
  if (!(m.r() > 0.0 && m.comp() > 0.0)) {
    throw DomainError(std::string(what) + " requires 0 < r < 1");
  }
}

void require_u_p(double u, double p) {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("u must lie in [0, 1]");
  if (!(p >= 0.5 && p <= 2.0)) throw DomainError("p must lie in [1/2, 2]");
}

// 2E - r'^2 K
double landen_combo(const LemmaTerms& t) {
  return kHalfPi + t.m * t.excess_over_m;
}

// [4 (2E - r'^2 K)^2 - pi^2] / r^2 written as a product so that the
// cancellation is confined to excess_over_m.
double lemma22_part7(const LemmaTerms& t) {
  return 2.0 * t.excess_over_m * (2.0 * landen_combo(t) + kPi);
}

}  // namespace

LemmaTerms lemma_terms_series(const Modulus& mod) {
  require_open(mod, "lemma_terms");
  const auto& s = tables();
  const double m = mod.r2();
  const auto v = complete_ke(mod);
  LemmaTerms t{};
  t.m = m;
  t.k = v.k_val;
  t.e = v.e_val;
  t.d_over_m = kHalfPi * horner(s.d, m, 1);
  t.kme_over_m = kHalfPi * horner(s.kme, m, 1);
  t.delta_over_m2 = kHalfPi * horner(s.delta, m, 2);
  t.excess_over_m = kHalfPi * horner(s.excess, m, 1);
  t.ediff_over_m2 = kHalfPi * kHalfPi * horner(s.ediff, m, 2);
  return t;
}

LemmaTerms lemma_terms_direct(const Modulus& mod) {
  require_open(mod, "lemma_terms");
  const double m = mod.r2();
  const double rc = mod.comp();
  const auto v = complete_ke(mod);
  const double k = v.k_val;
  const double e = v.e_val;
  const double d = e - rc * rc * k;
  const double kme = k - e;
  LemmaTerms t{};
  t.m = m;
  t.k = k;
  t.e = e;
  t.d_over_m = d / m;
  t.kme_over_m = kme / m;
  t.delta_over_m2 = (kme - d) / (m * m);
  t.excess_over_m = ((e - kHalfPi) + d) / m;
  t.ediff_over_m2 = (e - rc * k) * (e + rc * k) / (m * m);
  return t;
}

LemmaTerms lemma_terms(const Modulus& m) {
  return m.r() < kSeriesSwitch ? lemma_terms_series(m) : lemma_terms_direct(m);
}

double lemma22_function(int idx, const Modulus& m) {
  require_open(m, "lemma22_function");
  const auto t = lemma_terms(m);
  switch (idx) {
    case 1: return t.d_over_m;
    case 2: return t.e / std::sqrt(m.comp());
    case 3: return t.kme_over_m / t.k;
    case 4: return t.d_over_m / t.k;
    case 5: return std::pow(m.comp(), 0.75) * t.kme_over_m;
    case 6: return t.d_over_m * t.d_over_m / t.ediff_over_m2;
    case 7: return lemma22_part7(t);
    default:
      throw ConfigurationError("lemma22_function index must be 1..7, got " +
                               std::to_string(idx));
  }
}

double lemma22_shifted(int idx, const Modulus& m) {
  require_open(m, "lemma22_shifted");
  if (idx != 2 && idx != 5) {
    throw ConfigurationError("lemma22_shifted is defined for idx 2 and 5");
  }
  if (m.r() < kSeriesSwitch) {
    const auto& s = tables();
    return kHalfPi * horner(idx == 2 ? s.part2 : s.part5, m.r2(), 0);
  }
  return lemma22_function(idx, m) - (idx == 2 ? kHalfPi : kPi / 4.0);
}

double lemma23_g(const Modulus& m) {
  require_open(m, "lemma23_g");
  const auto t = lemma_terms(m);
  return (t.kme_over_m * t.d_over_m + t.e * t.delta_over_m2) /
         (t.d_over_m * t.d_over_m);
}

double lemma24_h(const Modulus& m, double p) {
  require_open(m, "lemma24_h");
  if (!(p >= 0.5) || !std::isfinite(p)) {
    throw DomainError("lemma24_h requires p >= 1/2");
  }
  const auto t = lemma_terms(m);
  return (2.0 * p - 1.0) * t.m + 2.0 * p * t.e / t.d_over_m;
}

Lemma25Margins lemma25_check(double p) {
  if (!(p >= 0.5 && p <= 2.0)) throw DomainError("p must lie in [1/2, 2]");
  const double mid = std::pow(4.0 / kPi, 1.0 / p) - 1.0;
  return {mid - 1.0 / (4.0 * p), 1.0 / (4.0 * p - 1.0) - mid};
}

double lemma25_f1(double p) {
  if (!(p >= 0.5 && p <= 2.0)) throw DomainError("p must lie in [1/2, 2]");
  return std::pow((4.0 * p + 1.0) / (4.0 * p), p);
}

double lemma25_f2(double p) {
  if (!(p >= 0.5 && p <= 2.0)) throw DomainError("p must lie in [1/2, 2]");
  return std::pow(4.0 * p / (4.0 * p - 1.0), p);
}

double lemma26_f(const Modulus& m, double u, double p) {
  require_open(m, "lemma26_f");
  require_u_p(u, p);
  const auto t = lemma_terms(m);
  // log[(2/pi)(2E - r'^2 K)] = log1p((2/pi) r^2 excess_over_m)
  return p * std::log1p(u * t.m) - std::log1p(t.m * t.excess_over_m / kHalfPi);
}

double lemma27_F(const Modulus& m) {
  require_open(m, "lemma27_F");
  const auto t = lemma_terms(m);
  const double x = landen_combo(t);
  return x * x * (1.0 - lemma22_part7(t) / (kPi * kPi));
}

}  // namespace ellip
