#include "ellip/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "ellip/errors.hpp"

namespace ellip {

namespace {

void require_open_unit(const Modulus& m) {
  // r' > 0 rather than r < 1: a modulus built from a tiny complement has
  // r == 1.0 in double precision but is still interior.
  if (!(m.r() > 0.0 && m.comp() > 0.0)) {
    throw DomainError("bound families are defined for 0 < r < 1, got r = " +
                      std::to_string(m.r()));
  }
}

void require_thm11(double q) {
  if (!(q > 0.0 && q <= 0.5)) {
    throw DomainError("thm11 requires q in (0, 1/2], got q = " +
                      std::to_string(q));
  }
}

void require_thm12(double t, double p) {
  if (!(t >= 0.5 && t <= 1.0)) {
    throw DomainError("thm12 requires t in [1/2, 1], got t = " +
                      std::to_string(t));
  }
  if (!(p >= 0.5 && p <= 2.0)) {
    throw DomainError("thm12 requires p in [1/2, 2], got p = " +
                      std::to_string(p));
  }
}

std::string shortest(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double thm12_unchecked(double rc, double t, double p) {
  const double u = t + (1.0 - t) * rc;
  const double v = (1.0 - t) + t * rc;
  return std::exp2(p - 2.0) * kPi * std::pow(1.0 + rc, 1.0 - 2.0 * p) *
         std::pow(u * u + v * v, p);
}

double thm11_unchecked(double rc2, double q) {
  return 0.25 * kPi *
         (std::sqrt(q + (1.0 - q) * rc2) + std::sqrt((1.0 - q) + q * rc2));
}

}  // namespace

const char* to_string(Side s) noexcept {
  switch (s) {
    case Side::Lower: return "lower";
    case Side::Upper: return "upper";
    case Side::Invalid: return "invalid";
  }
  return "?";
}

const SharpConstants& sharp_constants() noexcept {
  static const SharpConstants c = [] {
    const double pi2 = kPi * kPi;
    const double sqrt2 = std::sqrt(2.0);
    SharpConstants s{};
    s.beta_star = 0.5 - 2.0 * std::sqrt(2.0 * (pi2 - 8.0)) / pi2;
    s.alpha_star = 0.5 - sqrt2 / 4.0;
    s.lambda_star = thm12_lower_threshold(2.0);
    s.mu_star = thm12_upper_threshold(0.5);
    s.alzer_alpha = 0.5 - sqrt2 / 4.0;
    s.alzer_beta = 0.5 + sqrt2 / 4.0;
    return s;
  }();
  return c;
}

double thm12_lower_threshold(double p) {
  return 0.5 + std::sqrt(1.0 / (4.0 * p)) / 2.0;
}

double thm12_upper_threshold(double p) {
  return 0.5 + std::sqrt(std::pow(4.0 / kPi, 1.0 / p) - 1.0) / 2.0;
}

BoundSpec::BoundSpec(Family f) : family_(f) {
  switch (f) {
    case Family::VuorinenLower:
    case Family::Cor31Lower:
      side_ = Side::Lower;
      break;
    case Family::BarnardUpper:
    case Family::AlzerQiuUpper:
    case Family::Cor31Upper:
      side_ = Side::Upper;
      break;
    case Family::Thm11:
    case Family::Thm12:
      side_ = Side::Invalid;
      break;
  }
}

// Side classification compares against the thresholds exactly as the
// inequalities are written: equality belongs to the valid side.
BoundSpec BoundSpec::thm11(double q) {
  require_thm11(q);
  BoundSpec s(Family::Thm11);
  s.q_ = q;
  const auto& c = sharp_constants();
  if (q <= c.beta_star) {
    s.side_ = Side::Lower;
  } else if (q >= c.alpha_star) {
    s.side_ = Side::Upper;
  }
  return s;
}

BoundSpec BoundSpec::thm12(double t, double p) {
  require_thm12(t, p);
  BoundSpec s(Family::Thm12);
  s.t_ = t;
  s.p_ = p;
  if (t <= thm12_lower_threshold(p)) {
    s.side_ = Side::Lower;
  } else if (t >= thm12_upper_threshold(p)) {
    s.side_ = Side::Upper;
  }
  return s;
}

std::string BoundSpec::label() const {
  switch (family_) {
    case Family::VuorinenLower: return "vuorinen";
    case Family::BarnardUpper: return "barnard";
    case Family::AlzerQiuUpper: return "alzer-qiu";
    case Family::Cor31Lower: return "cor31-lower";
    case Family::Cor31Upper: return "cor31-upper";
    case Family::Thm11: return "thm11:q=" + shortest(q_);
    case Family::Thm12:
      return "thm12:t=" + shortest(t_) + ",p=" + shortest(p_);
  }
  return "?";
}

double BoundSpec::operator()(const Modulus& m) const {
  switch (family_) {
    case Family::VuorinenLower: return ellip::vuorinen_lower(m);
    case Family::BarnardUpper: return ellip::barnard_upper(m);
    case Family::AlzerQiuUpper: return ellip::alzer_qiu_upper(m);
    case Family::Thm11: return thm11_bound(m, q_);
    case Family::Thm12: return thm12_bound(m, t_, p_);
    case Family::Cor31Lower: return corollary31(m).lo;
    case Family::Cor31Upper: return corollary31(m).hi;
  }
  return std::nan("");
}

double vuorinen_lower(const Modulus& m) {
  require_open_unit(m);
  const double rc = m.comp();
  return kHalfPi * std::cbrt(std::pow(0.5 * (1.0 + rc * std::sqrt(rc)), 2.0));
}

double barnard_upper(const Modulus& m) {
  require_open_unit(m);
  return kHalfPi * std::sqrt(0.5 * (1.0 + m.comp2()));
}

double alzer_qiu_upper(const Modulus& m) {
  require_open_unit(m);
  const auto& c = sharp_constants();
  const double r2 = m.r2();
  return 0.25 * kPi *
         (std::sqrt(1.0 - c.alzer_alpha * r2) + std::sqrt(1.0 - c.alzer_beta * r2));
}

double thm11_bound(const Modulus& m, double q) {
  require_open_unit(m);
  require_thm11(q);
  return thm11_unchecked(m.comp2(), q);
}

double thm12_bound(const Modulus& m, double t, double p) {
  require_open_unit(m);
  require_thm12(t, p);
  return thm12_unchecked(m.comp(), t, p);
}

Enclosure corollary31(const Modulus& m) {
  require_open_unit(m);
  const auto& c = sharp_constants();
  return Enclosure{thm12_unchecked(m.comp(), c.lambda_star, 2.0),
                   thm12_unchecked(m.comp(), c.mu_star, 0.5),
                   BoundSpec::cor31_lower(), BoundSpec::cor31_upper()};
}

double q_mean(const MeanPair& pair, double t, double p) {
  require_thm12(t, p);
  const double a = pair.a;
  const double b = pair.b;
  const double x = t * a + (1.0 - t) * b;
  const double y = t * b + (1.0 - t) * a;
  const double arith = 0.5 * (a + b);
  const double contra = (x * x + y * y) / (x + y);
  return std::pow(contra, p) * std::pow(arith, 1.0 - p);
}

Enclosure best_enclosure(const Modulus& m,
                         std::span<const BoundSpec> candidates) {
  if (candidates.empty()) {
    throw ConfigurationError("best_enclosure needs at least one candidate");
  }
  for (const auto& c : candidates) {
    if (c.side() == Side::Invalid) {
      throw ValidationError(c.label() +
                            " is neither a valid lower nor upper bound");
    }
  }
  const BoundSpec* lo_src = nullptr;
  const BoundSpec* hi_src = nullptr;
  double lo = 0.0;
  double hi = 0.0;
  for (const auto& c : candidates) {
    const double v = c(m);
    if (c.side() == Side::Lower && (lo_src == nullptr || v > lo)) {
      lo = v;
      lo_src = &c;
    } else if (c.side() == Side::Upper && (hi_src == nullptr || v < hi)) {
      hi = v;
      hi_src = &c;
    }
  }
  if (lo_src == nullptr || hi_src == nullptr) {
    throw ConfigurationError(
        "best_enclosure needs at least one lower and one upper bound");
  }
  return Enclosure{lo, hi, *lo_src, *hi_src};
}

std::vector<BoundSpec> sharp_families() {
  const auto& c = sharp_constants();
  std::vector<BoundSpec> out = {
      BoundSpec::vuorinen_lower(),  BoundSpec::barnard_upper(),
      BoundSpec::alzer_qiu_upper(), BoundSpec::cor31_lower(),
      BoundSpec::cor31_upper(),     BoundSpec::thm11(c.beta_star),
      BoundSpec::thm11(c.alpha_star),
  };
  for (double p : {0.5, 1.0, 2.0}) {
    out.push_back(BoundSpec::thm12(thm12_lower_threshold(p), p));
    out.push_back(BoundSpec::thm12(thm12_upper_threshold(p), p));
  }
  return out;
}

}  // namespace ellip
