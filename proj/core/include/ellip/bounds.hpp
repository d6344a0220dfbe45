#pragma once

#include <span>
#include <string>
#include <vector>

#include "ellip/constants.hpp"
#include "ellip/elliptic.hpp"
#include "ellip/modulus.hpp"

namespace ellip {

enum class Family {
  VuorinenLower,
  BarnardUpper,
  AlzerQiuUpper,
  Thm11,       // two-square-root family, parameter q in (0, 1/2]
  Thm12,       // contraharmonic family, t in [1/2, 1], p in [1/2, 2]
  Cor31Lower,  // Thm12 at (lambda_star, 2)
  Cor31Upper,  // Thm12 at (mu_star, 1/2)
};

enum class Side { Lower, Upper, Invalid };

[[nodiscard]] const char* to_string(Side s) noexcept;

/// Identifies one bound for E(r): a family, its parameters, and which side
/// of E it lies on. Parameters are validated against the family hypotheses
/// at construction; an out-of-hypothesis value throws DomainError, while an
/// in-hypothesis value that falls in the gap between the sharp thresholds
/// yields Side::Invalid.
class BoundSpec {
 public:
  static BoundSpec vuorinen_lower() { return BoundSpec(Family::VuorinenLower); }
  static BoundSpec barnard_upper() { return BoundSpec(Family::BarnardUpper); }
  static BoundSpec alzer_qiu_upper() { return BoundSpec(Family::AlzerQiuUpper); }
  static BoundSpec cor31_lower() { return BoundSpec(Family::Cor31Lower); }
  static BoundSpec cor31_upper() { return BoundSpec(Family::Cor31Upper); }
  static BoundSpec thm11(double q);
  static BoundSpec thm12(double t, double p);

  [[nodiscard]] Family family() const noexcept { return family_; }
  [[nodiscard]] double q() const noexcept { return q_; }
  [[nodiscard]] double t() const noexcept { return t_; }
  [[nodiscard]] double p() const noexcept { return p_; }
  [[nodiscard]] Side side() const noexcept { return side_; }

  /// Canonical family-spec text, e.g. "thm12:t=0.85,p=2". Parses back to an
  /// identical spec.
  [[nodiscard]] std::string label() const;

  /// E(r) bound value; throws DomainError unless 0 < r < 1.
  [[nodiscard]] double operator()(const Modulus& m) const;

  friend bool operator==(const BoundSpec&, const BoundSpec&) = default;

 private:
  explicit BoundSpec(Family f);

  Family family_;
  double q_ = 0.0;
  double t_ = 0.0;
  double p_ = 0.0;
  Side side_ = Side::Invalid;
};

/// A certified interval lo <= E(r) <= hi and the bounds that produced it.
struct Enclosure {
  double lo;
  double hi;
  BoundSpec lo_source;
  BoundSpec hi_source;

  [[nodiscard]] double width() const noexcept { return hi - lo; }
};

// Closed-form bounds. All require 0 < r < 1 and throw DomainError otherwise.

/// (pi/2) ((1 + r'^{3/2}) / 2)^{2/3}
[[nodiscard]] double vuorinen_lower(const Modulus& m);
/// (pi/2) ((1 + r'^2) / 2)^{1/2}
[[nodiscard]] double barnard_upper(const Modulus& m);
/// (pi/4) (sqrt(1 - a r^2) + sqrt(1 - b r^2)) with a, b = 1/2 -+ sqrt(2)/4
[[nodiscard]] double alzer_qiu_upper(const Modulus& m);
/// (pi/4) (sqrt(q + (1-q) r'^2) + sqrt((1-q) + q r'^2)), q in (0, 1/2]
[[nodiscard]] double thm11_bound(const Modulus& m, double q);
/// 2^{p-2} pi (1+r')^{1-2p} {[t + (1-t) r']^2 + [(1-t) + t r']^2}^p
[[nodiscard]] double thm12_bound(const Modulus& m, double t, double p);

/// Enclosure from the p = 2 lower and p = 1/2 upper instances.
[[nodiscard]] Enclosure corollary31(const Modulus& m);

/// C^p(t a + (1-t) b, t b + (1-t) a) A^{1-p}(a, b) with A the arithmetic and
/// C the contraharmonic mean.
[[nodiscard]] double q_mean(const MeanPair& pair, double t, double p);

/// Tightest enclosure from the candidates: max over lowers, min over uppers.
/// Ties keep the earlier candidate. Throws ConfigurationError for an empty
/// list or a list lacking either side, ValidationError if any candidate has
/// Side::Invalid.
[[nodiscard]] Enclosure best_enclosure(const Modulus& m,
                                       std::span<const BoundSpec> candidates);

/// Every family at its sharp constants: the three classical bounds, Thm11 at
/// beta_star and alpha_star, the cor31 pair, and Thm12 at both thresholds for
/// p in {1/2, 1, 2}.
[[nodiscard]] std::vector<BoundSpec> sharp_families();

}  // namespace ellip
