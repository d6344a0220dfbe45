#pragma once

namespace ellip {

/// Sharp parameters of the bound families, evaluated once from their closed
/// forms in double precision. Reference decimals (30 digits, produced by
/// scripts/sharp_constants.py with mpmath):
///
///   beta_star   = 0.108149767335905848073816460112
///   alpha_star  = 0.146446609406726237799577818948
///   lambda_star = 0.676776695296636881100211090526
///   mu_star     = 0.894061841046999989493157818631
///   alzer_beta  = 0.853553390593273762200422181052
struct SharpConstants {
  /// 1/2 - 2 sqrt(2 (pi^2 - 8)) / pi^2: largest q giving a lower bound.
  double beta_star;
  /// 1/2 - sqrt(2)/4: smallest q giving an upper bound.
  double alpha_star;
  /// 1/2 + sqrt(2)/8: the p = 2 lower threshold in t.
  double lambda_star;
  /// 1/2 + sqrt((4/pi)^2 - 1)/2: the p = 1/2 upper threshold in t.
  double mu_star;
  double alzer_alpha;  // 1/2 - sqrt(2)/4
  double alzer_beta;   // 1/2 + sqrt(2)/4
};

[[nodiscard]] const SharpConstants& sharp_constants() noexcept;

/// Largest t for which the two-parameter family is a lower bound at power p:
/// 1/2 + sqrt(1/(4p))/2.
[[nodiscard]] double thm12_lower_threshold(double p);

/// Smallest t for which the two-parameter family is an upper bound at power
/// p: 1/2 + sqrt((4/pi)^(1/p) - 1)/2.
[[nodiscard]] double thm12_upper_threshold(double p);

}  // namespace ellip
