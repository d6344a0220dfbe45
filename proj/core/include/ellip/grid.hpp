#pragma once

#include <cstddef>
#include <vector>

namespace ellip {

/// n points lo, ..., hi with uniform spacing (both ends included).
[[nodiscard]] std::vector<double> uniform_grid(double lo, double hi,
                                               std::size_t n);

/// Default interior used by verification sweeps: (1e-6, 1 - 1e-6).
inline constexpr double kSweepMargin = 1e-6;

/// Verification grid size: ELLIP_GRID_POINTS when set to a positive
/// integer, otherwise `fallback`.
[[nodiscard]] std::size_t verification_grid_points(std::size_t fallback = 10000);

enum class Spacing { Uniform, LogNearOne };

struct GridSpec {
  double start;
  double end;
  std::size_t points;
  Spacing spacing = Spacing::Uniform;

  /// Throws DomainError unless 0 <= start < end <= 1 and points >= 2.
  /// LogNearOne additionally needs end < 1.
  void validate() const;

  /// Uniform: start..end inclusive. LogNearOne: the distances 1 - r are
  /// geometric from 1 - start down to 1 - end, so points crowd toward 1.
  [[nodiscard]] std::vector<double> points_in_order() const;
};

}  // namespace ellip
