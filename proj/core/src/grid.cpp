#include "ellip/grid.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>

#include "ellip/errors.hpp"

namespace ellip {

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  if (n < 2) throw DomainError("a grid needs at least two points");
  std::vector<double> out(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + step * static_cast<double>(i);
  }
  out.back() = hi;
  return out;
}

std::size_t verification_grid_points(std::size_t fallback) {
  const char* env = std::getenv("ELLIP_GRID_POINTS");
  if (env == nullptr || *env == '\0') return fallback;
  std::size_t value = 0;
  const char* end = env + std::strlen(env);
  auto res = std::from_chars(env, end, value);
  if (res.ec != std::errc{} || res.ptr != end || value == 0) {
    throw ConfigurationError("ELLIP_GRID_POINTS must be a positive integer");
  }
  return value;
}

void GridSpec::validate() const {
  if (!(start >= 0.0 && start < end && end <= 1.0)) {
    throw DomainError("grid requires 0 <= start < end <= 1");
  }
  if (points < 2) throw DomainError("grid requires at least 2 points");
  if (spacing == Spacing::LogNearOne && !(end < 1.0)) {
    throw DomainError("log-near-one grid requires end < 1");
  }
}

std::vector<double> GridSpec::points_in_order() const {
  validate();
  if (spacing == Spacing::Uniform) return uniform_grid(start, end, points);
  const double far = std::log(1.0 - start);
  const double near = std::log(1.0 - end);
  std::vector<double> out(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(points - 1);
    out[i] = 1.0 - std::exp(far + (near - far) * s);
  }
  out.front() = start;
  out.back() = end;
  return out;
}

}  // namespace ellip
