#pragma once

#include <string>

namespace ellip::cli {

/// Shortest text that parses back to the same double.
std::string shortest(double x);

/// `digits` significant digits, general notation.
std::string significant(double x, int digits);

/// Fixed notation with `decimals` digits after the point.
std::string fixed(double x, int decimals);

}  // namespace ellip::cli
