#include "format.hpp"

#include <array>
#include <charconv>

namespace ellip::cli {

namespace {

template <typename... Args>
std::string convert(double x, Args... args) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, args...);
  return {buf.data(), res.ptr};
}

}  // namespace

std::string shortest(double x) { return convert(x); }

std::string significant(double x, int digits) {
  return convert(x, std::chars_format::general, digits);
}

std::string fixed(double x, int decimals) {
  return convert(x, std::chars_format::fixed, decimals);
}

}  // namespace ellip::cli
