#include "ellip/modulus.hpp"

#include <cmath>
#include <string>

#include "ellip/errors.hpp"

namespace ellip {

namespace {

// (1 - x)(1 + x) keeps full relative accuracy when x is close to 1.
double complement_of(double x) { return std::sqrt((1.0 - x) * (1.0 + x)); }

void require_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in [0, 1], got " +
                      std::to_string(x));
  }
}

}  // namespace

Modulus::Modulus(double r) {
  require_unit(r, "modulus r");
  r_ = r;
  rc_ = complement_of(r);
}

Modulus Modulus::from_complement(double rc) {
  require_unit(rc, "complementary modulus r'");
  return Modulus(complement_of(rc), rc);
}

}  // namespace ellip
