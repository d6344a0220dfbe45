#pragma once

namespace ellip {

/// A modulus r in [0, 1] together with its complement r' = sqrt(1 - r^2).
///
/// The complement is stored rather than recomputed because close to r = 1
/// it carries the information that r itself has rounded away: a modulus
/// built with from_complement(1e-12) has r == 1.0 in double precision but
/// still a finite K.
class Modulus {
 public:
  /// Throws DomainError unless 0 <= r <= 1.
  explicit Modulus(double r);

  /// Builds the modulus whose complement is `rc`; throws DomainError unless
  /// 0 <= rc <= 1.
  static Modulus from_complement(double rc);

  [[nodiscard]] double r() const noexcept { return r_; }
  [[nodiscard]] double comp() const noexcept { return rc_; }
  [[nodiscard]] double r2() const noexcept { return r_ * r_; }
  [[nodiscard]] double comp2() const noexcept { return rc_ * rc_; }

 private:
  Modulus(double r, double rc) noexcept : r_(r), rc_(rc) {}

  double r_;
  double rc_;
};

}  // namespace ellip
