#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

namespace contlog {

// Owning handle for one MPFR binary floating-point number (a dyadic rational
// with a fixed mantissa width).  Copies keep the source precision and are
// exact.
class BigFloat {
 public:
  explicit BigFloat(unsigned bits = 64);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr raw() noexcept { return value_; }
  mpfr_srcptr raw() const noexcept { return value_; }

  unsigned precision() const noexcept { return static_cast<unsigned>(mpfr_get_prec(value_)); }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }

  // Scientific notation with `significant` digits, rounded in direction `rnd`.
  std::string to_decimal(int significant, mpfr_rnd_t rnd = MPFR_RNDN) const;

  // Exact value as a rational number (finite values only).
  mpq_class to_rational() const;

 private:
  mpfr_t value_;
};

int compare(const BigFloat& a, const BigFloat& b);
int compare(const BigFloat& a, const mpq_class& q);
int compare(const BigFloat& a, long v);

// Closed interval [lo, hi] with dyadic endpoints.  Every operation rounds
// outward, so the true result of the corresponding real operation on any
// points of the operands is contained in the result.
class RealInterval {
 public:
  // The degenerate interval [0, 0].
  RealInterval();

  static RealInterval point(long value, unsigned bits);
  static RealInterval exact(const mpq_class& q, unsigned bits);
  static RealInterval from_doubles(double lo, double hi);
  static RealInterval from_bounds(BigFloat lo, BigFloat hi);
  static RealInterval unit(unsigned bits);

  const BigFloat& lo() const noexcept { return lo_; }
  const BigFloat& hi() const noexcept { return hi_; }

  unsigned precision() const noexcept;

  // Endpoints rounded outward to double.
  double lower() const { return lo_.to_double(MPFR_RNDD); }
  double upper() const { return hi_.to_double(MPFR_RNDU); }

  BigFloat width(unsigned bits) const;
  double width_upper() const;

  // Midpoint rounded to nearest at the interval's precision.
  BigFloat midpoint() const;

  bool contains(const mpq_class& q) const;
  bool contains(long v) const;
  bool contains(const RealInterval& inner) const;
  bool is_point() const { return compare(lo_, hi_) == 0; }

  // True when every point of *this is strictly below every point of other.
  bool certainly_less(const RealInterval& other) const { return compare(hi_, other.lo_) < 0; }

  std::optional<RealInterval> intersect(const RealInterval& other) const;
  RealInterval hull(const RealInterval& other) const;

  // Intersection with [0, 1]; std::nullopt when disjoint.
  std::optional<RealInterval> clamp_unit() const;

  std::string to_string(int significant = 12) const;

  friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator/(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator+(const RealInterval& a, long v);
  friend RealInterval operator-(const RealInterval& a, long v);

 private:
  RealInterval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  BigFloat lo_;
  BigFloat hi_;
};

}  // namespace contlog
