#include "contlog/real_interval.hpp"

#include <algorithm>
#include <array>

#include "contlog/error.hpp"

namespace contlog {

BigFloat::BigFloat(unsigned bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(std::max<unsigned>(bits, MPFR_PREC_MIN)));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_decimal(int significant, mpfr_rnd_t rnd) const {
  char* text = nullptr;
  mpfr_asprintf(&text, "%.*R*e", std::max(significant, 1) - 1, rnd, value_);
  std::string out(text);
  mpfr_free_str(text);
  return out;
}

mpq_class BigFloat::to_rational() const {
  if (!is_finite()) throw InvalidInput("non-finite value has no rational form");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()); }
int compare(const BigFloat& a, const mpq_class& q) { return mpfr_cmp_q(a.raw(), q.get_mpq_t()); }
int compare(const BigFloat& a, long v) { return mpfr_cmp_si(a.raw(), v); }

namespace {

const BigFloat& min_of(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0 ? a : b; }
const BigFloat& max_of(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0 ? a : b; }

unsigned joint_precision(const RealInterval& a, const RealInterval& b) {
  return std::max(a.precision(), b.precision());
}

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Outward hull of op over the four endpoint combinations.  Valid for
// operations monotone in each argument on the given domain (product, and
// quotient by an interval that excludes zero).
std::pair<BigFloat, BigFloat> corner_hull(BinaryOp op, const RealInterval& a, const RealInterval& b,
                                          unsigned bits) {
  const std::array<const BigFloat*, 2> as{&a.lo(), &a.hi()};
  const std::array<const BigFloat*, 2> bs{&b.lo(), &b.hi()};
  BigFloat lo(bits);
  BigFloat hi(bits);
  BigFloat down(bits);
  BigFloat up(bits);
  bool first = true;
  for (const BigFloat* x : as) {
    for (const BigFloat* y : bs) {
      op(down.raw(), x->raw(), y->raw(), MPFR_RNDD);
      op(up.raw(), x->raw(), y->raw(), MPFR_RNDU);
      if (first || compare(down, lo) < 0) lo = down;
      if (first || compare(up, hi) > 0) hi = up;
      first = false;
    }
  }
  return {std::move(lo), std::move(hi)};
}

}  // namespace

RealInterval::RealInterval() : lo_(64), hi_(64) {}

RealInterval RealInterval::point(long value, unsigned bits) {
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_set_si(lo.raw(), value, MPFR_RNDD);
  mpfr_set_si(hi.raw(), value, MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RealInterval RealInterval::exact(const mpq_class& q, unsigned bits) {
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_set_q(lo.raw(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.raw(), q.get_mpq_t(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RealInterval RealInterval::from_doubles(double lo, double hi) {
  BigFloat l(53);
  BigFloat h(53);
  mpfr_set_d(l.raw(), lo, MPFR_RNDD);
  mpfr_set_d(h.raw(), hi, MPFR_RNDU);
  return from_bounds(std::move(l), std::move(h));
}

RealInterval RealInterval::from_bounds(BigFloat lo, BigFloat hi) {
  if (!lo.is_finite() || !hi.is_finite()) throw InvalidInput("interval endpoints must be finite");
  if (compare(lo, hi) > 0) throw InvalidInput("interval lower endpoint exceeds upper endpoint");
  return {std::move(lo), std::move(hi)};
}

RealInterval RealInterval::unit(unsigned bits) {
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_set_ui(hi.raw(), 1, MPFR_RNDN);
  return {std::move(lo), std::move(hi)};
}

unsigned RealInterval::precision() const noexcept { return std::max(lo_.precision(), hi_.precision()); }

BigFloat RealInterval::width(unsigned bits) const {
  BigFloat w(bits);
  mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
  return w;
}

double RealInterval::width_upper() const { return width(64).to_double(MPFR_RNDU); }

BigFloat RealInterval::midpoint() const {
  BigFloat mid(precision() + 1);
  mpfr_add(mid.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
  mpfr_div_2ui(mid.raw(), mid.raw(), 1, MPFR_RNDN);
  return mid;
}

bool RealInterval::contains(const mpq_class& q) const { return compare(lo_, q) <= 0 && compare(hi_, q) >= 0; }

bool RealInterval::contains(long v) const { return compare(lo_, v) <= 0 && compare(hi_, v) >= 0; }

bool RealInterval::contains(const RealInterval& inner) const {
  return compare(lo_, inner.lo_) <= 0 && compare(hi_, inner.hi_) >= 0;
}

std::optional<RealInterval> RealInterval::intersect(const RealInterval& other) const {
  const BigFloat& lo = max_of(lo_, other.lo_);
  const BigFloat& hi = min_of(hi_, other.hi_);
  if (compare(lo, hi) > 0) return std::nullopt;
  return RealInterval(lo, hi);
}

RealInterval RealInterval::hull(const RealInterval& other) const {
  return {min_of(lo_, other.lo_), max_of(hi_, other.hi_)};
}

std::optional<RealInterval> RealInterval::clamp_unit() const {
  if (compare(lo_, 0L) >= 0 && compare(hi_, 1L) <= 0) return *this;
  return intersect(unit(precision()));
}

std::string RealInterval::to_string(int significant) const {
  return "[" + lo_.to_decimal(significant, MPFR_RNDD) + ", " + hi_.to_decimal(significant, MPFR_RNDU) + "]";
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  const unsigned bits = joint_precision(a, b);
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_add(lo.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_add(hi.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  const unsigned bits = joint_precision(a, b);
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_sub(lo.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
  mpfr_sub(hi.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  auto [lo, hi] = corner_hull(&mpfr_mul, a, b, joint_precision(a, b));
  return {std::move(lo), std::move(hi)};
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
  if (compare(b.lo_, 0L) <= 0 && compare(b.hi_, 0L) >= 0) {
    throw InvalidInput("division by an interval containing zero");
  }
  auto [lo, hi] = corner_hull(&mpfr_div, a, b, joint_precision(a, b));
  return {std::move(lo), std::move(hi)};
}

RealInterval operator+(const RealInterval& a, long v) {
  BigFloat lo(a.precision());
  BigFloat hi(a.precision());
  mpfr_add_si(lo.raw(), a.lo_.raw(), v, MPFR_RNDD);
  mpfr_add_si(hi.raw(), a.hi_.raw(), v, MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RealInterval operator-(const RealInterval& a, long v) {
  BigFloat lo(a.precision());
  BigFloat hi(a.precision());
  mpfr_sub_si(lo.raw(), a.lo_.raw(), v, MPFR_RNDD);
  mpfr_sub_si(hi.raw(), a.hi_.raw(), v, MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

}  // namespace contlog
