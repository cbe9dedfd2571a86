#include "contlog/codec.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <optional>

#include "contlog/arith.hpp"

namespace contlog {

Base::Base(int m) : m_(m) {
  if (m < 3) throw InvalidInput("base must be at least 3, got " + std::to_string(m));
}

void Base::check_digit(int d) const {
  if (!is_digit(d)) {
    throw InvalidDigit("digit " + std::to_string(d) + " is not in {1,...," + std::to_string(m_ - 1) +
                       "} for base " + std::to_string(m_));
  }
}

Word::Word(Base base, std::vector<int> digits) : base_(base), digits_(std::move(digits)) {
  for (int d : digits_) base_.check_digit(d);
}

Word Word::repeated(Base base, int digit, std::size_t count) {
  return Word(base, std::vector<int>(count, digit));
}

Word Word::parse(Base base, std::string_view text) {
  std::vector<int> digits;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return Word(base);
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    int d = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), d);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidInput("malformed digit '" + std::string(item) + "' in word");
    }
    digits.push_back(d);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Word(base, std::move(digits));
}

Word Word::extended(int digit) const {
  base_.check_digit(digit);
  Word out = *this;
  out.digits_.push_back(digit);
  return out;
}

Word Word::prefix(std::size_t length) const {
  Word out(base_);
  out.digits_.assign(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(std::min(length, size())));
  return out;
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(digits_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.base_ <=> b.base_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.digits_.begin(), a.digits_.end(), b.digits_.begin(),
                                                b.digits_.end());
}

RealInterval branch_map(Base m, int d, const RealInterval& x, const PrecisionContext& ctx) {
  m.check_digit(d);
  const std::optional<RealInterval> domain = x.clamp_unit();
  if (!domain) throw InvalidInput("branch map argument " + x.to_string() + " does not meet [0,1]");
  const RealInterval image = log_base(m.value(), *domain + d, ctx);
  // T_d maps [0,1] into [0,1], so the clamp only discards rounding excess.
  return *image.clamp_unit();
}

RealInterval apply_word(const Word& w, const RealInterval& x, const PrecisionContext& ctx) {
  RealInterval value = x;
  for (auto it = w.digits().rbegin(); it != w.digits().rend(); ++it) {
    value = branch_map(w.base(), *it, value, ctx);
  }
  return value;
}

CylinderEndpoints word_endpoints(const Word& w, const PrecisionContext& ctx) {
  return {apply_word(w, RealInterval::point(0, ctx.bits()), ctx),
          apply_word(w, RealInterval::point(1, ctx.bits()), ctx)};
}

RealInterval word_interval(const Word& w, const PrecisionContext& ctx) {
  if (w.empty()) return RealInterval::unit(ctx.bits());
  const CylinderEndpoints ends = word_endpoints(w, ctx);
  return RealInterval::from_bounds(ends.left.lo(), ends.right.hi());
}

RealInterval decode(const Word& w, const PrecisionContext& ctx) { return word_interval(w, ctx); }

RealInterval fixed_point(Base m, int d, double tol, const PrecisionContext& ctx) {
  m.check_digit(d);
  if (!(tol > 0.0)) throw InvalidInput("fixed_point tolerance must be positive");
  for (PrecisionContext run = ctx;; run = run.escalated()) {
    RealInterval x = RealInterval::unit(run.bits());
    double width = x.width_upper();
    // Contraction factor is at most 1/ln 3 < 0.92, so this bound is never the
    // binding stop condition before the rounding floor is hit.
    for (int iter = 0; iter < 100000; ++iter) {
      // The fixed point lies in both x and T_d(x).
      RealInterval next = *branch_map(m, d, x, run).intersect(x);
      const double next_width = next.width_upper();
      if (next_width <= tol) return next;
      if (next_width >= width) break;
      x = std::move(next);
      width = next_width;
    }
    if (!run.can_escalate()) {
      throw PrecisionExhausted("fixed point tolerance unreachable within " + std::to_string(ctx.max_bits()) + " bits");
    }
  }
}

namespace {

void check_encode_args(const mpq_class& x, std::size_t n) {
  if (x < 0 || x > 1) throw InvalidInput("x must lie in [0,1], got " + x.get_str());
  if (n == 0) throw InvalidInput("digit count must be at least 1");
}

// One attempt at fixed precision.  Returns the number of digits certified;
// equal to n on success.
using Attempt = std::size_t (*)(const mpq_class&, Base, std::size_t, const PrecisionContext&, std::vector<int>&);

std::size_t orbit_attempt(const mpq_class& x, Base m, std::size_t n, const PrecisionContext& ctx,
                          std::vector<int>& digits) {
  const unsigned bits = ctx.bits();
  const RealInterval image_range = RealInterval::from_bounds(RealInterval::point(1, bits).lo(),
                                                             RealInterval::point(m.value(), bits).hi());
  RealInterval t = RealInterval::exact(x, bits);
  for (std::size_t k = 0; k < n; ++k) {
    // m^t for t in [0,1) lies in [1, m).
    const std::optional<RealInterval> power = pow_base(m.value(), t, ctx).intersect(image_range);
    if (!power) return k;
    const long cell = mpfr_get_si(power->lo().raw(), MPFR_RNDD);
    if (cell < 1 || cell > m.max_digit() || compare(power->hi(), cell + 1) >= 0) return k;
    digits.push_back(static_cast<int>(cell));
    const std::optional<RealInterval> next = (*power - cell).clamp_unit();
    if (!next) return k + 1;
    t = *next;
  }
  return n;
}

std::size_t subdivide_attempt(const mpq_class& x, Base m, std::size_t n, const PrecisionContext& ctx,
                              std::vector<int>& digits) {
  Word w(m);
  for (std::size_t k = 0; k < n; ++k) {
    // Largest i with value(w; log_m i) <= x.  i = 1 holds by the previous
    // level, and x < value(w; 1) likewise.
    int lo = 1;
    int hi = m.max_digit();
    while (lo < hi) {
      const int mid = (lo + hi + 1) / 2;
      const RealInterval boundary =
          apply_word(w, log_base(m.value(), RealInterval::point(mid, ctx.bits()), ctx), ctx);
      if (compare(boundary.hi(), x) <= 0) {
        lo = mid;
      } else if (compare(boundary.lo(), x) > 0) {
        hi = mid - 1;
      } else {
        return k;
      }
    }
    digits.push_back(lo);
    w = w.extended(lo);
  }
  return n;
}

EncodeResult encode_with(Attempt attempt, const char* name, const mpq_class& x, Base m, std::size_t n,
                         const PrecisionContext& ctx) {
  check_encode_args(x, n);
  if (x == 1) return {Word::repeated(m, m.max_digit(), n), true, ctx.bits()};

  for (PrecisionContext run = ctx;; run = run.escalated()) {
    std::vector<int> digits;
    digits.reserve(n);
    const std::size_t done = attempt(x, m, n, run, digits);
    if (done == n) return {Word(m, std::move(digits)), true, run.bits()};
    if (!run.can_escalate()) {
      digits.resize(done);
      throw EncodeExhausted(std::string(name) + ": digit " + std::to_string(done + 1) + " of " + x.get_str() +
                                " is ambiguous at " + std::to_string(run.bits()) +
                                " bits (x is at or near a cylinder endpoint)",
                            EncodeResult{Word(m, std::move(digits)), false, run.bits()});
    }
  }
}

}  // namespace

EncodeResult encode_orbit(const mpq_class& x, Base m, std::size_t n, const PrecisionContext& ctx) {
  return encode_with(&orbit_attempt, "encode_orbit", x, m, n, ctx);
}

EncodeResult encode_subdivide(const mpq_class& x, Base m, std::size_t n, const PrecisionContext& ctx) {
  return encode_with(&subdivide_attempt, "encode_subdivide", x, m, n, ctx);
}

}  // namespace contlog
