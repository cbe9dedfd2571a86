#include "contlog/arith.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "contlog/error.hpp"

namespace contlog {

namespace {

void require_base(int m) {
  if (m < 3) throw InvalidInput("base must be at least 3, got " + std::to_string(m));
}

class LnCache {
 public:
  const RealInterval& get(int m, unsigned bits) {
    const Key key{m, bits};
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    RealInterval fresh = compute(m, bits);
    std::unique_lock lock(mutex_);
    // A concurrent filler may have won; emplace keeps whichever came first.
    return values_.emplace(key, std::move(fresh)).first->second;
  }

 private:
  using Key = std::pair<int, unsigned>;

  static RealInterval compute(int m, unsigned bits) {
    BigFloat lo(bits);
    BigFloat hi(bits);
    mpfr_log_ui(lo.raw(), static_cast<unsigned long>(m), MPFR_RNDD);
    mpfr_log_ui(hi.raw(), static_cast<unsigned long>(m), MPFR_RNDU);
    return RealInterval::from_bounds(std::move(lo), std::move(hi));
  }

  std::shared_mutex mutex_;
  std::map<Key, RealInterval> values_;
};

LnCache& ln_cache() {
  static LnCache cache;
  return cache;
}

}  // namespace

const RealInterval& ln_of_base(int m, unsigned bits) {
  require_base(m);
  return ln_cache().get(m, bits);
}

RealInterval ln_interval(const RealInterval& x, unsigned bits) {
  if (x.lo().sign() <= 0) throw NonPositiveArgument("logarithm of an interval that is not strictly positive");
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_log(lo.raw(), x.lo().raw(), MPFR_RNDD);
  mpfr_log(hi.raw(), x.hi().raw(), MPFR_RNDU);
  return RealInterval::from_bounds(std::move(lo), std::move(hi));
}

RealInterval exp_interval(const RealInterval& x, unsigned bits) {
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_exp(lo.raw(), x.lo().raw(), MPFR_RNDD);
  mpfr_exp(hi.raw(), x.hi().raw(), MPFR_RNDU);
  if (!hi.is_finite()) throw PrecisionExhausted("exponential overflows the representable range");
  return RealInterval::from_bounds(std::move(lo), std::move(hi));
}

RealInterval round_outward(const RealInterval& x, unsigned bits) {
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_set(lo.raw(), x.lo().raw(), MPFR_RNDD);
  mpfr_set(hi.raw(), x.hi().raw(), MPFR_RNDU);
  return RealInterval::from_bounds(std::move(lo), std::move(hi));
}

// Intermediate results carry kGuardBits extra bits so that the final
// outward rounding dominates the slack: at most one ulp per endpoint.
RealInterval log_base(int m, const RealInterval& x, const PrecisionContext& ctx) {
  require_base(m);
  const unsigned work = ctx.bits() + kGuardBits;
  return round_outward(ln_interval(x, work) / ln_of_base(m, work), ctx.bits());
}

RealInterval pow_base(int m, const RealInterval& x, const PrecisionContext& ctx) {
  require_base(m);
  const unsigned work = ctx.bits() + kGuardBits;
  return round_outward(exp_interval(x * ln_of_base(m, work), work), ctx.bits());
}

}  // namespace contlog
