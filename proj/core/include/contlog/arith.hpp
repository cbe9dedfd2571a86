#pragma once

#include "contlog/precision.hpp"
#include "contlog/real_interval.hpp"

namespace contlog {

// Extra precision used inside log_base and pow_base before the final
// outward rounding to the caller's precision.
inline constexpr unsigned kGuardBits = 16;

/// Enclosure of ln m at `bits` of precision.  Values are computed once per
/// (m, bits) pair and shared; the returned reference stays valid for the
/// lifetime of the process.  Safe to call concurrently.
const RealInterval& ln_of_base(int m, unsigned bits);

/// Outward-rounded natural logarithm.  Throws NonPositiveArgument unless
/// x.lo() > 0.
RealInterval ln_interval(const RealInterval& x, unsigned bits);

/// Outward-rounded exponential.  Throws PrecisionExhausted on overflow.
RealInterval exp_interval(const RealInterval& x, unsigned bits);

/// Rounds both endpoints outward to `bits`.
RealInterval round_outward(const RealInterval& x, unsigned bits);

/// Encloses { log_m(t) : t in x }.
///
/// The result width is at most width(x) / (x.lo * ln m) plus a rounding
/// slack of a few units in the last place at ctx.bits().
RealInterval log_base(int m, const RealInterval& x, const PrecisionContext& ctx);

/// Encloses { m^t : t in x }.  Inclusion-monotone at fixed precision.
RealInterval pow_base(int m, const RealInterval& x, const PrecisionContext& ctx);

}  // namespace contlog
