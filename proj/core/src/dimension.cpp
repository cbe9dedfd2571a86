#include "contlog/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <optional>
#include <stdexcept>

#include "contlog/arith.hpp"
#include "contlog/parallel.hpp"

namespace contlog {

DigitSet::DigitSet(Base base, std::vector<int> members) : base_(base), members_(std::move(members)) {
  for (int d : members_) base_.check_digit(d);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.size() < 2) throw InvalidInput("digit set needs at least two distinct digits");
}

DigitSet DigitSet::parse(Base base, std::string_view text) {
  return DigitSet(base, Word::parse(base, text).digits());
}

DigitSet DigitSet::full(Base base) {
  std::vector<int> all;
  for (int d = 1; d <= base.max_digit(); ++d) all.push_back(d);
  return DigitSet(base, std::move(all));
}

std::string DigitSet::to_string() const { return Word(base_, members_).to_string(); }

namespace {

// Image of the current point and derivative accumulated so far, for one
// starting point of the chain rule.
struct Chain {
  RealInterval image;
  RealInterval slope;
};

Chain chain_step(Base m, int d, const Chain& c, const PrecisionContext& ctx) {
  const RealInterval& ln_m = ln_of_base(m.value(), ctx.bits());
  const RealInterval factor = RealInterval::point(1, ctx.bits()) / ((c.image + d) * ln_m);
  return {branch_map(m, d, c.image, ctx), c.slope * factor};
}

std::uint64_t word_count(std::size_t alphabet, std::size_t n, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (count > cap / alphabet) return cap + 1;
    count *= alphabet;
  }
  return count;
}

struct Pair {
  Chain zero;
  Chain one;
};

void descend(const DigitSet& digits, std::size_t remaining, const Pair& state, const PrecisionContext& ctx,
             EndpointDerivatives& out) {
  if (remaining == 0) {
    out.at_zero.push_back(state.zero.slope);
    out.at_one.push_back(state.one.slope);
    return;
  }
  for (int d : digits.members()) {
    const Pair next{chain_step(digits.base(), d, state.zero, ctx), chain_step(digits.base(), d, state.one, ctx)};
    descend(digits, remaining - 1, next, ctx, out);
  }
}

void check_ratio(double r) {
  if (!(r > 0.0 && r < 1.0)) throw RatioOutOfRange("Moran ratio must lie in (0,1), got " + std::to_string(r));
}

void check_tolerance(double tol) {
  if (!(tol > 0.0)) throw InvalidInput("Moran tolerance must be positive");
}

// Bisection on a monotone predicate over s >= 0.  For Side::below the
// predicate holds on [0, root] and the result satisfies holds(lower) and
// !holds(upper); for Side::above it holds on [root, inf) and the result
// satisfies !holds(lower) (or lower == 0) and holds(upper).
enum class Side { below, above };

template <typename Pred>
MoranRoot bisect_monotone(Pred holds, Side side, double tol) {
  constexpr double kLimit = 1u << 20;
  const bool want = side == Side::below;
  if (side == Side::above && holds(0.0)) return {0.0, 0.0};
  double lo = 0.0;
  double hi = 1.0;
  while (holds(hi) == want) {
    lo = hi;
    hi *= 2.0;
    if (hi > kLimit) throw std::logic_error("Moran root search diverged");
  }
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    (holds(mid) == want ? lo : hi) = mid;
  }
  return {lo, hi};
}

// Sum of exp(s * L_i) rounded in one direction, compared against 1.
int directed_sum_vs_one(std::span<const BigFloat> logs, double s, mpfr_rnd_t rnd, unsigned bits) {
  BigFloat exponent(53);
  mpfr_set_d(exponent.raw(), s, MPFR_RNDN);  // exact
  BigFloat sum(bits);
  BigFloat term(bits);
  for (const BigFloat& log_r : logs) {
    mpfr_mul(term.raw(), log_r.raw(), exponent.raw(), rnd);
    mpfr_exp(term.raw(), term.raw(), rnd);
    mpfr_add(sum.raw(), sum.raw(), term.raw(), rnd);
  }
  return compare(sum, 1L);
}

std::vector<BigFloat> endpoint_logs(std::span<const RealInterval> ratios, bool lower_end, unsigned bits) {
  if (ratios.empty()) throw EmptyRatioList("Moran equation needs at least one ratio");
  std::vector<BigFloat> logs;
  logs.reserve(ratios.size());
  for (const RealInterval& r : ratios) {
    if (r.lo().sign() <= 0 || compare(r.hi(), 1L) >= 0) {
      throw RatioOutOfRange("Moran ratio enclosure " + r.to_string() + " is not inside (0,1)");
    }
    BigFloat l(bits);
    if (lower_end) {
      mpfr_log(l.raw(), r.lo().raw(), MPFR_RNDD);
    } else {
      mpfr_log(l.raw(), r.hi().raw(), MPFR_RNDU);
    }
    logs.push_back(std::move(l));
  }
  return logs;
}

}  // namespace

RealInterval word_derivative(const Word& w, const RealInterval& x, const PrecisionContext& ctx) {
  if (w.empty()) throw InvalidInput("word_derivative needs a nonempty word");
  const std::optional<RealInterval> start = x.clamp_unit();
  if (!start) throw InvalidInput("word_derivative point " + x.to_string() + " is outside [0,1]");
  Chain chain{*start, RealInterval::point(1, ctx.bits())};
  for (auto it = w.digits().rbegin(); it != w.digits().rend(); ++it) {
    chain = chain_step(w.base(), *it, chain, ctx);
  }
  return chain.slope;
}

MoranRoot moran_root(std::span<const double> ratios, double tol) {
  if (ratios.empty()) throw EmptyRatioList("Moran equation needs at least one ratio");
  check_tolerance(tol);
  std::vector<double> logs;
  logs.reserve(ratios.size());
  for (double r : ratios) {
    check_ratio(r);
    logs.push_back(std::log(r));
  }
  if (ratios.size() == 1) return {0.0, 0.0};

  auto pressure_positive = [&](double s) {
    long double sum = 0.0L;
    for (double l : logs) sum += std::exp(static_cast<long double>(s) * l);
    return sum >= 1.0L;
  };
  return bisect_monotone(pressure_positive, Side::below, tol);
}

double moran_solve(std::span<const double> ratios, double tol) { return moran_root(ratios, tol).value(); }

double moran_lower_bound(std::span<const RealInterval> ratios, double tol, const PrecisionContext& ctx) {
  check_tolerance(tol);
  const std::vector<BigFloat> logs = endpoint_logs(ratios, true, ctx.bits());
  return bisect_monotone(
      [&](double s) { return directed_sum_vs_one(logs, s, MPFR_RNDD, ctx.bits()) >= 0; }, Side::below, tol).lower;
}

double moran_upper_bound(std::span<const RealInterval> ratios, double tol, const PrecisionContext& ctx) {
  check_tolerance(tol);
  const std::vector<BigFloat> logs = endpoint_logs(ratios, false, ctx.bits());
  return bisect_monotone(
      [&](double s) { return directed_sum_vs_one(logs, s, MPFR_RNDU, ctx.bits()) <= 0; }, Side::above, tol).upper;
}

EndpointDerivatives endpoint_derivatives(const DigitSet& digits, std::size_t n, const PrecisionContext& ctx,
                                         const BracketOptions& options) {
  if (n == 0) throw InvalidInput("word length must be at least 1");
  const std::uint64_t total = word_count(digits.size(), n, options.word_budget);
  if (total > options.word_budget) {
    throw BudgetExceeded(std::to_string(digits.size()) + "^" + std::to_string(n) + " words exceed the budget of " +
                         std::to_string(options.word_budget));
  }

  // Split on the innermost `split` digits.  Concatenating the tasks in
  // index order reproduces the sequential depth-first order exactly.
  const unsigned threads = options.threads == 0 ? default_thread_count() : options.threads;
  std::size_t split = 0;
  std::size_t tasks = 1;
  while (split < n && threads > 1 && tasks < 8 * static_cast<std::size_t>(threads)) {
    tasks *= digits.size();
    ++split;
  }

  const Pair root{{RealInterval::point(0, ctx.bits()), RealInterval::point(1, ctx.bits())},
                  {RealInterval::point(1, ctx.bits()), RealInterval::point(1, ctx.bits())}};
  std::vector<EndpointDerivatives> parts(tasks);
  parallel_for(tasks, threads, [&](std::size_t task) {
    Pair state = root;
    std::size_t code = task;
    std::vector<int> inner(split);
    for (std::size_t k = split; k-- > 0;) {
      inner[k] = digits.members()[code % digits.size()];
      code /= digits.size();
    }
    for (int d : inner) {
      state = Pair{chain_step(digits.base(), d, state.zero, ctx), chain_step(digits.base(), d, state.one, ctx)};
    }
    descend(digits, n - split, state, ctx, parts[task]);
  });

  EndpointDerivatives out;
  out.at_zero.reserve(total);
  out.at_one.reserve(total);
  for (EndpointDerivatives& part : parts) {
    std::move(part.at_zero.begin(), part.at_zero.end(), std::back_inserter(out.at_zero));
    std::move(part.at_one.begin(), part.at_one.end(), std::back_inserter(out.at_one));
  }
  return out;
}

DimensionBracket dimension_bracket(const DigitSet& digits, std::size_t n, const PrecisionContext& ctx,
                                   const BracketOptions& options) {
  const EndpointDerivatives derivatives = endpoint_derivatives(digits, n, ctx, options);
  DimensionBracket bracket;
  bracket.n = n;
  bracket.lower = std::max(0.0, moran_lower_bound(derivatives.at_one, options.moran_tolerance, ctx));
  // Any subset of the line has dimension at most 1.
  bracket.upper = std::min(1.0, moran_upper_bound(derivatives.at_zero, options.moran_tolerance, ctx));
  if (!(bracket.lower <= bracket.upper)) {
    throw std::logic_error("dimension bracket inverted at n=" + std::to_string(n));
  }
  return bracket;
}

RefineResult refine_bracket(const DigitSet& digits, double tol, std::size_t n_max, const PrecisionContext& ctx,
                            const BracketOptions& options) {
  if (!(tol > 0.0)) throw InvalidInput("refine tolerance must be positive");
  if (n_max == 0) throw InvalidInput("n_max must be at least 1");

  RefineResult result;
  result.best = DimensionBracket{0, 0.0, 1.0};
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (word_count(digits.size(), n, options.word_budget) > options.word_budget) {
      result.budget_exhausted = true;
      break;
    }
    const DimensionBracket level = dimension_bracket(digits, n, ctx, options);
    result.history.push_back(level);
    result.best.n = n;
    result.best.lower = std::max(result.best.lower, level.lower);
    result.best.upper = std::min(result.best.upper, level.upper);
    if (result.best.gap() <= tol) {
      result.tolerance_reached = true;
      break;
    }
  }
  return result;
}

}  // namespace contlog
