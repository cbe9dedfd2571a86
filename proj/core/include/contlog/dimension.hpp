#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "contlog/codec.hpp"
#include "contlog/precision.hpp"
#include "contlog/real_interval.hpp"

namespace contlog {

// Allowed digits D ⊆ {1, ..., m-1} with |D| >= 2, kept sorted and unique.
// Names the set [D^N]_m of reals whose expansion uses only digits from D.
class DigitSet {
 public:
  DigitSet(Base base, std::vector<int> members);

  static DigitSet parse(Base base, std::string_view text);
  static DigitSet full(Base base);

  Base base() const noexcept { return base_; }
  const std::vector<int>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  std::string to_string() const;

 private:
  Base base_;
  std::vector<int> members_;
};

// lower <= dim_H [D^N]_m <= upper, computed from words of length n.
struct DimensionBracket {
  std::size_t n = 0;
  double lower = 0.0;
  double upper = 1.0;

  double gap() const noexcept { return upper - lower; }
};

/// Derivative of t -> value(w; t) over x ⊆ [0,1], by the chain rule with
/// the innermost digit applied first:
///   prod_i 1 / ((d_i + x_{i-1}) ln m),  x_0 = x,  x_i = T_{d_i}(x_{i-1}).
/// Strictly decreasing in t, so its extremes over [0,1] sit at t = 0 (max)
/// and t = 1 (min).
RealInterval word_derivative(const Word& w, const RealInterval& x, const PrecisionContext& ctx);

// Bisection bracket [lower, upper] around the root s of sum_i r_i^s = 1.
struct MoranRoot {
  double lower = 0.0;
  double upper = 0.0;

  double value() const noexcept { return 0.5 * (lower + upper); }
};

inline constexpr double kDefaultMoranTolerance = 1e-12;

/// Root of sum_i r_i^s = 1 for ratios r_i in (0,1), bracketed to width
/// <= tol.  A single ratio has root 0.  Throws EmptyRatioList or
/// RatioOutOfRange.
MoranRoot moran_root(std::span<const double> ratios, double tol = kDefaultMoranTolerance);

/// Midpoint of moran_root.
double moran_solve(std::span<const double> ratios, double tol = kDefaultMoranTolerance);

/// Certified bounds on the Moran root for ratios known only as enclosures.
/// moran_lower_bound returns s with s <= root(r) for every admissible choice
/// of ratios inside the enclosures; moran_upper_bound returns s >= root(r).
/// Both are within tol of the respective extreme root unless the rounding
/// floor of ctx.bits() is reached first.
double moran_lower_bound(std::span<const RealInterval> ratios, double tol, const PrecisionContext& ctx);
double moran_upper_bound(std::span<const RealInterval> ratios, double tol, const PrecisionContext& ctx);

struct BracketOptions {
  // Maximum number of words |D|^n a single level may enumerate.
  std::uint64_t word_budget = std::uint64_t{1} << 24;
  double moran_tolerance = kDefaultMoranTolerance;
  // 0 = default_thread_count().
  unsigned threads = 0;
};

// Enclosures of the derivative of value(w; .) at t = 0 and t = 1 for every
// word w in D^n.  The two vectors are index-aligned (same word at the same
// index); the word order itself is unspecified.
struct EndpointDerivatives {
  std::vector<RealInterval> at_zero;
  std::vector<RealInterval> at_one;
};

EndpointDerivatives endpoint_derivatives(const DigitSet& digits, std::size_t n, const PrecisionContext& ctx,
                                         const BracketOptions& options = {});

/// Dimension bracket from all words of length n.  The lower end solves the
/// Moran equation over the minimal derivatives (at t = 1) and the upper end
/// over the maximal derivatives (at t = 0), each rounded outward; the upper
/// end is further capped at 1.  Throws BudgetExceeded if |D|^n is over
/// options.word_budget.
DimensionBracket dimension_bracket(const DigitSet& digits, std::size_t n, const PrecisionContext& ctx,
                                   const BracketOptions& options = {});

struct RefineResult {
  // Componentwise best bounds seen; `best.n` is the last level computed.
  DimensionBracket best;
  bool tolerance_reached = false;
  // Set when the loop stopped because the next level was over budget.
  bool budget_exhausted = false;
  // One entry per computed level, in order.  Levels are not assumed to nest.
  std::vector<DimensionBracket> history;
};

RefineResult refine_bracket(const DigitSet& digits, double tol, std::size_t n_max, const PrecisionContext& ctx,
                            const BracketOptions& options = {});

}  // namespace contlog
