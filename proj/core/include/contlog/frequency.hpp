#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "contlog/codec.hpp"
#include "contlog/dimension.hpp"

namespace contlog {

// Strictly positive probability vector (p_1, ..., p_{m-1}) of digit
// frequencies for base m.
class FrequencyVector {
 public:
  static constexpr double kSumTolerance = 1e-12;

  // Throws InvalidProbabilityVector unless p has m-1 entries in (0,1)
  // summing to 1 within kSumTolerance.
  FrequencyVector(Base base, std::vector<double> p);

  static FrequencyVector uniform(Base base);

  Base base() const noexcept { return base_; }
  const std::vector<double>& values() const noexcept { return p_; }
  double operator[](std::size_t i) const { return p_[i]; }

 private:
  Base base_;
  std::vector<double> p_;
};

// ln(m-1) + i ln m: minus the log of the largest derivative of T_i on
// [log_m(m-1), 1], i.e. the per-digit expansion rate in the frequency bound.
double digit_expansion_rate(Base m, int i);

/// Entropy-to-Lyapunov ratio
///   U_m(p) = (-sum p_i ln p_i) / (sum p_i ln(ln(m-1) + i ln m)),
/// an upper bound for the Hausdorff dimension of the set of reals whose
/// digit frequencies are p.  Natural logs throughout; the ratio does not
/// depend on the log base.
double freq_dim_upper(const FrequencyVector& p);

struct MaxFreqResult {
  double d = 0.0;
  FrequencyVector p_star;
};

/// Maximizer of U_m: d solves sum_i (ln(m-1) + i ln m)^(-d) = 1 and
/// p_star_i = (ln(m-1) + i ln m)^(-d), with U_m(p_star) = d.  Throws
/// std::logic_error if the solved d is not below 1.
MaxFreqResult max_freq_dim(Base m, double tol = 1e-14);

/// sum_i 1 / (ln(m-1) + i ln m); below 1 for every m >= 3, which forces d < 1.
double harmonic_check(Base m);

struct CurvePoint {
  double p = 0.0;
  double upper_bound = 0.0;
};

/// U_3(p, 1-p) on the grid p = k / (grid_points + 1), k = 1..grid_points.
/// Only base 3 is supported; other bases throw InvalidInput.
std::vector<CurvePoint> bound_curve(std::size_t grid_points, Base m = Base(3));

/// CSV with header "p,upper_bound" and 12 significant digits per value.
std::string curve_csv(std::span<const CurvePoint> curve);

}  // namespace contlog
