#include "contlog/frequency.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace contlog {

FrequencyVector::FrequencyVector(Base base, std::vector<double> p) : base_(base), p_(std::move(p)) {
  const auto expected = static_cast<std::size_t>(base.max_digit());
  if (p_.size() != expected) {
    throw InvalidProbabilityVector("frequency vector for base " + std::to_string(base.value()) + " needs " +
                                   std::to_string(expected) + " entries, got " + std::to_string(p_.size()));
  }
  double sum = 0.0;
  for (double v : p_) {
    if (!(v > 0.0 && v < 1.0)) {
      throw InvalidProbabilityVector("frequency entries must lie strictly inside (0,1), got " + std::to_string(v));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw InvalidProbabilityVector("frequency entries must sum to 1, got sum - 1 = " + std::to_string(sum - 1.0));
  }
}

FrequencyVector FrequencyVector::uniform(Base base) {
  const int k = base.max_digit();
  return FrequencyVector(base, std::vector<double>(static_cast<std::size_t>(k), 1.0 / k));
}

double digit_expansion_rate(Base m, int i) {
  m.check_digit(i);
  return std::log(static_cast<double>(m.value() - 1)) + i * std::log(static_cast<double>(m.value()));
}

double freq_dim_upper(const FrequencyVector& p) {
  double entropy = 0.0;
  double lyapunov = 0.0;
  for (std::size_t k = 0; k < p.values().size(); ++k) {
    const double pi = p[k];
    entropy -= pi * std::log(pi);
    lyapunov += pi * std::log(digit_expansion_rate(p.base(), static_cast<int>(k) + 1));
  }
  return entropy / lyapunov;
}

MaxFreqResult max_freq_dim(Base m, double tol) {
  std::vector<double> ratios;
  for (int i = 1; i <= m.max_digit(); ++i) ratios.push_back(1.0 / digit_expansion_rate(m, i));

  const double d = moran_solve(ratios, tol);
  if (!(d < 1.0)) {
    throw std::logic_error("maximal frequency dimension " + std::to_string(d) + " is not below 1 for base " +
                           std::to_string(m.value()));
  }

  std::vector<double> p(ratios.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < ratios.size(); ++k) {
    p[k] = std::pow(ratios[k], d);
    sum += p[k];
  }
  // Absorb the bisection residual so the vector sums to 1 in floating point.
  for (double& v : p) v /= sum;
  return {d, FrequencyVector(m, std::move(p))};
}

double harmonic_check(Base m) {
  double sum = 0.0;
  for (int i = 1; i <= m.max_digit(); ++i) sum += 1.0 / digit_expansion_rate(m, i);
  return sum;
}

std::vector<CurvePoint> bound_curve(std::size_t grid_points, Base m) {
  if (m.value() != 3) throw InvalidInput("the frequency bound curve is defined for base 3 only");
  if (grid_points < 2) throw InvalidGrid("curve grid needs at least 2 points");
  std::vector<CurvePoint> curve(grid_points);
  const double denom = static_cast<double>(grid_points + 1);
  for (std::size_t k = 0; k < grid_points; ++k) {
    const double p = static_cast<double>(k + 1) / denom;
    curve[k] = {p, freq_dim_upper(FrequencyVector(m, {p, 1.0 - p}))};
  }
  return curve;
}

std::string curve_csv(std::span<const CurvePoint> curve) {
  std::string out = "p,upper_bound\n";
  char line[64];
  for (const CurvePoint& point : curve) {
    std::snprintf(line, sizeof line, "%.12g,%.12g\n", point.p, point.upper_bound);
    out += line;
  }
  return out;
}

}  // namespace contlog
