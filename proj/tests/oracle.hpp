#pragma once

// Independent high-precision reference values for the tests.  Everything
// here uses Boost's pure C++ cpp_bin_float, which shares no code with the
// MPFR-backed library, and evaluates formulas directly rather than through
// the library's interval routines.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <vector>

namespace contlog::oracle {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>>;
using Real200 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200, boost::multiprecision::digit_base_2>>;

inline Real log_base(int m, const Real& t) { return log(t) / log(Real(m)); }

inline Real pow_base(int m, const Real& t) { return exp(t * log(Real(m))); }

// value(w; x) = T_{d_1}(... T_{d_n}(x)), innermost digit last in `digits`.
inline Real word_value(int m, const std::vector<int>& digits, Real x) {
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) x = log_base(m, Real(*it) + x);
  return x;
}

// Central difference of value(w; .) at x with step h.
inline Real word_slope_fd(int m, const std::vector<int>& digits, const Real& x, const Real& h) {
  return (word_value(m, digits, x + h) - word_value(m, digits, x - h)) / (2 * h);
}

// Plain (uncertified) orbit of t -> m^t mod 1 at 256 bits.
inline std::vector<int> orbit_digits(int m, Real x, int n) {
  std::vector<int> out;
  for (int k = 0; k < n; ++k) {
    const Real y = pow_base(m, x);
    const int d = static_cast<int>(floor(y));
    out.push_back(d);
    x = y - d;
  }
  return out;
}

// Root of sum r_i^s = 1 by bisection at 200 bits.
inline Real200 moran_root(const std::vector<Real200>& ratios) {
  auto sum_at = [&](const Real200& s) {
    Real200 sum = 0;
    for (const Real200& r : ratios) sum += pow(r, s);
    return sum;
  };
  Real200 lo = 0;
  Real200 hi = 1;
  while (sum_at(hi) >= 1) hi *= 2;
  for (int i = 0; i < 400; ++i) {
    const Real200 mid = (lo + hi) / 2;
    (sum_at(mid) >= 1 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace contlog::oracle
