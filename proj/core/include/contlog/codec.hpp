#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "contlog/error.hpp"
#include "contlog/precision.hpp"
#include "contlog/real_interval.hpp"

namespace contlog {

// Base m >= 3 of a continued-logarithm expansion.  Digits range over
// {1, ..., m-1}.
class Base {
 public:
  explicit Base(int m);

  int value() const noexcept { return m_; }
  int max_digit() const noexcept { return m_ - 1; }
  bool is_digit(int d) const noexcept { return d >= 1 && d <= m_ - 1; }

  // Throws InvalidDigit unless is_digit(d).
  void check_digit(int d) const;

  friend auto operator<=>(const Base&, const Base&) = default;

 private:
  int m_;
};

// Finite digit sequence (d_1, ..., d_n) over a base.  Names the cylinder of
// reals whose expansion starts with these digits.  Ordering is by base, then
// lexicographic on the digits, which matches the numeric order of the
// cylinders for words of equal length.
class Word {
 public:
  explicit Word(Base base, std::vector<int> digits = {});

  static Word repeated(Base base, int digit, std::size_t count);

  // Comma-separated digits, e.g. "1,2,1".  Whitespace around items is
  // ignored; an empty string yields the empty word.
  static Word parse(Base base, std::string_view text);

  Base base() const noexcept { return base_; }
  const std::vector<int>& digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }

  Word extended(int digit) const;
  Word prefix(std::size_t length) const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  Base base_;
  std::vector<int> digits_;
};

struct EncodeResult {
  Word word;
  // Every digit was proven by interval enclosure.
  bool certified = false;
  // Precision of the run that produced `word`.
  unsigned bits_used = 0;
};

// Encoding could not be certified at the precision cap.  `partial` carries
// the digits that were certified before the ambiguity (certified == false).
class EncodeExhausted : public PrecisionExhausted {
 public:
  EncodeExhausted(const std::string& what, EncodeResult partial)
      : PrecisionExhausted(what), partial_(std::move(partial)) {}

  const EncodeResult& partial() const noexcept { return partial_; }

 private:
  EncodeResult partial_;
};

/// Branch map T_d(t) = log_m(d + t), the inverse branch of t -> m^t mod 1 on
/// the cell [log_m d, log_m(d+1)).  Encloses { T_d(t) : t in x ∩ [0,1] };
/// the result is intersected with [0,1], which keeps compositions
/// inclusion-monotone.
RealInterval branch_map(Base m, int d, const RealInterval& x, const PrecisionContext& ctx);

/// value(w; t) = T_{d_1}(T_{d_2}(... T_{d_n}(t))), with d_1 outermost.
RealInterval apply_word(const Word& w, const RealInterval& x, const PrecisionContext& ctx);

struct CylinderEndpoints {
  RealInterval left;   // encloses value(w; 0)
  RealInterval right;  // encloses value(w; 1)
};

CylinderEndpoints word_endpoints(const Word& w, const PrecisionContext& ctx);

/// Cylinder interval [value(w; 0), value(w; 1)], outward rounded.  The empty
/// word maps to [0, 1].  For any digit d, word_interval(w.extended(d)) is
/// contained in word_interval(w).
RealInterval word_interval(const Word& w, const PrecisionContext& ctx);

/// Finite-prefix approximation of the value of an infinite digit sequence:
/// the cylinder of the given prefix.
RealInterval decode(const Word& w, const PrecisionContext& ctx);

/// Unique solution of t = log_m(d + t) in [0, 1], i.e. the value of the
/// constant sequence (d, d, d, ...), enclosed to width <= tol.
RealInterval fixed_point(Base m, int d, double tol, const PrecisionContext& ctx);

/// First n digits of x in [0, 1] via the orbit of f(t) = m^t mod 1.  A digit
/// is emitted only when the enclosure of m^{f^{k-1}(x)} lies inside [i, i+1)
/// for a single integer i; otherwise the whole run restarts at doubled
/// precision.  x = 1 yields (m-1, ..., m-1).
EncodeResult encode_orbit(const mpq_class& x, Base m, std::size_t n, const PrecisionContext& ctx);

/// Same contract as encode_orbit, computed without the expanding map: each
/// digit is chosen by locating x among the child cylinders of the current
/// word.  Agrees with encode_orbit whenever both certify.
EncodeResult encode_subdivide(const mpq_class& x, Base m, std::size_t n, const PrecisionContext& ctx);

}  // namespace contlog
