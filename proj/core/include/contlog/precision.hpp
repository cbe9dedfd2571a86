#pragma once

#include <algorithm>

#include "contlog/error.hpp"

namespace contlog {

// Working precision for certified computation plus the cap that adaptive
// callers may escalate to.
class PrecisionContext {
 public:
  static constexpr unsigned kMinBits = 32;
  static constexpr unsigned kDefaultBits = 128;
  static constexpr unsigned kDefaultMaxBits = 16384;

  PrecisionContext() = default;
  PrecisionContext(unsigned bits, unsigned max_bits) : bits_(bits), max_bits_(max_bits) {
    if (bits < kMinBits) throw InvalidInput("precision must be at least 32 bits");
    if (max_bits < bits) throw InvalidInput("max_bits must not be below bits");
  }
  explicit PrecisionContext(unsigned bits) : PrecisionContext(bits, std::max(bits, kDefaultMaxBits)) {}

  unsigned bits() const noexcept { return bits_; }
  unsigned max_bits() const noexcept { return max_bits_; }

  bool can_escalate() const noexcept { return bits_ < max_bits_; }

  // Doubles the working precision, saturating at the cap.
  PrecisionContext escalated() const { return {std::min(2 * bits_, max_bits_), max_bits_}; }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  unsigned bits_ = kDefaultBits;
  unsigned max_bits_ = kDefaultMaxBits;
};

}  // namespace contlog
