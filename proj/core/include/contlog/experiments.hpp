#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "contlog/codec.hpp"
#include "contlog/precision.hpp"

namespace contlog {

// Share of each digit 1..m-1 among the digits of w.  Throws InvalidInput on
// the empty word.
std::vector<double> empirical_frequency(const Word& w);

struct CensusReport {
  int base = 0;
  std::uint64_t samples = 0;
  std::size_t digits_per_sample = 0;
  std::uint64_t seed = 0;
  // Samples whose encoding hit PrecisionExhausted; excluded from the
  // statistics below.
  std::uint64_t skipped = 0;
  // For digit i (index i-1): fraction of encoded samples containing i.
  std::vector<double> per_digit_occurrence;
  // For digit i (index i-1): mean over encoded samples of its frequency.
  std::vector<double> mean_frequency;
  std::string generator;
};

inline constexpr const char* kCensusGenerator = "mt19937_64 seeded by seed_seq(seed, sample index)";

// Sample `index` of the census stream: k / 2^128 with k a uniformly drawn
// 128-bit integer.
mpq_class census_sample(std::uint64_t seed, std::uint64_t index);

// Census over explicit points.  The seed field of the report is left 0.
CensusReport census_of(Base m, std::span<const mpq_class> points, std::size_t digits_per_sample,
                       const PrecisionContext& ctx, unsigned threads = 0);

// Draws `samples` points with census_sample and encodes each with
// encode_orbit.  The report is identical for any thread count.
CensusReport occurrence_census(Base m, std::uint64_t samples, std::size_t digits_per_sample, std::uint64_t seed,
                               const PrecisionContext& ctx, unsigned threads = 0);

struct StructureReport {
  int base = 0;
  std::size_t level = 0;
  std::size_t cells = 0;
  double tolerance = 0.0;
  // Upper bounds over all neighbouring cells (and the ends of [0,1]).
  double worst_gap = 0.0;
  double worst_overlap = 0.0;
  // Largest amount by which a cell enclosure sticks out of its parent's.
  double worst_nesting_excess = 0.0;
  bool covers_unit = false;
  bool order_ok = false;
  bool nesting_ok = false;
  bool pass = false;
};

inline constexpr double kStructureTolerance = 0x1p-40;
inline constexpr std::uint64_t kStructureCellBudget = std::uint64_t{1} << 20;
inline constexpr int kStructureMaxBase = 64;

/// Checks that the (m-1)^level cylinders of the given level, taken in
/// lexicographic word order, tile [0,1] in increasing order with gaps and
/// overlaps of at most kStructureTolerance, and that each lies inside its
/// parent cylinder.  Throws BudgetExceeded above kStructureCellBudget cells
/// and InvalidInput above kStructureMaxBase.
StructureReport structure_check(Base m, std::size_t level, const PrecisionContext& ctx);

}  // namespace contlog
