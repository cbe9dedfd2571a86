#include "contlog/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "contlog/parallel.hpp"

namespace contlog {

std::vector<double> empirical_frequency(const Word& w) {
  if (w.empty()) throw InvalidInput("empirical frequency of the empty word is undefined");
  std::vector<double> counts(static_cast<std::size_t>(w.base().max_digit()), 0.0);
  for (int d : w.digits()) counts[static_cast<std::size_t>(d - 1)] += 1.0;
  const double n = static_cast<double>(w.size());
  for (double& c : counts) c /= n;
  return counts;
}

mpq_class census_sample(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  const std::uint64_t high = rng();
  const std::uint64_t low = rng();

  mpz_class k;
  mpz_import(k.get_mpz_t(), 1, 1, sizeof high, 0, 0, &high);
  k <<= 64;
  mpz_class tail;
  mpz_import(tail.get_mpz_t(), 1, 1, sizeof low, 0, 0, &low);
  k += tail;

  mpz_class denom = 1;
  denom <<= 128;
  mpq_class x(k, denom);
  x.canonicalize();
  return x;
}

namespace {

// Digits lost per step by the expanding map are about log2(m ln m); start
// long encodes near the precision they will need anyway.
PrecisionContext census_precision(Base m, std::size_t digits, const PrecisionContext& ctx) {
  const double per_digit = std::log2(m.value() * std::log(static_cast<double>(m.value())));
  const double wanted = std::ceil(per_digit * static_cast<double>(digits)) + 64.0;
  const unsigned bits = static_cast<unsigned>(std::min<double>(wanted, ctx.max_bits()));
  return {std::max(ctx.bits(), bits), ctx.max_bits()};
}

}  // namespace

CensusReport census_of(Base m, std::span<const mpq_class> points, std::size_t digits_per_sample,
                       const PrecisionContext& ctx, unsigned threads) {
  if (points.empty()) throw InvalidInput("census needs at least one sample");
  if (digits_per_sample == 0) throw InvalidInput("census needs at least one digit per sample");

  const PrecisionContext run = census_precision(m, digits_per_sample, ctx);
  std::vector<std::optional<Word>> words(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) {
    try {
      words[i] = encode_orbit(points[i], m, digits_per_sample, run).word;
    } catch (const PrecisionExhausted&) {
      words[i].reset();
    }
  });

  const auto k = static_cast<std::size_t>(m.max_digit());
  CensusReport report;
  report.base = m.value();
  report.samples = points.size();
  report.digits_per_sample = digits_per_sample;
  report.per_digit_occurrence.assign(k, 0.0);
  report.mean_frequency.assign(k, 0.0);
  report.generator = kCensusGenerator;

  std::uint64_t encoded = 0;
  for (const std::optional<Word>& w : words) {
    if (!w) {
      ++report.skipped;
      continue;
    }
    ++encoded;
    const std::vector<double> freq = empirical_frequency(*w);
    for (std::size_t i = 0; i < k; ++i) {
      if (freq[i] > 0.0) report.per_digit_occurrence[i] += 1.0;
      report.mean_frequency[i] += freq[i];
    }
  }
  if (encoded > 0) {
    for (std::size_t i = 0; i < k; ++i) {
      report.per_digit_occurrence[i] /= static_cast<double>(encoded);
      report.mean_frequency[i] /= static_cast<double>(encoded);
    }
  }
  return report;
}

CensusReport occurrence_census(Base m, std::uint64_t samples, std::size_t digits_per_sample, std::uint64_t seed,
                               const PrecisionContext& ctx, unsigned threads) {
  if (samples == 0) throw InvalidInput("census needs at least one sample");
  std::vector<mpq_class> points(samples);
  for (std::uint64_t i = 0; i < samples; ++i) points[i] = census_sample(seed, i);
  CensusReport report = census_of(m, points, digits_per_sample, ctx, threads);
  report.seed = seed;
  return report;
}

namespace {

// Upper bound on a - b as a double.
double diff_up(const BigFloat& a, const BigFloat& b) {
  BigFloat d(64);
  mpfr_sub(d.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return d.to_double(MPFR_RNDU);
}

}  // namespace

StructureReport structure_check(Base m, std::size_t level, const PrecisionContext& ctx) {
  if (m.value() > kStructureMaxBase) {
    throw InvalidInput("structure check supports bases up to " + std::to_string(kStructureMaxBase));
  }
  if (level == 0) throw InvalidInput("structure check level must be at least 1");
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < level; ++i) {
    cells *= static_cast<std::uint64_t>(m.max_digit());
    if (cells > kStructureCellBudget) {
      throw BudgetExceeded(std::to_string(m.max_digit()) + "^" + std::to_string(level) +
                           " cells exceed the structure-check budget");
    }
  }

  StructureReport report;
  report.base = m.value();
  report.level = level;
  report.cells = static_cast<std::size_t>(cells);
  report.tolerance = kStructureTolerance;
  report.order_ok = true;

  std::vector<int> digits(level, 1);
  std::optional<CylinderEndpoints> previous;
  CylinderEndpoints first_cell{RealInterval(), RealInterval()};
  for (std::uint64_t c = 0; c < cells; ++c) {
    const Word w(m, digits);
    CylinderEndpoints cell = word_endpoints(w, ctx);

    const Word parent = w.prefix(level - 1);
    const CylinderEndpoints outer = parent.empty() ? CylinderEndpoints{RealInterval::point(0, ctx.bits()),
                                                                       RealInterval::point(1, ctx.bits())}
                                                   : word_endpoints(parent, ctx);
    report.worst_nesting_excess =
        std::max({report.worst_nesting_excess, diff_up(outer.left.lo(), cell.left.lo()),
                  diff_up(cell.right.hi(), outer.right.hi())});

    if (!cell.left.certainly_less(cell.right)) report.order_ok = false;
    if (previous) {
      if (!previous->left.certainly_less(cell.left)) report.order_ok = false;
      report.worst_gap = std::max(report.worst_gap, diff_up(cell.left.hi(), previous->right.lo()));
      report.worst_overlap = std::max(report.worst_overlap, diff_up(previous->right.hi(), cell.left.lo()));
    } else {
      first_cell = cell;
    }
    previous = std::move(cell);

    // Odometer step to the next word in lexicographic order.
    for (std::size_t pos = level; pos-- > 0;) {
      if (digits[pos] < m.max_digit()) {
        ++digits[pos];
        break;
      }
      digits[pos] = 1;
    }
  }

  const BigFloat zero(64);
  BigFloat one(64);
  mpfr_set_ui(one.raw(), 1, MPFR_RNDN);
  const double head = std::max(diff_up(first_cell.left.hi(), zero), diff_up(zero, first_cell.left.lo()));
  const double tail = std::max(diff_up(one, previous->right.lo()), diff_up(previous->right.hi(), one));
  report.worst_gap = std::max(report.worst_gap, diff_up(first_cell.left.hi(), zero));
  report.worst_gap = std::max(report.worst_gap, diff_up(one, previous->right.lo()));
  report.covers_unit = head <= kStructureTolerance && tail <= kStructureTolerance;
  report.nesting_ok = report.worst_nesting_excess <= 0.0;
  report.pass = report.covers_unit && report.order_ok && report.nesting_ok &&
                report.worst_gap <= kStructureTolerance && report.worst_overlap <= kStructureTolerance;
  return report;
}

}  // namespace contlog
