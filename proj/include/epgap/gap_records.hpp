#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "epgap/rational.hpp"
#include "epgap/sieve.hpp"

namespace epgap {

// Normalizes a peak ratio by (log m)^c with c = c1 * exp(-c2 * ell).
// c1 = c2 = 1 are exploratory defaults; c1 = 0 selects the plain ratio (c = 0).
struct RecordNormalizer {
  double c1 = 1.0;
  double c2 = 1.0;

  double exponent(std::uint64_t ell) const;
  bool plain(std::uint64_t ell) const { return exponent(ell) == 0.0; }
};

struct PeakRecord {
  std::uint64_t m = 0;
  std::uint64_t p = 0;
  std::uint64_t d = 0;            // d_m, the ratio numerator
  std::uint64_t max_neighbor = 0; // ratio denominator
  double normalized = 0.0;
  std::uint64_t ell = 0;

  Rational ratio() const;
};

// d_m / max(d_{m-ell}..d_{m-1}, d_{m+1}..d_{m+ell}), d_m excluded from the max.
// Throws std::range_error when the window leaves the available gaps.
Rational peak_ratio(std::uint64_t m, std::uint64_t ell, const GapView& gaps);

// Running maxima of the normalized peak ratio over all full windows.
// `primes` holds p_1, p_2, ... Ties keep the earlier m.
std::vector<PeakRecord> scan_records(std::span<const std::uint64_t> primes, std::uint64_t ell,
                                     const RecordNormalizer& normalizer);
std::vector<PeakRecord> scan_records(std::uint64_t limit, std::uint64_t ell,
                                     const RecordNormalizer& normalizer,
                                     const SieveOptions& opts = {});

// Every n with d_n > d_{n+1} + d_{n+2}.
std::vector<std::uint64_t> find_superdominant(const GapView& gaps);
std::vector<std::uint64_t> find_superdominant(std::uint64_t limit, const SieveOptions& opts = {});

void write_records_csv(std::ostream& os, std::span<const PeakRecord> records);

} // namespace epgap
