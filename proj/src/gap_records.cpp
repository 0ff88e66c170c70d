#include "epgap/gap_records.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace epgap {

double RecordNormalizer::exponent(std::uint64_t ell) const {
  if (c1 < 0.0 || c2 <= 0.0) throw std::invalid_argument("normalizer needs c1 >= 0 and c2 > 0");
  return c1 * std::exp(-c2 * static_cast<double>(ell));
}

Rational PeakRecord::ratio() const {
  return Rational(static_cast<std::int64_t>(d), static_cast<std::int64_t>(max_neighbor));
}

namespace {

std::uint64_t neighbor_max(std::uint64_t m, std::uint64_t ell, const GapView& gaps) {
  if (ell == 0) throw std::invalid_argument("window radius must be >= 1");
  if (m < ell + 2 || m + ell > gaps.last_index())
    throw std::range_error("window of radius " + std::to_string(ell) + " around m=" +
                           std::to_string(m) + " leaves the gap range");
  std::uint64_t best = 0;
  for (std::uint64_t t = m - ell; t <= m + ell; ++t)
    if (t != m) best = std::max(best, gaps(t));
  return best;
}

} // namespace

Rational peak_ratio(std::uint64_t m, std::uint64_t ell, const GapView& gaps) {
  const std::uint64_t den = neighbor_max(m, ell, gaps);
  return Rational(static_cast<std::int64_t>(gaps(m)), static_cast<std::int64_t>(den));
}

std::vector<PeakRecord> scan_records(std::span<const std::uint64_t> primes, std::uint64_t ell,
                                     const RecordNormalizer& normalizer) {
  if (ell == 0) throw std::invalid_argument("window radius must be >= 1");
  std::vector<PeakRecord> out;
  if (primes.size() < 2) return out;

  std::vector<std::uint64_t> d;
  d.reserve(primes.size() - 1);
  for (std::size_t i = 1; i < primes.size(); ++i) d.push_back(primes[i] - primes[i - 1]);
  const GapView gaps(d);

  const double c = normalizer.exponent(ell);
  const bool exact = c == 0.0;
  const std::uint64_t first = ell + 2;
  const std::uint64_t last = gaps.last_index();
  if (last < ell || first > last - ell) return out;

  for (std::uint64_t m = first; m + ell <= last; ++m) {
    PeakRecord rec;
    rec.m = m;
    rec.p = primes[m - 1];
    rec.d = gaps(m);
    rec.max_neighbor = neighbor_max(m, ell, gaps);
    rec.ell = ell;
    const double ratio = static_cast<double>(rec.d) / static_cast<double>(rec.max_neighbor);
    rec.normalized = exact ? ratio : ratio / std::pow(std::log(static_cast<double>(m)), c);

    bool beats = out.empty();
    if (!beats) {
      const PeakRecord& best = out.back();
      // Exact comparison for the plain ratio: d/den > d'/den'.
      beats = exact ? __int128(rec.d) * best.max_neighbor > __int128(best.d) * rec.max_neighbor
                    : rec.normalized > best.normalized;
    }
    if (beats) out.push_back(rec);
  }
  return out;
}

std::vector<PeakRecord> scan_records(std::uint64_t limit, std::uint64_t ell,
                                     const RecordNormalizer& normalizer, const SieveOptions& opts) {
  const auto primes = primes_up_to(limit, opts);
  return scan_records(primes, ell, normalizer);
}

std::vector<std::uint64_t> find_superdominant(const GapView& gaps) {
  std::vector<std::uint64_t> out;
  const std::uint64_t last = gaps.last_index();
  for (std::uint64_t n = 2; n + 2 <= last; ++n)
    if (gaps(n) > gaps(n + 1) + gaps(n + 2)) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> find_superdominant(std::uint64_t limit, const SieveOptions& opts) {
  const PrimeTable table = PrimeTable::up_to(limit, opts);
  return find_superdominant(table.gaps());
}

void write_records_csv(std::ostream& os, std::span<const PeakRecord> records) {
  os << "m,p,d,ratio_num,ratio_den,normalized\n";
  char buf[64];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%.12f", r.normalized);
    os << r.m << ',' << r.p << ',' << r.d << ',' << r.d << ',' << r.max_neighbor << ',' << buf
       << '\n';
  }
}

} // namespace epgap
