#include "epgap/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <ostream>
#include <stdexcept>
#include <string>

namespace epgap {

namespace {

void check_limit(std::uint64_t limit) {
  if (limit > kMaxSieveLimit)
    throw std::range_error("sieve limit " + std::to_string(limit) + " exceeds " +
                           std::to_string(kMaxSieveLimit));
}

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<char> composite(limit + 1, 0);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = 1;
  }
  return out;
}

// Primes in [lo, hi], odd numbers only plus 2.
std::vector<std::uint64_t> sieve_segment(std::uint64_t lo, std::uint64_t hi,
                                         std::span<const std::uint64_t> base) {
  std::vector<std::uint64_t> out;
  if (lo <= 2 && 2 <= hi) out.push_back(2);
  std::uint64_t first = std::max<std::uint64_t>(lo | 1, 3);
  if (first > hi) return out;

  const std::uint64_t n_odd = (hi - first) / 2 + 1;
  std::vector<char> composite(n_odd, 0);
  for (std::uint64_t p : base) {
    if (p == 2) continue;
    if (p * p > hi) break;
    std::uint64_t start = std::max(p * p, (first + p - 1) / p * p);
    if (start % 2 == 0) start += p;
    for (std::uint64_t x = (start - first) / 2; x < n_odd; x += p) composite[x] = 1;
  }
  out.reserve(out.size() + n_odd / 8);
  for (std::uint64_t j = 0; j < n_odd; ++j)
    if (!composite[j]) out.push_back(first + 2 * j);
  return out;
}

} // namespace

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void for_each_prime_segment(std::uint64_t limit, const SieveOptions& opts,
                            const std::function<void(std::span<const std::uint64_t>)>& sink) {
  check_limit(limit);
  if (opts.segment_size < 2) throw std::invalid_argument("segment size must be >= 2");
  if (limit < 2) return;

  const std::vector<std::uint64_t> base = small_primes(isqrt(limit));
  const std::uint64_t seg = opts.segment_size;
  const unsigned threads = std::max(1u, opts.threads);

  std::uint64_t lo = 0;
  while (lo <= limit) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> batch;
    for (unsigned t = 0; t < threads && lo <= limit; ++t) {
      std::uint64_t hi = (limit - lo < seg - 1) ? limit : lo + seg - 1;
      batch.emplace_back(lo, hi);
      lo = hi + 1;
    }
    if (batch.size() == 1) {
      auto primes = sieve_segment(batch[0].first, batch[0].second, base);
      sink(primes);
    } else {
      std::vector<std::future<std::vector<std::uint64_t>>> work;
      work.reserve(batch.size());
      for (auto [a, b] : batch)
        work.push_back(std::async(std::launch::async, sieve_segment, a, b, std::span(base)));
      for (auto& f : work) {
        auto primes = f.get();
        sink(primes);
      }
    }
  }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, const SieveOptions& opts) {
  std::vector<std::uint64_t> out;
  for_each_prime_segment(limit, opts, [&](std::span<const std::uint64_t> seg) {
    out.insert(out.end(), seg.begin(), seg.end());
  });
  return out;
}

std::vector<std::uint64_t> primes_up_to_unsegmented(std::uint64_t limit) {
  check_limit(limit);
  return small_primes(limit);
}

std::vector<GapEntry> gap_stream(std::uint64_t limit, const SieveOptions& opts) {
  std::vector<GapEntry> out;
  std::uint64_t n = 0;
  std::uint64_t prev = 0;
  for_each_prime_segment(limit, opts, [&](std::span<const std::uint64_t> seg) {
    for (std::uint64_t p : seg) {
      ++n;
      if (n >= 2) out.push_back({n, p, p - prev});
      prev = p;
    }
  });
  return out;
}

void write_gap_csv(std::ostream& os, std::span<const GapEntry> gaps) {
  os << "n,p,d\n";
  for (const auto& g : gaps) os << g.n << ',' << g.p << ',' << g.d << '\n';
}

std::uint64_t GapView::operator()(std::uint64_t n) const {
  if (!contains(n))
    throw std::range_error("gap index " + std::to_string(n) + " outside [2, " +
                           std::to_string(last_index()) + "]");
  return d_[n - 2];
}

PrimeTable::PrimeTable(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  if (primes_.size() >= 2) {
    gaps_.reserve(primes_.size() - 1);
    for (std::size_t i = 1; i < primes_.size(); ++i) {
      if (primes_[i] <= primes_[i - 1]) throw std::invalid_argument("primes must increase strictly");
      gaps_.push_back(primes_[i] - primes_[i - 1]);
    }
  }
}

PrimeTable PrimeTable::up_to(std::uint64_t limit, const SieveOptions& opts) {
  return PrimeTable(primes_up_to(limit, opts));
}

std::uint64_t PrimeTable::prime(std::uint64_t n) const {
  if (n < 1 || n > primes_.size())
    throw std::range_error("prime index " + std::to_string(n) + " outside [1, " +
                           std::to_string(primes_.size()) + "]");
  return primes_[n - 1];
}

} // namespace epgap
