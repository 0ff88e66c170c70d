#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace epgap {

// One record of the prime/gap stream: n-th prime p and d = p_n - p_{n-1}.
// The stream starts at n = 2; d_1 is undefined.
struct GapEntry {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t d = 0;

  friend bool operator==(const GapEntry&, const GapEntry&) = default;
};

struct SieveOptions {
  static constexpr std::size_t kDefaultSegment = std::size_t{1} << 20;

  std::size_t segment_size = kDefaultSegment; // values per segment, >= 2
  unsigned threads = 1;                       // segments sieved concurrently
};

// Largest accepted sieve bound.
inline constexpr std::uint64_t kMaxSieveLimit = std::uint64_t{1} << 40;

std::uint64_t isqrt(std::uint64_t n);

// Segmented sieve. Calls `sink` once per segment, in ascending order, with
// the primes of that segment. Segments are sieved in batches of
// `opts.threads` and handed to `sink` in order from the calling thread.
void for_each_prime_segment(std::uint64_t limit, const SieveOptions& opts,
                            const std::function<void(std::span<const std::uint64_t>)>& sink);

// Primes <= limit, ascending. Throws std::range_error above kMaxSieveLimit
// and std::invalid_argument for a segment size below 2.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, const SieveOptions& opts = {});

// Plain whole-range sieve of Eratosthenes; an independent path for
// cross-checking the segmented one.
std::vector<std::uint64_t> primes_up_to_unsegmented(std::uint64_t limit);

// GapEntry for every n >= 2 with p_n <= limit. Empty when limit < 3.
std::vector<GapEntry> gap_stream(std::uint64_t limit, const SieveOptions& opts = {});

void write_gap_csv(std::ostream& os, std::span<const GapEntry> gaps);

// Read-only view of a gap sequence indexed like d_n: element 0 is d_2.
class GapView {
public:
  GapView() = default;
  explicit GapView(std::span<const std::uint64_t> d_from_2) : d_(d_from_2) {}

  // d_n; throws std::range_error outside [2, last_index()].
  std::uint64_t operator()(std::uint64_t n) const;
  std::uint64_t last_index() const { return d_.size() + 1; }
  bool contains(std::uint64_t n) const { return n >= 2 && n <= last_index(); }
  std::span<const std::uint64_t> raw() const { return d_; }

private:
  std::span<const std::uint64_t> d_;
};

// Primes and gaps up to a bound with 1-based index access.
class PrimeTable {
public:
  PrimeTable() = default;
  explicit PrimeTable(std::vector<std::uint64_t> primes);
  static PrimeTable up_to(std::uint64_t limit, const SieveOptions& opts = {});

  std::size_t count() const { return primes_.size(); }
  std::uint64_t prime(std::uint64_t n) const; // p_n, 1-based
  std::uint64_t gap(std::uint64_t n) const { return gaps()(n); }

  std::span<const std::uint64_t> primes() const { return primes_; }
  GapView gaps() const { return GapView(gaps_); }

private:
  std::vector<std::uint64_t> primes_;
  std::vector<std::uint64_t> gaps_; // d_2, d_3, ...
};

} // namespace epgap
