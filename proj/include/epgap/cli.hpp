#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace epgap::cli {

enum class Subcommand {
  Sieve,
  Gaps,
  Form,
  Records,
  Superdominant,
  Tuple,
  EptParams,
  EptVerify,
  EptSimulate,
};

enum class Format { Csv, Json };

struct RunConfig {
  Subcommand subcommand = Subcommand::Sieve;
  std::string limit; // decimal or "<a>e<b>"; parsed with range checking
  std::uint64_t ell = 1;
  std::string coeffs;
  std::string h;
  std::optional<std::uint64_t> w;
  std::uint64_t k_mult = 1;
  double c1 = 1.0;
  double c2 = 1.0;
  std::uint64_t seed = 1;
  std::uint64_t trials = 10'000;
  bool exhaustive = false;
  std::optional<std::array<std::uint64_t, 4>> toy; // C, J, K, L
  std::optional<Format> format;
  std::optional<std::string> out;
  bool trace = false;
  std::size_t segment = std::size_t{1} << 20;
  unsigned threads = 1;
  std::size_t positions = 50;
  std::optional<double> log_n;
  bool repair = false;
  std::optional<std::uint64_t> min_occupied;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitUsage = 64;

// Executes one subcommand. Report goes to `out` (or the --out file); errors
// are a single JSON line on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and runs it. Unknown flags print usage and
// return kExitUsage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// "1000000", "1e6". Throws std::range_error past 64 bits and
// std::invalid_argument on malformed text.
std::uint64_t parse_limit(std::string_view text);

} // namespace epgap::cli
