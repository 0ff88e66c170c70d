#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "epgap/rational.hpp"

namespace epgap {

// ---------------------------------------------------------------------------
// Parameters and partition shape
// ---------------------------------------------------------------------------

// Grid of C columns, each holding J parts of K consecutive tuple indices.
// The exponent schedule lives on indices 1..C*J*K and uses the denominator
// k = 2*C*J*K, so c ranges over [1/k, 1/2]. `threshold` is the number L of
// primes a column needs before it can host the peak; ell = L - 2 gaps on
// each side of the peak are compared.
struct PartitionShape {
  std::uint64_t columns = 31;
  std::uint64_t parts_per_column = 1; // J
  std::uint64_t part_size = 1;        // K
  std::uint64_t threshold = 3;        // L

  std::uint64_t k() const { return 2 * indexed_count(); }
  std::uint64_t indexed_count() const { return columns * parts_per_column * part_size; }
  std::uint64_t part_count() const { return columns * parts_per_column; }
  std::uint64_t ell() const { return threshold - 2; }

  friend bool operator==(const PartitionShape&, const PartitionShape&) = default;
};

// Validated toy shape; throws std::invalid_argument for zero dimensions or L < 2.
PartitionShape toy_shape(std::uint64_t columns, std::uint64_t parts_per_column,
                         std::uint64_t part_size, std::uint64_t threshold);

// L = ell + 2, m = 62L - 33, J = 32L - 17, 16m + 1 = 31J,
// k = 2(16m + 1) * K, K = k / (62J).
struct EptParameters {
  std::uint64_t ell = 0;
  std::uint64_t L = 0;
  std::uint64_t m = 0;
  std::uint64_t J = 0;
  std::uint64_t k = 0;
  std::uint64_t K = 0;
  std::uint64_t columns = 31;

  PartitionShape shape() const { return {columns, J, K, L}; }
  std::uint64_t parts() const { return 16 * m + 1; }
};

// Throws std::invalid_argument for ell or k_multiplier of zero and
// std::range_error when k overflows 64 bits.
EptParameters derive_params(std::uint64_t ell, std::uint64_t k_multiplier = 1);

struct ParameterIdentities {
  bool parts_equal_31J = false;       // 16m + 1 == 31J
  bool parts_equal_closed = false;    // 16m + 1 == 992L - 527
  bool m_closed = false;              // m == 62 ell + 91
  bool k_factorization = false;       // 62J * K == k
  bool k_divisible = false;           // 2(16m + 1) | k

  bool ok() const {
    return parts_equal_31J && parts_equal_closed && m_closed && k_factorization && k_divisible;
  }
};

ParameterIdentities check_identities(const EptParameters& p);

// ---------------------------------------------------------------------------
// Exponent schedule
// ---------------------------------------------------------------------------

struct IndexCoords {
  std::uint64_t nu = 0;     // column, 0..C-1
  std::uint64_t mu = 0;     // part within the column, 0..J-1
  std::uint64_t lambda = 1; // position within the part, 1..K

  friend bool operator==(const IndexCoords&, const IndexCoords&) = default;
};

// c_i = f(nu, mu, lambda) = ((C-1-nu)J + mu) / (2CJ) + lambda / k for
// i = (nu J + mu) K + lambda. Every c_i is an integer multiple of 1/k; the
// model works with those integer numerators.
class ExponentModel {
public:
  explicit ExponentModel(const PartitionShape& shape);
  explicit ExponentModel(const EptParameters& params) : ExponentModel(params.shape()) {}

  const PartitionShape& shape() const { return shape_; }
  std::uint64_t k() const { return shape_.k(); }
  std::uint64_t indexed_count() const { return shape_.indexed_count(); }

  // Throw std::out_of_range outside 1..indexed_count() or the coordinate box.
  IndexCoords decode(std::uint64_t i) const;
  std::uint64_t encode(const IndexCoords& c) const;

  std::uint64_t column_of(std::uint64_t i) const { return decode(i).nu; }
  std::uint64_t column_first(std::uint64_t nu) const;
  std::uint64_t column_last(std::uint64_t nu) const;
  // Index range [first, last] of part I_{nu,mu}.
  std::pair<std::uint64_t, std::uint64_t> part_range(std::uint64_t nu, std::uint64_t mu) const;

  // k * c_i.
  std::int64_t scaled_exponent(std::uint64_t i) const;
  Rational exponent(std::uint64_t i) const;
  Rational exponent(const IndexCoords& c) const { return exponent(encode(c)); }

private:
  void check_index(std::uint64_t i) const;

  PartitionShape shape_;
  std::uint64_t block_ = 0; // J * K, indices per column
};

// Exponent-level size of h_j - h_i: max of c_t over t in (i, j].
// Throws std::invalid_argument unless 1 <= i < j <= indexed_count().
Rational gap_exponent(const ExponentModel& model, std::uint64_t i, std::uint64_t j);
// The t in (i, j] attaining that max.
std::uint64_t gap_exponent_argmax(const ExponentModel& model, std::uint64_t i, std::uint64_t j);

enum class CheckMode { Exhaustive, Sampled };

std::string_view to_string(CheckMode m);

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct MonotonicityViolation {
  IndexCoords lower; // coordinates of the smaller index
  IndexCoords upper;
  Rational difference; // c(upper) - c(lower)
  bool cross_column = false;
};

struct MonotonicityReport {
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t within_pairs = 0;
  std::uint64_t cross_pairs = 0;
  std::uint64_t violation_count = 0;
  std::vector<MonotonicityViolation> violations; // first few only
  // Mismatches between c_j - c_i and the closed form
  // (nu1-nu2)/(2C) + (mu2-mu1)/(2CJ) + (lambda2-lambda1)/k.
  std::uint64_t closed_form_mismatches = 0;
  std::optional<Rational> min_within_difference;
  std::optional<Rational> max_cross_difference;

  std::uint64_t pairs_checked() const { return within_pairs + cross_pairs; }
  bool ok() const { return violation_count == 0 && closed_form_mismatches == 0; }
};

struct MonotonicityOptions {
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t pair_budget = 100'000'000; // exhaustive mode guard
  std::uint64_t samples = 1'000'000;       // sampled mode pair count
  std::uint64_t seed = 1;
  std::size_t max_reported = 16;
};

// Within a column c rises by >= 1/k for every lexicographic step in
// (mu, lambda); across columns c drops by >= 1/k whenever nu grows.
// Exhaustive mode throws BudgetExceeded when the pair count exceeds the
// budget.
MonotonicityReport verify_monotonicity(const ExponentModel& model,
                                       const MonotonicityOptions& opts = {});

// ---------------------------------------------------------------------------
// Placements and peak selection
// ---------------------------------------------------------------------------

// At most one prime position per part. Stored per part as lambda (0 = empty).
class Placement {
public:
  explicit Placement(const PartitionShape& shape);

  // Throws std::logic_error when the indices are out of range or two of
  // them fall in the same part.
  static Placement from_indices(const PartitionShape& shape, const std::vector<std::uint64_t>& idx);

  // Throws std::logic_error on an occupied part or out-of-range coordinates.
  void place(std::uint64_t nu, std::uint64_t mu, std::uint64_t lambda);
  void place_index(std::uint64_t i);

  const PartitionShape& shape() const { return shape_; }
  std::uint64_t lambda_at(std::uint64_t nu, std::uint64_t mu) const;
  bool occupied(std::uint64_t nu, std::uint64_t mu) const { return lambda_at(nu, mu) != 0; }
  std::uint64_t occupied_count() const { return occupied_; }

  std::vector<std::uint64_t> prime_indices() const; // ascending
  std::vector<std::uint64_t> column_counts() const;

private:
  PartitionShape shape_;
  std::vector<std::uint32_t> lambda_;
  std::uint64_t occupied_ = 0;
};

enum class SelectionFailure { None, NoColumn, InsufficientSuccessors };

std::string_view to_string(SelectionFailure f);

struct SelectionResult {
  std::uint64_t column = 0;                 // y
  std::uint64_t index = 0;                  // largest prime index in column y
  std::vector<std::uint64_t> predecessors;  // L-1 prime indices below, nearest first
  std::vector<std::uint64_t> successors;    // all prime indices in columns > y, ascending
  std::vector<std::uint64_t> column_counts;
  PartitionShape shape;
};

struct SelectionOutcome {
  std::optional<SelectionResult> selection;
  SelectionFailure failure = SelectionFailure::None;

  bool ok() const { return selection.has_value(); }
};

// Takes y as the first column holding >= L primes and succeeds when the
// later columns hold >= L primes together. No later column can qualify
// when that fails, since any such column alone would supply L successors.
SelectionOutcome select_peak(const Placement& placement);

// ---------------------------------------------------------------------------
// Counting bounds
// ---------------------------------------------------------------------------

struct PigeonholeReport {
  std::uint64_t L = 0;
  std::uint64_t m = 0;
  std::uint64_t J = 0;
  std::uint64_t required = 0;          // m + 1 = 62L - 32
  std::uint64_t no_column_bound = 0;   // 31L as stated
  std::uint64_t no_column_sharp = 0;   // 31(L-1)
  std::uint64_t split_bound = 0;       // 30(L-1) + J
  std::uint64_t split_closed_form = 0; // 62L - 47

  bool no_column_holds() const { return no_column_bound < required; }
  bool sharp_holds() const { return no_column_sharp < required; }
  bool split_holds() const { return split_bound < required; }
  bool closed_form_matches() const {
    return split_bound == split_closed_form && required == 62 * L - 32;
  }
  bool ok() const { return no_column_holds() && sharp_holds() && split_holds() && closed_form_matches(); }
};

// Throws std::invalid_argument for L < 2.
PigeonholeReport pigeonhole_bounds(std::uint64_t L);
inline PigeonholeReport pigeonhole_bounds(const EptParameters& p) { return pigeonhole_bounds(p.L); }

// Smallest occupied-part count that forces select_peak to succeed:
// max(C(L-1), (C-1)(L-1) + J) + 1.
std::uint64_t occupancy_bound(const PartitionShape& shape);

// ---------------------------------------------------------------------------
// Claim checking
// ---------------------------------------------------------------------------

// One exponent-level inequality between two consecutive-prime gaps. Gap
// (lo, hi] has exponent gap_exponent(lo, hi).
struct ClaimInequality {
  std::uint64_t a = 0; // left: offsets a < b of d_{m-a}, d_{m-b}; right: a = 0, b = t
  std::uint64_t b = 0;
  std::pair<std::uint64_t, std::uint64_t> first_gap;  // d_{m-a} or d_m
  std::pair<std::uint64_t, std::uint64_t> second_gap; // d_{m-b} or d_{m+t}
  Rational first_exponent;
  Rational second_exponent;
  Rational difference; // first - second
  Rational required;   // (b-a)/k on the left, 1/k on the right
  bool holds = false;
  // Right side only: the successor gap interval reaches indices of column y above the peak.
  bool crosses_column_tail = false;
};

struct ClaimReport {
  std::vector<ClaimInequality> left;
  std::vector<ClaimInequality> right;

  bool left_holds() const;
  bool right_holds() const;
};

// Left: E(d_{m-a}) - E(d_{m-b}) >= (b-a)/k for 0 <= a < b <= ell.
// Right: E(d_m) - E(d_{m+t}) >= 1/k for 1 <= t <= ell, with every index
// between consecutive primes counted in the successor gap.
ClaimReport check_claims(const SelectionResult& result, const ExponentModel& model);

// ---------------------------------------------------------------------------
// Simulation
// ---------------------------------------------------------------------------

enum class SimulationMode { Random, Exhaustive };

std::string_view to_string(SimulationMode m);

struct SimulationConfig {
  PartitionShape shape;
  std::uint64_t min_occupied = 0;
  std::uint64_t max_occupied = 0; // 0 means all parts
  std::uint64_t trials = 10'000;  // random mode
  std::uint64_t seed = 1;
  SimulationMode mode = SimulationMode::Random;
  std::uint64_t budget = 50'000'000; // placements evaluated, exhaustive mode
  unsigned threads = 1;
  bool trace = false;
};

// Full-scale run: occupancy floor m + 1.
SimulationConfig simulation_for_params(const EptParameters& params);
// Toy run: occupancy floor from occupancy_bound().
SimulationConfig simulation_for_shape(const PartitionShape& shape);

struct TrialTrace {
  std::uint64_t trial = 0;
  std::uint64_t occupied = 0;
  SelectionFailure failure = SelectionFailure::None;
  std::uint64_t column = 0;
  std::uint64_t index = 0;
  std::uint64_t left_checked = 0;
  std::uint64_t left_held = 0;
  std::uint64_t right_checked = 0;
  std::uint64_t right_held = 0;
};

struct SimulationReport {
  SimulationMode mode = SimulationMode::Random;
  PartitionShape shape;
  std::uint64_t min_occupied = 0;
  std::uint64_t max_occupied = 0;
  std::uint64_t guaranteed_bound = 0;
  std::uint64_t trials_run = 0;
  std::uint64_t trials_planned = 0;
  std::uint64_t selections = 0;
  std::uint64_t failures_no_column = 0;
  std::uint64_t failures_successors = 0;
  std::uint64_t left_checked = 0;
  std::uint64_t left_held = 0;
  std::uint64_t selections_left_all = 0;
  std::uint64_t right_checked = 0;
  std::uint64_t right_held = 0;
  std::uint64_t selections_right_all = 0;
  bool complete = true;
  std::vector<TrialTrace> traces;

  std::uint64_t failures() const { return failures_no_column + failures_successors; }
  double success_rate() const;
  double left_pass_rate() const;
  double right_pass_rate() const;
};

// Exhaustive mode requires part_count() <= 24 (std::invalid_argument
// otherwise) and stops with complete = false once `budget` placements ran.
SimulationReport simulate(const SimulationConfig& config);

// Sum over occupied counts s in [lo, hi] of C(P, s) * K^s, saturating.
std::uint64_t exhaustive_placement_count(const PartitionShape& shape, std::uint64_t lo,
                                         std::uint64_t hi);

} // namespace epgap
