#include "epgap/ept.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace epgap {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::range_error("ept parameter overflow");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::range_error("ept parameter overflow");
  return out;
}

} // namespace

PartitionShape toy_shape(std::uint64_t columns, std::uint64_t parts_per_column,
                         std::uint64_t part_size, std::uint64_t threshold) {
  if (columns == 0 || parts_per_column == 0 || part_size == 0)
    throw std::invalid_argument("partition dimensions must be positive");
  if (threshold < 2) throw std::invalid_argument("column threshold L must be >= 2");
  PartitionShape s{columns, parts_per_column, part_size, threshold};
  // k = 2CJK must leave room for signed exponent numerators.
  const std::uint64_t k = checked_mul(2, checked_mul(checked_mul(columns, parts_per_column), part_size));
  if (k > static_cast<std::uint64_t>(INT64_MAX)) throw std::range_error("partition too large");
  return s;
}

EptParameters derive_params(std::uint64_t ell, std::uint64_t k_multiplier) {
  if (ell == 0) throw std::invalid_argument("ell must be >= 1");
  if (k_multiplier == 0) throw std::invalid_argument("k multiplier must be >= 1");
  EptParameters p;
  p.ell = ell;
  p.L = checked_add(ell, 2);
  p.m = checked_mul(62, p.L) - 33;
  p.J = checked_mul(32, p.L) - 17;
  p.K = k_multiplier;
  p.k = checked_mul(checked_mul(2, checked_add(checked_mul(16, p.m), 1)), k_multiplier);
  if (p.k > static_cast<std::uint64_t>(INT64_MAX)) throw std::range_error("k exceeds signed 64-bit range");
  p.columns = 31;
  return p;
}

ParameterIdentities check_identities(const EptParameters& p) {
  ParameterIdentities out;
  const std::uint64_t parts = 16 * p.m + 1;
  out.parts_equal_31J = parts == 31 * p.J;
  out.parts_equal_closed = parts == 992 * p.L - 527;
  out.m_closed = p.m == 62 * p.ell + 91;
  out.k_factorization = 62 * p.J * p.K == p.k;
  out.k_divisible = p.k % (2 * parts) == 0;
  return out;
}

ExponentModel::ExponentModel(const PartitionShape& shape)
    : shape_(toy_shape(shape.columns, shape.parts_per_column, shape.part_size, shape.threshold)),
      block_(shape.parts_per_column * shape.part_size) {}

void ExponentModel::check_index(std::uint64_t i) const {
  if (i < 1 || i > indexed_count())
    throw std::out_of_range("tuple index " + std::to_string(i) + " outside [1, " +
                            std::to_string(indexed_count()) + "]");
}

IndexCoords ExponentModel::decode(std::uint64_t i) const {
  check_index(i);
  const std::uint64_t z = i - 1;
  IndexCoords c;
  c.nu = z / block_;
  c.mu = (z % block_) / shape_.part_size;
  c.lambda = z % shape_.part_size + 1;
  return c;
}

std::uint64_t ExponentModel::encode(const IndexCoords& c) const {
  if (c.nu >= shape_.columns || c.mu >= shape_.parts_per_column || c.lambda < 1 ||
      c.lambda > shape_.part_size)
    throw std::out_of_range("coordinates outside the (nu, mu, lambda) box");
  return (c.nu * shape_.parts_per_column + c.mu) * shape_.part_size + c.lambda;
}

std::uint64_t ExponentModel::column_first(std::uint64_t nu) const {
  if (nu >= shape_.columns) throw std::out_of_range("column out of range");
  return nu * block_ + 1;
}

std::uint64_t ExponentModel::column_last(std::uint64_t nu) const {
  if (nu >= shape_.columns) throw std::out_of_range("column out of range");
  return (nu + 1) * block_;
}

std::pair<std::uint64_t, std::uint64_t> ExponentModel::part_range(std::uint64_t nu,
                                                                  std::uint64_t mu) const {
  const std::uint64_t first = encode({nu, mu, 1});
  return {first, first + shape_.part_size - 1};
}

std::int64_t ExponentModel::scaled_exponent(std::uint64_t i) const {
  const IndexCoords c = decode(i);
  const std::uint64_t v =
      ((shape_.columns - 1 - c.nu) * shape_.parts_per_column + c.mu) * shape_.part_size + c.lambda;
  return static_cast<std::int64_t>(v);
}

Rational ExponentModel::exponent(std::uint64_t i) const {
  return Rational(scaled_exponent(i), static_cast<std::int64_t>(k()));
}

std::uint64_t gap_exponent_argmax(const ExponentModel& model, std::uint64_t i, std::uint64_t j) {
  if (i < 1 || i >= j || j > model.indexed_count())
    throw std::invalid_argument("gap_exponent needs 1 <= i < j <= " +
                                std::to_string(model.indexed_count()));
  // c rises inside a column and every column sits below the previous one,
  // so the max over (i, j] is the top of the first column touched.
  const std::uint64_t nu = model.column_of(i + 1);
  return std::min(j, model.column_last(nu));
}

Rational gap_exponent(const ExponentModel& model, std::uint64_t i, std::uint64_t j) {
  return model.exponent(gap_exponent_argmax(model, i, j));
}

std::string_view to_string(CheckMode m) {
  return m == CheckMode::Exhaustive ? "exhaustive" : "sampled";
}

namespace {

struct PairChecker {
  const ExponentModel& model;
  const MonotonicityOptions& opts;
  MonotonicityReport& report;
  std::vector<IndexCoords> coords;
  std::vector<std::int64_t> scaled;
  std::int64_t two_c;
  std::int64_t two_cj;
  std::int64_t k;

  PairChecker(const ExponentModel& m, const MonotonicityOptions& o, MonotonicityReport& r)
      : model(m), opts(o), report(r) {
    const auto n = model.indexed_count();
    coords.reserve(n + 1);
    scaled.reserve(n + 1);
    coords.push_back({});
    scaled.push_back(0);
    for (std::uint64_t i = 1; i <= n; ++i) {
      coords.push_back(model.decode(i));
      scaled.push_back(model.scaled_exponent(i));
    }
    const auto& s = model.shape();
    two_c = static_cast<std::int64_t>(2 * s.columns);
    two_cj = static_cast<std::int64_t>(2 * s.columns * s.parts_per_column);
    k = static_cast<std::int64_t>(model.k());
  }

  // i < j.
  void check(std::uint64_t i, std::uint64_t j) {
    const IndexCoords& lo = coords[i];
    const IndexCoords& hi = coords[j];
    const std::int64_t diff = scaled[j] - scaled[i];
    const bool cross = hi.nu != lo.nu;
    bool bad = false;
    const Rational d(diff, k);
    if (cross) {
      ++report.cross_pairs;
      bad = diff > -1;
      if (!report.max_cross_difference || d > *report.max_cross_difference)
        report.max_cross_difference = d;
    } else {
      ++report.within_pairs;
      bad = diff < 1;
      if (!report.min_within_difference || d < *report.min_within_difference)
        report.min_within_difference = d;
    }
    if (bad) {
      ++report.violation_count;
      if (report.violations.size() < opts.max_reported)
        report.violations.push_back({lo, hi, d, cross});
    }
    const auto nu_lo = static_cast<std::int64_t>(lo.nu);
    const auto nu_hi = static_cast<std::int64_t>(hi.nu);
    const auto mu_lo = static_cast<std::int64_t>(lo.mu);
    const auto mu_hi = static_cast<std::int64_t>(hi.mu);
    const auto la_lo = static_cast<std::int64_t>(lo.lambda);
    const auto la_hi = static_cast<std::int64_t>(hi.lambda);
    const Rational closed = Rational(nu_lo - nu_hi, two_c) + Rational(mu_hi - mu_lo, two_cj) +
                            Rational(la_hi - la_lo, k);
    if (closed != d) ++report.closed_form_mismatches;
  }
};

} // namespace

MonotonicityReport verify_monotonicity(const ExponentModel& model, const MonotonicityOptions& opts) {
  MonotonicityReport report;
  report.mode = opts.mode;
  const std::uint64_t n = model.indexed_count();

  if (opts.mode == CheckMode::Exhaustive) {
    const unsigned __int128 pairs = (unsigned __int128)n * (n - 1) / 2;
    if (pairs > opts.pair_budget)
      throw BudgetExceeded("exhaustive monotonicity check needs " + std::to_string((std::uint64_t)pairs) +
                           " pairs, budget is " + std::to_string(opts.pair_budget) +
                           "; use sampled mode");
    PairChecker checker(model, opts, report);
    for (std::uint64_t i = 1; i <= n; ++i)
      for (std::uint64_t j = i + 1; j <= n; ++j) checker.check(i, j);
    return report;
  }

  PairChecker checker(model, opts, report);
  if (n < 2) return report;
  std::mt19937_64 rng(opts.seed);
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    std::uint64_t i = rng() % n + 1;
    std::uint64_t j = rng() % n + 1;
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    checker.check(i, j);
  }
  return report;
}

} // namespace epgap
