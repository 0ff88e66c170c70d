#include "epgap/tuples.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "epgap/sieve.hpp"

namespace epgap {

AdmissibleTuple::AdmissibleTuple(std::vector<std::int64_t> h) : h_(std::move(h)) {
  if (h_.empty()) throw std::invalid_argument("tuple must not be empty");
  if (h_.front() < 0) throw std::invalid_argument("tuple offsets must be non-negative");
  for (std::size_t i = 1; i < h_.size(); ++i)
    if (h_[i] <= h_[i - 1]) throw std::invalid_argument("tuple offsets must increase strictly");
}

AdmissibleTuple AdmissibleTuple::shifted(std::int64_t t) const {
  std::vector<std::int64_t> out(h_);
  for (auto& x : out) x += t;
  return AdmissibleTuple(std::move(out));
}

AdmissibilityVerdict is_admissible(const AdmissibleTuple& h) {
  AdmissibilityVerdict out;
  const auto k = static_cast<std::uint64_t>(h.k());
  std::vector<char> seen;
  for (std::uint64_t p : primes_up_to_unsegmented(k)) {
    seen.assign(p, 0);
    std::uint64_t covered = 0;
    for (std::int64_t x : h.offsets()) {
      auto r = static_cast<std::uint64_t>(x) % p;
      if (!seen[r]) {
        seen[r] = 1;
        ++covered;
      }
    }
    if (covered == p) {
      out.admissible = false;
      out.witness = p;
      return out;
    }
  }
  return out;
}

namespace {

// Largest prime factor of n >= 1 (1 for n == 1), or the first factor above w.
std::uint64_t first_factor_above(std::uint64_t n, std::uint64_t w) {
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    if (p > w) return p;
    while (n % p == 0) n /= p;
  }
  return n > w ? n : 0;
}

} // namespace

SmoothnessVerdict smooth_differences_ok(const AdmissibleTuple& h, std::uint64_t w) {
  if (w < 2) throw std::invalid_argument("smoothness bound w must be >= 2");
  SmoothnessVerdict out;
  const auto& x = h.offsets();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const auto diff = static_cast<std::uint64_t>(x[j] - x[i]);
      if (const std::uint64_t p = first_factor_above(diff, w); p != 0) {
        out.ok = false;
        out.offense = SmoothnessOffense{p, x[i], x[j]};
        return out;
      }
    }
  }
  return out;
}

std::uint64_t primorial(std::uint64_t w) {
  std::uint64_t out = 1;
  for (std::uint64_t p : primes_up_to_unsegmented(w))
    if (__builtin_mul_overflow(out, p, &out)) throw std::range_error("primorial exceeds 64 bits");
  return out;
}

std::string_view to_string(RealizationMode m) {
  return m == RealizationMode::ReportOnly ? "report-only" : "primorial-repair";
}

double EptTupleRealization::b_ratio(std::size_t i, std::size_t j) const {
  return static_cast<double>(b.at(i - 1)) / static_cast<double>(b.at(j - 1));
}

std::vector<std::vector<double>> EptTupleRealization::b_ratio_matrix() const {
  std::vector<std::vector<double>> out(b.size(), std::vector<double>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i][j] = static_cast<double>(b[i]) / static_cast<double>(b[j]);
  return out;
}

EptTupleRealization build_ept_tuple(const ExponentModel& model, double log_n,
                                    const RealizationOptions& opts) {
  if (!(log_n > 1.0)) throw std::invalid_argument("log N must exceed 1");
  if (opts.w < 2) throw std::invalid_argument("smoothness bound w must be >= 2");
  const std::uint64_t n = model.indexed_count();
  if (!opts.beta.empty() && opts.beta.size() != n)
    throw std::invalid_argument("beta needs " + std::to_string(n) + " entries");

  EptTupleRealization out;
  out.log_n = log_n;
  out.mode = opts.mode;
  out.beta = opts.beta.empty() ? std::vector<Rational>(n, Rational(1)) : opts.beta;
  for (const auto& b : out.beta)
    if (b.sign() <= 0) throw std::invalid_argument("beta entries must be positive");

  const std::uint64_t step = opts.mode == RealizationMode::PrimorialRepair ? primorial(opts.w) : 1;
  RealizationDiagnostics& diag = out.diagnostics;
  diag.w = opts.w;

  std::vector<double> target(n);
  std::int64_t run = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const Rational c = model.exponent(i);
    out.c.push_back(c);
    target[i - 1] = out.beta[i - 1].to_double() * std::pow(log_n, c.to_double());
    auto b = static_cast<std::uint64_t>(std::max(1.0, std::round(target[i - 1])));
    if (b % step != 0) b += step - b % step;
    out.b.push_back(b);
    run += static_cast<std::int64_t>(b);
    out.h.push_back(run);

    const double f = static_cast<double>(b) / target[i - 1];
    diag.worst_factor = std::max({diag.worst_factor, f, 1.0 / f});
  }
  diag.within_factor_two = diag.worst_factor <= 2.0;

  const AdmissibleTuple tuple(out.h);
  diag.admissibility = is_admissible(tuple);
  diag.smoothness = smooth_differences_ok(tuple, opts.w);

  diag.separation_target = std::pow(log_n, 1.0 / static_cast<double>(model.k()));
  diag.min_cross_column_ratio = std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 1; i <= n; ++i) {
    for (std::uint64_t j = i + 1; j <= n; ++j) {
      const std::uint64_t bi = out.b[i - 1];
      const std::uint64_t bj = out.b[j - 1];
      if (out.c[i - 1] < out.c[j - 1] && bi > bj) ++diag.order_inversions;
      if (out.c[i - 1] > out.c[j - 1] && bi < bj) ++diag.order_inversions;
      if (model.column_of(i) < model.column_of(j)) {
        if (bi > bj) ++diag.cross_column_separated;
        else if (bi == bj) ++diag.cross_column_ties;
        else ++diag.cross_column_inverted;
        diag.min_cross_column_ratio =
            std::min(diag.min_cross_column_ratio, static_cast<double>(bi) / static_cast<double>(bj));
      }
    }
  }
  if (diag.min_cross_column_ratio == std::numeric_limits<double>::infinity())
    diag.min_cross_column_ratio = 0.0;
  return out;
}

} // namespace epgap
