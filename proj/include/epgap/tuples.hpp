#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "epgap/ept.hpp"
#include "epgap/rational.hpp"

namespace epgap {

// Strictly increasing, non-negative offsets h_1 < ... < h_k.
class AdmissibleTuple {
public:
  // Throws std::invalid_argument when empty, negative or not strictly increasing.
  explicit AdmissibleTuple(std::vector<std::int64_t> h);

  std::size_t k() const { return h_.size(); }
  std::int64_t diameter() const { return h_.back() - h_.front(); }
  const std::vector<std::int64_t>& offsets() const { return h_; }
  // H + t; t >= -h_1.
  AdmissibleTuple shifted(std::int64_t t) const;

private:
  std::vector<std::int64_t> h_;
};

struct AdmissibilityVerdict {
  bool admissible = true;
  std::optional<std::uint64_t> witness; // smallest prime whose residues are all covered
};

// Only primes p <= k can have every residue class hit.
AdmissibilityVerdict is_admissible(const AdmissibleTuple& h);

struct SmoothnessOffense {
  std::uint64_t prime = 0;
  std::int64_t lower = 0; // h_i
  std::int64_t upper = 0; // h_j
};

struct SmoothnessVerdict {
  bool ok = true;
  std::optional<SmoothnessOffense> offense; // first offending pair in (i, j) order
};

// Every prime factor of every h_j - h_i is <= w. Throws std::invalid_argument for w < 2.
SmoothnessVerdict smooth_differences_ok(const AdmissibleTuple& h, std::uint64_t w);

// Product of primes <= w; throws std::range_error past 64 bits.
std::uint64_t primorial(std::uint64_t w);

enum class RealizationMode { ReportOnly, PrimorialRepair };

std::string_view to_string(RealizationMode m);

struct RealizationDiagnostics {
  AdmissibilityVerdict admissibility;
  SmoothnessVerdict smoothness;
  std::uint64_t w = 0;
  // max over i of b_i / target_i and its reciprocal
  double worst_factor = 1.0;
  bool within_factor_two = true;
  // pairs i < j with c_i < c_j but b_i > b_j
  std::uint64_t order_inversions = 0;
  // pairs with nu(i) < nu(j): b_i > b_j, b_i == b_j, b_i < b_j
  std::uint64_t cross_column_separated = 0;
  std::uint64_t cross_column_ties = 0;
  std::uint64_t cross_column_inverted = 0;
  double min_cross_column_ratio = 0.0; // min b_i / b_j over nu(i) < nu(j)
  double separation_target = 0.0;      // (log N)^{1/k}
};

struct EptTupleRealization {
  std::vector<std::uint64_t> b;
  std::vector<std::int64_t> h; // prefix sums of b
  std::vector<Rational> beta;
  std::vector<Rational> c;
  double log_n = 0.0;
  RealizationMode mode = RealizationMode::ReportOnly;
  RealizationDiagnostics diagnostics;

  // b_i / b_j for the scheduled indices i, j (1-based).
  double b_ratio(std::size_t i, std::size_t j) const;
  std::vector<std::vector<double>> b_ratio_matrix() const;
};

struct RealizationOptions {
  RealizationMode mode = RealizationMode::ReportOnly;
  std::uint64_t w = 2;        // smoothness bound
  std::vector<Rational> beta; // empty means all 1
};

// b_i = max(1, round(beta_i (log N)^{c_i})) over the scheduled indices;
// in primorial-repair mode each b_i is raised to a multiple of primorial(w).
// Throws std::invalid_argument for log_n <= 1 or a beta list of the wrong
// length.
EptTupleRealization build_ept_tuple(const ExponentModel& model, double log_n,
                                    const RealizationOptions& opts = {});

} // namespace epgap
