#include "epgap/ept.hpp"

#include <algorithm>
#include <string>

namespace epgap {

Placement::Placement(const PartitionShape& shape)
    : shape_(toy_shape(shape.columns, shape.parts_per_column, shape.part_size, shape.threshold)),
      lambda_(shape.part_count(), 0) {}

Placement Placement::from_indices(const PartitionShape& shape,
                                  const std::vector<std::uint64_t>& idx) {
  Placement out(shape);
  for (std::uint64_t i : idx) out.place_index(i);
  return out;
}

void Placement::place(std::uint64_t nu, std::uint64_t mu, std::uint64_t lambda) {
  if (nu >= shape_.columns || mu >= shape_.parts_per_column || lambda < 1 ||
      lambda > shape_.part_size)
    throw std::logic_error("placement coordinates (" + std::to_string(nu) + "," +
                           std::to_string(mu) + "," + std::to_string(lambda) + ") out of range");
  auto& slot = lambda_[nu * shape_.parts_per_column + mu];
  if (slot != 0)
    throw std::logic_error("part (" + std::to_string(nu) + "," + std::to_string(mu) +
                           ") already holds a prime");
  slot = static_cast<std::uint32_t>(lambda);
  ++occupied_;
}

void Placement::place_index(std::uint64_t i) {
  if (i < 1 || i > shape_.indexed_count())
    throw std::logic_error("placement index " + std::to_string(i) + " out of range");
  const std::uint64_t z = i - 1;
  const std::uint64_t part = z / shape_.part_size;
  place(part / shape_.parts_per_column, part % shape_.parts_per_column, z % shape_.part_size + 1);
}

std::uint64_t Placement::lambda_at(std::uint64_t nu, std::uint64_t mu) const {
  if (nu >= shape_.columns || mu >= shape_.parts_per_column)
    throw std::out_of_range("part out of range");
  return lambda_[nu * shape_.parts_per_column + mu];
}

std::vector<std::uint64_t> Placement::prime_indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(occupied_);
  for (std::uint64_t part = 0; part < lambda_.size(); ++part)
    if (lambda_[part] != 0) out.push_back(part * shape_.part_size + lambda_[part]);
  return out;
}

std::vector<std::uint64_t> Placement::column_counts() const {
  std::vector<std::uint64_t> out(shape_.columns, 0);
  for (std::uint64_t part = 0; part < lambda_.size(); ++part)
    if (lambda_[part] != 0) ++out[part / shape_.parts_per_column];
  return out;
}

std::string_view to_string(SelectionFailure f) {
  switch (f) {
    case SelectionFailure::None: return "none";
    case SelectionFailure::NoColumn: return "no-column";
    case SelectionFailure::InsufficientSuccessors: return "insufficient-successors";
  }
  return "?";
}

SelectionOutcome select_peak(const Placement& placement) {
  const PartitionShape& s = placement.shape();
  const std::uint64_t L = s.threshold;
  const auto counts = placement.column_counts();

  SelectionOutcome out;
  auto first = std::find_if(counts.begin(), counts.end(), [L](std::uint64_t c) { return c >= L; });
  if (first == counts.end()) {
    out.failure = SelectionFailure::NoColumn;
    return out;
  }
  const auto y = static_cast<std::uint64_t>(first - counts.begin());
  std::uint64_t later = 0;
  for (std::uint64_t nu = y + 1; nu < s.columns; ++nu) later += counts[nu];
  if (later < L) {
    out.failure = SelectionFailure::InsufficientSuccessors;
    return out;
  }

  const auto primes = placement.prime_indices();
  const std::uint64_t block = s.parts_per_column * s.part_size;
  const std::uint64_t top = (y + 1) * block;

  SelectionResult r;
  r.column = y;
  r.shape = s;
  r.column_counts = counts;
  // Last prime index <= top is the peak; column y holds >= L of them.
  auto it = std::upper_bound(primes.begin(), primes.end(), top);
  auto peak = it - 1;
  r.index = *peak;
  for (std::uint64_t t = 1; t < L; ++t) r.predecessors.push_back(*(peak - t));
  r.successors.assign(it, primes.end());
  out.selection = std::move(r);
  return out;
}

PigeonholeReport pigeonhole_bounds(std::uint64_t L) {
  if (L < 2) throw std::invalid_argument("pigeonhole bounds need L >= 2");
  PigeonholeReport r;
  r.L = L;
  r.m = 62 * L - 33;
  r.J = 32 * L - 17;
  r.required = r.m + 1;
  r.no_column_bound = 31 * L;
  r.no_column_sharp = 31 * (L - 1);
  r.split_bound = 30 * (L - 1) + r.J;
  r.split_closed_form = 62 * L - 47;
  return r;
}

std::uint64_t occupancy_bound(const PartitionShape& s) {
  const std::uint64_t spread = s.columns * (s.threshold - 1);
  const std::uint64_t split = (s.columns - 1) * (s.threshold - 1) + s.parts_per_column;
  return std::max(spread, split) + 1;
}

bool ClaimReport::left_holds() const {
  return std::all_of(left.begin(), left.end(), [](const auto& c) { return c.holds; });
}

bool ClaimReport::right_holds() const {
  return std::all_of(right.begin(), right.end(), [](const auto& c) { return c.holds; });
}

ClaimReport check_claims(const SelectionResult& result, const ExponentModel& model) {
  const PartitionShape& s = model.shape();
  const std::uint64_t ell = s.ell();
  const std::int64_t k = static_cast<std::int64_t>(model.k());
  if (result.predecessors.size() < ell + 1)
    throw std::logic_error("selection has fewer than L-1 predecessors");

  // below[a] = index of p_{m-a}, a = 0..ell+1.
  std::vector<std::uint64_t> below{result.index};
  below.insert(below.end(), result.predecessors.begin(), result.predecessors.end());
  auto left_gap = [&](std::uint64_t a) { return std::pair{below[a + 1], below[a]}; };

  ClaimReport out;
  for (std::uint64_t a = 0; a <= ell; ++a) {
    for (std::uint64_t b = a + 1; b <= ell; ++b) {
      ClaimInequality c;
      c.a = a;
      c.b = b;
      c.first_gap = left_gap(a);
      c.second_gap = left_gap(b);
      c.first_exponent = gap_exponent(model, c.first_gap.first, c.first_gap.second);
      c.second_exponent = gap_exponent(model, c.second_gap.first, c.second_gap.second);
      c.difference = c.first_exponent - c.second_exponent;
      c.required = Rational(static_cast<std::int64_t>(b - a), k);
      c.holds = c.difference >= c.required;
      out.left.push_back(c);
    }
  }

  const auto peak_gap = left_gap(0);
  const Rational peak_exponent = gap_exponent(model, peak_gap.first, peak_gap.second);
  const std::uint64_t column_top = model.column_last(result.column);
  std::uint64_t prev = result.index;
  for (std::uint64_t t = 1; t <= ell && t <= result.successors.size(); ++t) {
    const std::uint64_t next = result.successors[t - 1];
    ClaimInequality c;
    c.a = 0;
    c.b = t;
    c.first_gap = peak_gap;
    c.second_gap = {prev, next};
    c.first_exponent = peak_exponent;
    c.second_exponent = gap_exponent(model, prev, next);
    c.difference = c.first_exponent - c.second_exponent;
    c.required = Rational(1, k);
    c.holds = c.difference >= c.required;
    c.crosses_column_tail = prev < column_top && next > column_top;
    out.right.push_back(c);
    prev = next;
  }
  return out;
}

} // namespace epgap
