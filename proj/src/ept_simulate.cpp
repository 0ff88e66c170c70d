#include "epgap/ept.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace epgap {

std::string_view to_string(SimulationMode m) {
  return m == SimulationMode::Exhaustive ? "exhaustive" : "random";
}

SimulationConfig simulation_for_params(const EptParameters& params) {
  SimulationConfig c;
  c.shape = params.shape();
  c.min_occupied = params.m + 1;
  return c;
}

SimulationConfig simulation_for_shape(const PartitionShape& shape) {
  SimulationConfig c;
  c.shape = shape;
  c.min_occupied = std::min(occupancy_bound(shape), shape.part_count());
  return c;
}

double SimulationReport::success_rate() const {
  return trials_run == 0 ? 0.0 : static_cast<double>(selections) / static_cast<double>(trials_run);
}

double SimulationReport::left_pass_rate() const {
  return selections == 0 ? 0.0
                         : static_cast<double>(selections_left_all) / static_cast<double>(selections);
}

double SimulationReport::right_pass_rate() const {
  return selections == 0 ? 0.0
                         : static_cast<double>(selections_right_all) / static_cast<double>(selections);
}

std::uint64_t exhaustive_placement_count(const PartitionShape& shape, std::uint64_t lo,
                                         std::uint64_t hi) {
  using u128 = unsigned __int128;
  constexpr u128 cap = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t parts = shape.part_count();
  hi = std::min(hi, parts);
  u128 total = 0;
  u128 binom = 1; // C(parts, s)
  u128 power = 1; // K^s
  for (std::uint64_t s = 0; s <= hi; ++s) {
    if (s > 0) {
      binom = binom * (parts - s + 1) / s;
      power = std::min<u128>(power * shape.part_size, cap);
      binom = std::min(binom, cap);
    }
    if (s >= lo) total = std::min(total + std::min(binom * power, cap), cap);
  }
  return static_cast<std::uint64_t>(total);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counts for one contiguous slice of trials.
struct Tally {
  SimulationReport report;

  void record(const Placement& placement, const ExponentModel& model, std::uint64_t trial,
              bool keep_trace) {
    TrialTrace tr;
    tr.trial = trial;
    tr.occupied = placement.occupied_count();
    ++report.trials_run;
    const SelectionOutcome sel = select_peak(placement);
    tr.failure = sel.failure;
    if (sel.ok()) {
      ++report.selections;
      tr.column = sel.selection->column;
      tr.index = sel.selection->index;
      const ClaimReport claims = check_claims(*sel.selection, model);
      tr.left_checked = claims.left.size();
      tr.right_checked = claims.right.size();
      for (const auto& c : claims.left) tr.left_held += c.holds;
      for (const auto& c : claims.right) tr.right_held += c.holds;
      report.left_checked += tr.left_checked;
      report.left_held += tr.left_held;
      report.right_checked += tr.right_checked;
      report.right_held += tr.right_held;
      report.selections_left_all += tr.left_held == tr.left_checked;
      report.selections_right_all += tr.right_held == tr.right_checked;
    } else if (sel.failure == SelectionFailure::NoColumn) {
      ++report.failures_no_column;
    } else {
      ++report.failures_successors;
    }
    if (keep_trace) report.traces.push_back(tr);
  }
};

void merge_into(SimulationReport& into, SimulationReport&& part) {
  into.trials_run += part.trials_run;
  into.selections += part.selections;
  into.failures_no_column += part.failures_no_column;
  into.failures_successors += part.failures_successors;
  into.left_checked += part.left_checked;
  into.left_held += part.left_held;
  into.selections_left_all += part.selections_left_all;
  into.right_checked += part.right_checked;
  into.right_held += part.right_held;
  into.selections_right_all += part.selections_right_all;
  into.complete = into.complete && part.complete;
  into.traces.insert(into.traces.end(), std::make_move_iterator(part.traces.begin()),
                     std::make_move_iterator(part.traces.end()));
}

Placement random_placement(const PartitionShape& shape, std::uint64_t lo, std::uint64_t hi,
                           std::mt19937_64& rng, std::vector<std::uint64_t>& scratch) {
  const std::uint64_t parts = shape.part_count();
  const std::uint64_t occupied = lo + rng() % (hi - lo + 1);
  scratch.resize(parts);
  std::iota(scratch.begin(), scratch.end(), std::uint64_t{0});
  for (std::uint64_t s = 0; s < occupied; ++s) {
    const std::uint64_t pick = s + rng() % (parts - s);
    std::swap(scratch[s], scratch[pick]);
  }
  Placement p(shape);
  for (std::uint64_t s = 0; s < occupied; ++s) {
    const std::uint64_t part = scratch[s];
    p.place(part / shape.parts_per_column, part % shape.parts_per_column,
            1 + rng() % shape.part_size);
  }
  return p;
}

SimulationReport run_random(const SimulationConfig& cfg, std::uint64_t lo, std::uint64_t hi) {
  const ExponentModel model(cfg.shape);
  const unsigned threads = std::max(1u, cfg.threads);
  auto slice = [&](std::uint64_t from, std::uint64_t to) {
    Tally t;
    std::vector<std::uint64_t> scratch;
    for (std::uint64_t trial = from; trial < to; ++trial) {
      std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(trial)));
      const Placement p = random_placement(cfg.shape, lo, hi, rng, scratch);
      t.record(p, model, trial, cfg.trace);
    }
    return std::move(t.report);
  };

  SimulationReport out;
  if (threads == 1 || cfg.trials < 2 * threads) {
    merge_into(out, slice(0, cfg.trials));
    return out;
  }
  std::vector<std::future<SimulationReport>> work;
  const std::uint64_t step = (cfg.trials + threads - 1) / threads;
  for (std::uint64_t from = 0; from < cfg.trials; from += step)
    work.push_back(std::async(std::launch::async, slice, from, std::min(cfg.trials, from + step)));
  for (auto& w : work) merge_into(out, w.get());
  return out;
}

// Visits every placement whose occupied set is `mask`, lambdas in
// lexicographic order. Returns false once the budget is used up.
bool visit_mask(std::uint64_t mask, const SimulationConfig& cfg, const ExponentModel& model,
                Tally& tally, std::uint64_t& ordinal, std::uint64_t budget) {
  const PartitionShape& s = cfg.shape;
  std::vector<std::uint64_t> parts;
  for (std::uint64_t b = 0; b < s.part_count(); ++b)
    if (mask >> b & 1) parts.push_back(b);
  std::vector<std::uint64_t> lambda(parts.size(), 1);
  while (true) {
    if (ordinal >= budget) return false;
    Placement p(s);
    for (std::size_t q = 0; q < parts.size(); ++q)
      p.place(parts[q] / s.parts_per_column, parts[q] % s.parts_per_column, lambda[q]);
    tally.record(p, model, ordinal, cfg.trace);
    ++ordinal;
    std::size_t q = 0;
    while (q < lambda.size() && lambda[q] == s.part_size) lambda[q++] = 1;
    if (q == lambda.size()) return true;
    ++lambda[q];
  }
}

SimulationReport run_exhaustive(const SimulationConfig& cfg, std::uint64_t lo, std::uint64_t hi) {
  const PartitionShape& s = cfg.shape;
  if (s.part_count() > 24)
    throw std::invalid_argument("exhaustive simulation is limited to 24 parts, shape has " +
                                std::to_string(s.part_count()));
  const ExponentModel model(s);
  const std::uint64_t masks = std::uint64_t{1} << s.part_count();
  const std::uint64_t total = exhaustive_placement_count(s, lo, hi);
  const unsigned threads = std::max(1u, cfg.threads);

  auto in_range = [&](std::uint64_t mask) {
    const auto c = static_cast<std::uint64_t>(std::popcount(mask));
    return c >= lo && c <= hi;
  };

  SimulationReport out;
  out.trials_planned = total;
  if (total > cfg.budget || threads == 1) {
    Tally t;
    std::uint64_t ordinal = 0;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      if (!in_range(mask)) continue;
      if (!visit_mask(mask, cfg, model, t, ordinal, cfg.budget)) {
        t.report.complete = false;
        break;
      }
    }
    merge_into(out, std::move(t.report));
    return out;
  }

  auto slice = [&](std::uint64_t from, std::uint64_t to) {
    Tally t;
    std::uint64_t ordinal = 0;
    for (std::uint64_t mask = from; mask < to; ++mask)
      if (in_range(mask)) visit_mask(mask, cfg, model, t, ordinal, std::numeric_limits<std::uint64_t>::max());
    return std::move(t.report);
  };
  std::vector<std::future<SimulationReport>> work;
  const std::uint64_t step = (masks + threads - 1) / threads;
  for (std::uint64_t from = 0; from < masks; from += step)
    work.push_back(std::async(std::launch::async, slice, from, std::min(masks, from + step)));
  for (auto& w : work) merge_into(out, w.get());
  for (std::uint64_t n = 0; n < out.traces.size(); ++n) out.traces[n].trial = n;
  return out;
}

} // namespace

SimulationReport simulate(const SimulationConfig& config) {
  const PartitionShape shape = toy_shape(config.shape.columns, config.shape.parts_per_column,
                                         config.shape.part_size, config.shape.threshold);
  const std::uint64_t parts = shape.part_count();
  const std::uint64_t hi = config.max_occupied == 0 ? parts : std::min(config.max_occupied, parts);
  const std::uint64_t lo = config.min_occupied;
  if (lo > hi)
    throw std::invalid_argument("occupancy range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "] is empty");

  SimulationReport out = config.mode == SimulationMode::Exhaustive ? run_exhaustive(config, lo, hi)
                                                                   : run_random(config, lo, hi);
  out.mode = config.mode;
  out.shape = shape;
  out.min_occupied = lo;
  out.max_occupied = hi;
  out.guaranteed_bound = occupancy_bound(shape);
  if (config.mode == SimulationMode::Random) out.trials_planned = config.trials;
  return out;
}

} // namespace epgap
