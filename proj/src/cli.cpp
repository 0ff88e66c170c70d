#include "epgap/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "epgap/ept.hpp"
#include "epgap/gap_records.hpp"
#include "epgap/linear_forms.hpp"
#include "epgap/sieve.hpp"
#include "epgap/tuples.hpp"

namespace epgap::cli {

using json = nlohmann::ordered_json;

namespace {

// Signals a checker-detected violation; carries the finished report.
struct VerificationFailed {
  int code = kExitVerification;
};

json fixed(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return std::strtod(buf, nullptr);
}

SieveOptions sieve_options(const RunConfig& c) {
  SieveOptions o;
  o.segment_size = c.segment;
  o.threads = c.threads;
  return o;
}

std::uint64_t required_limit(const RunConfig& c) {
  if (c.limit.empty()) throw std::invalid_argument("--limit is required");
  return parse_limit(c.limit);
}

Format format_or(const RunConfig& c, Format fallback) { return c.format.value_or(fallback); }

void emit_json(std::ostream& os, const json& doc) { os << doc.dump(2) << '\n'; }

json coords_json(const IndexCoords& c) { return json{{"nu", c.nu}, {"mu", c.mu}, {"lambda", c.lambda}}; }

json params_json(const EptParameters& p) {
  return json{{"ell", p.ell}, {"L", p.L}, {"m", p.m}, {"J", p.J}, {"k", p.k}, {"K", p.K},
              {"columns", p.columns}, {"parts", p.parts()}, {"indexed", p.shape().indexed_count()}};
}

json shape_json(const PartitionShape& s) {
  return json{{"columns", s.columns}, {"J", s.parts_per_column}, {"K", s.part_size},
              {"L", s.threshold},     {"k", s.k()},              {"indexed", s.indexed_count()}};
}

PartitionShape shape_from(const RunConfig& c, std::optional<EptParameters>& params) {
  if (c.toy) {
    const auto& t = *c.toy;
    return toy_shape(t[0], t[1], t[2], t[3]);
  }
  params = derive_params(c.ell, c.k_mult);
  return params->shape();
}

// --- subcommands -----------------------------------------------------------

int cmd_sieve(const RunConfig& c, std::ostream& os) {
  const std::uint64_t limit = required_limit(c);
  const auto primes = primes_up_to(limit, sieve_options(c));
  if (format_or(c, Format::Csv) == Format::Csv) {
    os << "n,p\n";
    for (std::size_t i = 0; i < primes.size(); ++i) os << i + 1 << ',' << primes[i] << '\n';
  } else {
    emit_json(os, json{{"limit", limit},
                       {"count", primes.size()},
                       {"largest", primes.empty() ? json(nullptr) : json(primes.back())},
                       {"segment_size", c.segment}});
  }
  return kExitOk;
}

int cmd_gaps(const RunConfig& c, std::ostream& os) {
  const std::uint64_t limit = required_limit(c);
  const auto gaps = gap_stream(limit, sieve_options(c));
  if (format_or(c, Format::Csv) == Format::Csv) {
    write_gap_csv(os, gaps);
  } else {
    json doc{{"limit", limit}, {"count", gaps.size()}};
    if (!gaps.empty()) {
      auto best = std::max_element(gaps.begin(), gaps.end(),
                                   [](const GapEntry& a, const GapEntry& b) { return a.d < b.d; });
      doc["max_gap"] = json{{"n", best->n}, {"p", best->p}, {"d", best->d}};
    }
    emit_json(os, doc);
  }
  return kExitOk;
}

int cmd_form(const RunConfig& c, std::ostream& os) {
  const std::uint64_t limit = required_limit(c);
  if (c.coeffs.empty()) throw std::invalid_argument("--coeffs is required");
  const LinearForm form(parse_integer_list(c.coeffs));
  const AlphaProfile prof = alpha_profile(form);
  const Classification cls = classify(form);

  const PrimeTable table = PrimeTable::up_to(limit, sieve_options(c));
  const std::uint64_t first = 2;
  const std::uint64_t last = table.count() >= form.k() + 1 ? table.count() - form.k() : 0;
  const auto values = evaluate_range(form, first, last, table.primes());

  if (format_or(c, Format::Json) == Format::Csv) {
    os << "n,T_n\n";
    for (std::size_t i = 0; i < values.size(); ++i) os << first + i << ',' << values[i] << '\n';
    return kExitOk;
  }

  json doc;
  doc["coeffs"] = std::vector<std::int64_t>(form.coefficients().begin(), form.coefficients().end());
  doc["k"] = form.k();
  doc["alpha"] = prof.alpha;
  doc["classification"] = std::string(to_string(cls.kind));
  doc["degenerate"] = cls.degenerate;
  doc["erdos_easy"] = cls.erdos_easy;
  doc["predicted_sign"] = cls.kind == FormClass::OneSigned ? json(cls.predicted_sign()) : json(nullptr);
  doc["limit"] = limit;
  doc["n_first"] = first;
  doc["n_last"] = last;
  if (form.zero_sum()) {
    const SignChangeReport sc = count_sign_changes(values, first);
    doc["sign_changes"] = sc.count;
    doc["zeros"] = sc.zeros;
    doc["evaluated"] = sc.evaluated;
    const std::size_t keep = std::min(c.positions, sc.positions.size());
    doc["positions"] = std::vector<std::uint64_t>(sc.positions.begin(), sc.positions.begin() + keep);
    doc["positions_truncated"] = keep < sc.positions.size();
  } else {
    doc["sign_changes"] = nullptr;
  }
  emit_json(os, doc);
  return kExitOk;
}

int cmd_records(const RunConfig& c, std::ostream& os) {
  const std::uint64_t limit = required_limit(c);
  const RecordNormalizer norm{c.c1, c.c2};
  const PrimeTable table = PrimeTable::up_to(limit, sieve_options(c));
  const auto records = scan_records(table.primes(), c.ell, norm);

  bool valid = true;
  for (const auto& r : records) valid = valid && peak_ratio(r.m, r.ell, table.gaps()) == r.ratio();

  if (format_or(c, Format::Json) == Format::Csv) {
    write_records_csv(os, records);
  } else {
    json list = json::array();
    for (const auto& r : records)
      list.push_back(json{{"m", r.m},
                          {"p", r.p},
                          {"d", r.d},
                          {"ratio", r.ratio().str()},
                          {"ratio_num", r.d},
                          {"ratio_den", r.max_neighbor},
                          {"normalized", fixed(r.normalized)}});
    emit_json(os, json{{"limit", limit},
                       {"ell", c.ell},
                       {"c1", fixed(c.c1)},
                       {"c2", fixed(c.c2)},
                       {"c", fixed(norm.exponent(c.ell))},
                       {"count", records.size()},
                       {"revalidated", valid},
                       {"records", list}});
  }
  if (!valid) throw VerificationFailed{};
  return kExitOk;
}

int cmd_superdominant(const RunConfig& c, std::ostream& os) {
  const std::uint64_t limit = required_limit(c);
  const PrimeTable table = PrimeTable::up_to(limit, sieve_options(c));
  const GapView gaps = table.gaps();
  const auto hits = find_superdominant(gaps);
  if (format_or(c, Format::Json) == Format::Csv) {
    os << "n,p,d_n,d_n1,d_n2\n";
    for (auto n : hits)
      os << n << ',' << table.prime(n) << ',' << gaps(n) << ',' << gaps(n + 1) << ',' << gaps(n + 2)
         << '\n';
  } else {
    json list = json::array();
    for (auto n : hits)
      list.push_back(json{{"n", n}, {"p", table.prime(n)}, {"d_n", gaps(n)},
                          {"d_n1", gaps(n + 1)}, {"d_n2", gaps(n + 2)}});
    emit_json(os, json{{"limit", limit}, {"count", hits.size()}, {"entries", list}});
  }
  return kExitOk;
}

std::vector<std::int64_t> read_tuple_arg(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return parse_integer_list(arg);
  std::ifstream in(arg.substr(1));
  if (!in) throw std::invalid_argument("cannot read tuple file " + arg.substr(1));
  std::vector<std::int64_t> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_integer_list(line).at(0));
  }
  return out;
}

json smoothness_json(const SmoothnessVerdict& v, std::uint64_t w) {
  json doc{{"w", w}, {"ok", v.ok}};
  if (v.offense)
    doc["offense"] = json{{"prime", v.offense->prime}, {"pair", {v.offense->lower, v.offense->upper}}};
  return doc;
}

json admissibility_json(const AdmissibilityVerdict& v) {
  return json{{"admissible", v.admissible},
              {"witness", v.witness ? json(*v.witness) : json(nullptr)}};
}

int cmd_tuple(const RunConfig& c, std::ostream& os) {
  if (!c.h.empty()) {
    const AdmissibleTuple tuple(read_tuple_arg(c.h));
    json doc{{"h", tuple.offsets()}, {"k", tuple.k()}, {"diameter", tuple.diameter()}};
    const auto adm = is_admissible(tuple);
    doc["admissible"] = adm.admissible;
    doc["witness"] = adm.witness ? json(*adm.witness) : json(nullptr);
    if (c.w) doc["smoothness"] = smoothness_json(smooth_differences_ok(tuple, *c.w), *c.w);
    emit_json(os, doc);
    return kExitOk;
  }
  if (!c.log_n) throw std::invalid_argument("tuple needs --h or --logn");

  std::optional<EptParameters> params;
  const PartitionShape shape = shape_from(c, params);
  const ExponentModel model(shape);
  RealizationOptions opts;
  opts.mode = c.repair ? RealizationMode::PrimorialRepair : RealizationMode::ReportOnly;
  opts.w = c.w.value_or(2);
  const EptTupleRealization r = build_ept_tuple(model, *c.log_n, opts);
  const auto& d = r.diagnostics;

  json cs = json::array();
  for (const auto& x : r.c) cs.push_back(x.str());
  json doc;
  doc["shape"] = shape_json(shape);
  if (params) doc["params"] = params_json(*params);
  doc["log_n"] = fixed(r.log_n);
  doc["mode"] = std::string(to_string(r.mode));
  doc["b"] = r.b;
  doc["h"] = r.h;
  doc["c"] = cs;
  doc["diagnostics"] = json{
      {"admissibility", admissibility_json(d.admissibility)},
      {"smoothness", smoothness_json(d.smoothness, d.w)},
      {"worst_factor", fixed(d.worst_factor)},
      {"within_factor_two", d.within_factor_two},
      {"order_inversions", d.order_inversions},
      {"cross_column", json{{"separated", d.cross_column_separated},
                            {"ties", d.cross_column_ties},
                            {"inverted", d.cross_column_inverted},
                            {"min_ratio", fixed(d.min_cross_column_ratio)},
                            {"separation_target", fixed(d.separation_target)}}}};
  emit_json(os, doc);
  return kExitOk;
}

int cmd_ept_params(const RunConfig& c, std::ostream& os) {
  const EptParameters p = derive_params(c.ell, c.k_mult);
  const ParameterIdentities id = check_identities(p);
  json doc = params_json(p);
  doc["identities"] = json{{"16m+1==31J", id.parts_equal_31J},
                           {"16m+1==992L-527", id.parts_equal_closed},
                           {"m==62ell+91", id.m_closed},
                           {"62J*K==k", id.k_factorization},
                           {"2(16m+1)|k", id.k_divisible}};
  emit_json(os, doc);
  if (!id.ok()) throw VerificationFailed{};
  return kExitOk;
}

int cmd_ept_verify(const RunConfig& c, std::ostream& os) {
  std::optional<EptParameters> params;
  const PartitionShape shape = shape_from(c, params);
  const ExponentModel model(shape);
  bool ok = true;
  json doc;
  doc["shape"] = shape_json(shape);

  if (params) {
    doc["params"] = params_json(*params);
    const ParameterIdentities id = check_identities(*params);
    doc["identities"] = id.ok();
    ok = ok && id.ok();
  }

  // Exponent extremes sit at (C-1, 0, 1) and (0, J-1, K).
  const Rational lo = model.exponent(IndexCoords{shape.columns - 1, 0, 1});
  const Rational hi = model.exponent(IndexCoords{0, shape.parts_per_column - 1, shape.part_size});
  Rational scan_lo = model.exponent(1);
  Rational scan_hi = scan_lo;
  bool bijection = true;
  for (std::uint64_t i = 1; i <= model.indexed_count(); ++i) {
    const Rational e = model.exponent(i);
    scan_lo = std::min(scan_lo, e);
    scan_hi = std::max(scan_hi, e);
    bijection = bijection && model.encode(model.decode(i)) == i;
  }
  const Rational one_over_k(1, static_cast<std::int64_t>(model.k()));
  const bool extremes = lo == one_over_k && hi == Rational(1, 2) && scan_lo == lo && scan_hi == hi;
  doc["exponents"] = json{{"min", scan_lo.str()}, {"max", scan_hi.str()}, {"expected_min", one_over_k.str()},
                          {"expected_max", "1/2"}, {"ok", extremes}};
  doc["bijection"] = bijection;
  ok = ok && extremes && bijection;

  MonotonicityOptions mo;
  mo.seed = c.seed;
  const std::uint64_t n = model.indexed_count();
  const bool fits = n * (n - 1) / 2 <= mo.pair_budget;
  mo.mode = (c.exhaustive || fits) ? CheckMode::Exhaustive : CheckMode::Sampled;
  const MonotonicityReport mono = verify_monotonicity(model, mo);
  json viol = json::array();
  for (const auto& v : mono.violations)
    viol.push_back(json{{"lower", coords_json(v.lower)}, {"upper", coords_json(v.upper)},
                        {"difference", v.difference.str()}, {"cross_column", v.cross_column}});
  doc["monotonicity"] = json{
      {"mode", std::string(to_string(mono.mode))},
      {"within_pairs", mono.within_pairs},
      {"cross_pairs", mono.cross_pairs},
      {"violations", mono.violation_count},
      {"closed_form_mismatches", mono.closed_form_mismatches},
      {"min_within_difference", mono.min_within_difference ? json(mono.min_within_difference->str()) : json(nullptr)},
      {"max_cross_difference", mono.max_cross_difference ? json(mono.max_cross_difference->str()) : json(nullptr)},
      {"examples", viol},
      {"ok", mono.ok()}};
  ok = ok && mono.ok();

  if (params) {
    const PigeonholeReport ph = pigeonhole_bounds(*params);
    doc["pigeonhole"] = json{{"L", ph.L},
                             {"required", ph.required},
                             {"no_column_bound", ph.no_column_bound},
                             {"no_column_sharp", ph.no_column_sharp},
                             {"split_bound", ph.split_bound},
                             {"split_closed_form", ph.split_closed_form},
                             {"ok", ph.ok()}};
    ok = ok && ph.ok();
  }
  doc["occupancy_bound"] = occupancy_bound(shape);
  doc["ok"] = ok;
  emit_json(os, doc);
  if (!ok) throw VerificationFailed{};
  return kExitOk;
}

json trace_json(const TrialTrace& t) {
  json doc{{"trial", t.trial}, {"occupied", t.occupied}, {"failure", std::string(to_string(t.failure))}};
  if (t.failure == SelectionFailure::None) {
    doc["column"] = t.column;
    doc["index"] = t.index;
    doc["left"] = json{{"checked", t.left_checked}, {"held", t.left_held}};
    doc["right"] = json{{"checked", t.right_checked}, {"held", t.right_held}};
  }
  return doc;
}

int cmd_ept_simulate(const RunConfig& c, std::ostream& os) {
  std::optional<EptParameters> params;
  const PartitionShape shape = shape_from(c, params);
  SimulationConfig cfg = params ? simulation_for_params(*params) : simulation_for_shape(shape);
  if (c.min_occupied) cfg.min_occupied = *c.min_occupied;
  cfg.trials = c.trials;
  cfg.seed = c.seed;
  cfg.mode = c.exhaustive ? SimulationMode::Exhaustive : SimulationMode::Random;
  cfg.threads = c.threads;
  cfg.trace = c.trace;
  const SimulationReport r = simulate(cfg);

  const bool gated = r.min_occupied >= r.guaranteed_bound;
  const bool selection_ok = !gated || r.failures() == 0;
  const bool left_ok = r.left_held == r.left_checked;

  json doc;
  doc["mode"] = std::string(to_string(r.mode));
  doc["shape"] = shape_json(shape);
  if (params) doc["params"] = params_json(*params);
  doc["seed"] = c.seed;
  doc["occupied_range"] = {r.min_occupied, r.max_occupied};
  doc["guaranteed_bound"] = r.guaranteed_bound;
  doc["complete"] = r.complete;
  doc["trials_planned"] = r.trials_planned;
  doc["trials_run"] = r.trials_run;
  doc["selections"] = r.selections;
  doc["failures"] = json{{"no_column", r.failures_no_column}, {"insufficient_successors", r.failures_successors}};
  doc["success_rate"] = fixed(r.success_rate());
  doc["left_claim"] = json{{"checked", r.left_checked},
                           {"held", r.left_held},
                           {"selections_all_held", r.selections_left_all},
                           {"pass_rate", fixed(r.left_pass_rate())}};
  doc["right_claim"] = json{{"checked", r.right_checked},
                            {"held", r.right_held},
                            {"selections_all_held", r.selections_right_all},
                            {"pass_rate", fixed(r.right_pass_rate())}};
  doc["ok"] = selection_ok && left_ok;

  if (c.trace) {
    for (const auto& t : r.traces) os << trace_json(t).dump() << '\n';
    os << doc.dump() << '\n';
  } else {
    emit_json(os, doc);
  }
  if (!(selection_ok && left_ok)) throw VerificationFailed{};
  return kExitOk;
}

int dispatch(const RunConfig& c, std::ostream& os) {
  switch (c.subcommand) {
    case Subcommand::Sieve: return cmd_sieve(c, os);
    case Subcommand::Gaps: return cmd_gaps(c, os);
    case Subcommand::Form: return cmd_form(c, os);
    case Subcommand::Records: return cmd_records(c, os);
    case Subcommand::Superdominant: return cmd_superdominant(c, os);
    case Subcommand::Tuple: return cmd_tuple(c, os);
    case Subcommand::EptParams: return cmd_ept_params(c, os);
    case Subcommand::EptVerify: return cmd_ept_verify(c, os);
    case Subcommand::EptSimulate: return cmd_ept_simulate(c, os);
  }
  return kExitError;
}

void error_line(std::ostream& err, std::string_view kind, std::string_view message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

} // namespace

std::uint64_t parse_limit(std::string_view text) {
  auto parse_u64 = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range)
      throw std::range_error("value '" + std::string(text) + "' exceeds 64-bit range");
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    return v;
  };
  const auto e = text.find_first_of("eE");
  if (e == std::string_view::npos) return parse_u64(text);
  std::uint64_t v = parse_u64(text.substr(0, e));
  const std::uint64_t exp = parse_u64(text.substr(e + 1));
  for (std::uint64_t i = 0; i < exp; ++i)
    if (__builtin_mul_overflow(v, std::uint64_t{10}, &v))
      throw std::range_error("value '" + std::string(text) + "' exceeds 64-bit range");
  return v;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.out) {
      std::ostringstream buffer;
      int code = kExitOk;
      try {
        code = dispatch(config, buffer);
      } catch (const VerificationFailed& v) {
        code = v.code;
      }
      std::ofstream file(*config.out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file " + *config.out);
      file << buffer.str();
      return code;
    }
    return dispatch(config, out);
  } catch (const VerificationFailed& v) {
    return v.code;
  } catch (const BudgetExceeded& e) {
    error_line(err, "budget_exceeded", e.what());
  } catch (const std::range_error& e) {
    error_line(err, "range_error", e.what());
  } catch (const std::out_of_range& e) {
    error_line(err, "range_error", e.what());
  } catch (const std::overflow_error& e) {
    error_line(err, "range_error", e.what());
  } catch (const std::invalid_argument& e) {
    error_line(err, "invalid_argument", e.what());
  } catch (const std::logic_error& e) {
    error_line(err, "contract_error", e.what());
  } catch (const std::exception& e) {
    error_line(err, "error", e.what());
  }
  return kExitError;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Prime-gap sign-change toolkit"};
  app.set_help_flag("--help", "print usage");
  app.require_subcommand(1);

  std::string format;
  std::string out_path;
  std::string toy;
  std::uint64_t w = 0;
  std::uint64_t min_occupied = 0;
  double log_n = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "write the report to this file");
  };
  auto add_sieve = [&](CLI::App* sub) {
    sub->add_option("--limit", cfg.limit, "sieve bound")->required();
    sub->add_option("--segment", cfg.segment, "sieve segment size");
    sub->add_option("--threads", cfg.threads, "worker threads");
  };
  auto add_shape = [&](CLI::App* sub) {
    sub->add_option("--ell", cfg.ell, "window radius ell");
    sub->add_option("--k-mult", cfg.k_mult, "K = k / (62J)");
    sub->add_option("--toy", toy, "toy shape C,J,K,L");
  };

  auto* sieve = app.add_subcommand("sieve", "list primes up to --limit");
  add_sieve(sieve);
  add_common(sieve);

  auto* gaps = app.add_subcommand("gaps", "dump (n, p, d) up to --limit");
  add_sieve(gaps);
  add_common(gaps);

  auto* form = app.add_subcommand("form", "classify a linear form and count its sign changes");
  add_sieve(form);
  add_common(form);
  form->add_option("--coeffs", cfg.coeffs, "comma-separated integer coefficients")->required();
  form->add_option("--positions", cfg.positions, "max sign-change positions reported");

  auto* records = app.add_subcommand("records", "running records of the peak ratio");
  add_sieve(records);
  add_common(records);
  records->add_option("--ell", cfg.ell, "window radius");
  records->add_option("--c1", cfg.c1, "normalizer C1 (0 for plain ratios)");
  records->add_option("--c2", cfg.c2, "normalizer C2");

  auto* superdom = app.add_subcommand("superdominant", "n with d_n > d_{n+1} + d_{n+2}");
  add_sieve(superdom);
  add_common(superdom);

  auto* tuple = app.add_subcommand("tuple", "admissibility and smoothness of a tuple");
  add_common(tuple);
  add_shape(tuple);
  tuple->add_option("--h", cfg.h, "comma-separated offsets or @file");
  tuple->add_option("--w", w, "smoothness bound");
  tuple->add_option("--logn", log_n, "log N for the scheduled tuple");
  tuple->add_flag("--repair", cfg.repair, "round increments up to primorial(w) multiples");

  auto* ept = app.add_subcommand("ept", "construction checks");
  ept->require_subcommand(1);
  auto* params = ept->add_subcommand("params", "derived parameters");
  params->add_option("--ell", cfg.ell, "ell");
  params->add_option("--k-mult", cfg.k_mult, "K = k / (62J)");
  add_common(params);

  auto* verify = ept->add_subcommand("verify", "identities, monotonicity, pigeonhole");
  add_shape(verify);
  add_common(verify);
  verify->add_flag("--exhaustive", cfg.exhaustive, "force exhaustive pair enumeration");
  verify->add_option("--seed", cfg.seed, "seed for sampled mode");

  auto* sim = ept->add_subcommand("simulate", "peak-selection simulation");
  add_shape(sim);
  add_common(sim);
  sim->add_option("--trials", cfg.trials, "random trials");
  sim->add_option("--seed", cfg.seed, "base seed");
  sim->add_flag("--exhaustive", cfg.exhaustive, "enumerate every placement (toy shapes)");
  sim->add_flag("--trace", cfg.trace, "line-delimited per-trial records");
  sim->add_option("--threads", cfg.threads, "worker threads");
  sim->add_option("--min-occupied", min_occupied, "occupancy floor override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  if (*sieve) cfg.subcommand = Subcommand::Sieve;
  else if (*gaps) cfg.subcommand = Subcommand::Gaps;
  else if (*form) cfg.subcommand = Subcommand::Form;
  else if (*records) cfg.subcommand = Subcommand::Records;
  else if (*superdom) cfg.subcommand = Subcommand::Superdominant;
  else if (*tuple) cfg.subcommand = Subcommand::Tuple;
  else if (*params) cfg.subcommand = Subcommand::EptParams;
  else if (*verify) cfg.subcommand = Subcommand::EptVerify;
  else cfg.subcommand = Subcommand::EptSimulate;

  if (!format.empty()) cfg.format = format == "csv" ? Format::Csv : Format::Json;
  if (!out_path.empty()) cfg.out = out_path;
  if (w != 0) cfg.w = w;
  if (log_n != 0.0) cfg.log_n = log_n;
  if (min_occupied != 0) cfg.min_occupied = min_occupied;
  if (!toy.empty()) {
    try {
      const auto v = parse_integer_list(toy);
      if (v.size() != 4 || std::any_of(v.begin(), v.end(), [](auto x) { return x <= 0; }))
        throw std::invalid_argument("--toy needs four positive integers C,J,K,L");
      cfg.toy = std::array<std::uint64_t, 4>{static_cast<std::uint64_t>(v[0]), static_cast<std::uint64_t>(v[1]),
                                             static_cast<std::uint64_t>(v[2]), static_cast<std::uint64_t>(v[3])};
    } catch (const std::invalid_argument& e) {
      error_line(err, "invalid_argument", e.what());
      return kExitError;
    }
  }
  return run(cfg, out, err);
}

} // namespace epgap::cli
