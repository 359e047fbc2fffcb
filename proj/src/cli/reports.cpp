#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include "chaincode/analysis.hpp"
#include "chaincode/cli.hpp"
#include "chaincode/errors.hpp"
#include "chaincode/theory.hpp"
#include "chaincode/trace_codes.hpp"

namespace chaincode::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json weight_rows(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& rows) {
  Json a = Json::array();
  for (const auto& [w, f] : rows) a.push_back({{"weight", w}, {"frequency", f}});
  return a;
}

Json rational_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return to_string(r);
}

TraceCode build_code(const RunConfig& c) {
  ChainRing ext(Field(c.p, c.m), c.k);
  auto set = build_set(ext, *c.set, c.nprime);
  return TraceCode(std::move(ext), std::move(set));
}

Json code_json(const CodeSummary& s) {
  return {{"length", s.length},
          {"gray_length", s.gray_length},
          {"dimension", s.gray_dimension},
          {"code_size", s.code_size},
          {"min_distance", s.min_distance}};
}

Json prediction_json(const Prediction& pr) {
  Json j{{"applicable", pr.applicable},
         {"family", pr.family},
         {"kind", to_string(pr.kind)},
         {"reason", pr.reason},
         {"length", pr.length},
         {"dimension", pr.dimension},
         {"weights", weight_rows(pr.weights)}};
  if (pr.bounds) {
    Json b{{"lower", pr.bounds->lower}, {"upper", rational_json(pr.bounds->upper)},
           {"max_weight_count", pr.bounds->max_weight_count}};
    b["lower_exact"] = pr.bounds->lower_exact ? rational_json(*pr.bounds->lower_exact) : Json(nullptr);
    j["bounds"] = std::move(b);
  } else {
    j["bounds"] = nullptr;
  }
  return j;
}

bool within_bounds(const BoundsReport& b, std::uint64_t d, std::size_t weight_count) {
  const bool low = b.lower_exact ? Rational(static_cast<std::int64_t>(d)) >= *b.lower_exact
                                 : static_cast<double>(d) >= b.lower;
  return low && Rational(static_cast<std::int64_t>(d)) <= b.upper && weight_count <= b.max_weight_count;
}

void add_timing(Json& body, const RunConfig& c, Clock::time_point t0) {
  if (c.timing) body["timing_ms"] = ms_since(t0);
}

Json header(const char* command, const RunConfig& c) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"parameters", parameter_echo(c)}};
}

bool is_d3_two_weight_case(const RunConfig& c) {
  return d3_params(c.p, c.m, c.nprime).gcd == 1 && (c.m % 2 == 0 || c.p % 4 == 3);
}

}  // namespace

int default_threads() {
  const char* env = std::getenv("CHAINCODE_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 1024) throw UsageError(std::string("invalid CHAINCODE_THREADS: ") + env);
  return static_cast<int>(v);
}

void validate(const RunConfig& c, bool needs_set) {
  if (c.threads < 0) throw UsageError("--threads must be nonnegative");
  if (!is_prime(c.p)) throw UsageError("--p must be a prime, got " + std::to_string(c.p));
  if (c.m < 1) throw UsageError("--m must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < c.m; ++i) {
    q *= c.p;
    if (q > Field::kMaxOrder) throw UsageError("p^m exceeds the field size cap " + std::to_string(Field::kMaxOrder));
  }
  if (!needs_set) return;
  if (!c.set) throw UsageError("--set is required");
  if (c.k < 2) throw UsageError("--k must be at least 2");
  if (c.k > 64) throw UsageError("--k is unreasonably large");
  if (*c.set == SetKind::d1 && c.p == 2) throw UsageError("D1 needs an odd prime p");
  if (*c.set == SetKind::d3) {
    if (c.nprime == 0) throw UsageError("--nprime is required for d3");
    if ((q - 1) % c.nprime != 0)
      throw UsageError("--nprime " + std::to_string(c.nprime) + " does not divide p^m - 1 = " + std::to_string(q - 1));
  } else if (c.nprime != 0) {
    throw UsageError("--nprime applies to d3 only");
  }
}

Json parameter_echo(const RunConfig& c) {
  Json j;
  j["set"] = c.set ? Json(to_string(*c.set)) : Json(nullptr);
  j["p"] = c.p;
  j["m"] = c.m;
  j["k"] = c.k;
  j["nprime"] = c.nprime;
  return j;
}

Report weights_report(const RunConfig& c) {
  validate(c, true);
  const auto t0 = Clock::now();
  const TraceCode code = build_code(c);
  const CodeSummary s = gray_image_summary(code, c.threads);
  const Prediction pr = predict(*c.set, c.p, c.m, c.k, c.nprime);
  const auto enumerated = s.enumerator.nonzero();

  Report r;
  r.body = header("weights", c);
  r.body["code"] = code_json(s);
  r.body["enumerated"] = weight_rows(enumerated);
  r.body["prediction"] = prediction_json(pr);

  Json diffs = Json::array();
  Json verdict;
  std::string status;
  if (!pr.applicable) {
    verdict = nullptr;
    status = "not_applicable";
    r.status = kExitNoTheorem;
  } else if (pr.kind == PredictionKind::bounds_only) {
    const bool ok = within_bounds(*pr.bounds, s.min_distance, enumerated.size());
    verdict = ok;
    status = ok ? "bounds_hold" : "mismatch";
    r.status = ok ? kExitOk : kExitMismatch;
  } else {
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> both;
    for (const auto& [w, f] : enumerated) both[w].first = f;
    for (const auto& [w, f] : pr.weights) both[w].second = f;
    for (const auto& [w, ef] : both)
      if (ef.first != ef.second) diffs.push_back({{"weight", w}, {"enumerated", ef.first}, {"predicted", ef.second}});
    const bool ok = diffs.empty();
    verdict = ok;
    status = ok ? "match" : "mismatch";
    r.status = ok ? kExitOk : kExitMismatch;
  }
  r.body["match"] = verdict;
  r.body["diffs"] = std::move(diffs);
  r.body["status"] = status;
  add_timing(r.body, c, t0);
  return r;
}

Report optimal_report(const RunConfig& c) {
  validate(c, true);
  const auto t0 = Clock::now();
  const TraceCode code = build_code(c);
  const CodeSummary s = gray_image_summary(code, c.threads);
  const auto th = optimality_threshold(*c.set, c.p, c.k);
  const bool conditions = optimality_conditions_hold(*c.set, c.p, c.m, c.k, c.nprime);
  const std::uint64_t n = s.gray_length, K = s.gray_dimension, d = s.min_distance;
  const bool optimal = is_griesmer_optimal(n, K, d, c.p);

  Report r;
  r.body = header("check optimal", c);
  r.body["code"] = code_json(s);
  const auto usable = smallest_usable_m(*c.set, c.p, c.k);
  r.body["threshold"] = {{"min_m", th.min_m},
                         {"floor_term", th.floor_term},
                         {"side_condition", th.side_condition},
                         {"smallest_usable_m", usable ? Json(*usable) : Json(nullptr)}};
  r.body["griesmer"] = {{"sum_d", griesmer_sum(c.p, K, d)}, {"sum_d_plus_1", griesmer_sum(c.p, K, d + 1)}};
  r.body["claimed"] = conditions;  // optimality is claimed exactly when the conditions hold
  r.body["computed"] = optimal;
  const bool ok = !conditions || optimal;
  r.body["ok"] = ok;
  r.status = ok ? kExitOk : kExitMismatch;
  add_timing(r.body, c, t0);
  return r;
}

Report dual_report(const RunConfig& c) {
  validate(c, true);
  const auto t0 = Clock::now();
  const TraceCode code = build_code(c);
  const DualSearchReport d = dual_low_weight_search(code, c.threads);

  Report r;
  r.body = header("check dual", c);
  r.body["claimed"] = d.claimed;
  r.body["claim_applies"] = c.m >= 2;
  r.body["computed"] = d.computed ? Json(*d.computed) : Json(nullptr);
  r.body["support1_found"] = d.support1_found;
  r.body["min_weight_support1"] = d.min_weight_support1 ? Json(*d.min_weight_support1) : Json(nullptr);
  r.body["min_weight_support2"] = d.min_weight_support2 ? Json(*d.min_weight_support2) : Json(nullptr);
  if (d.witness) {
    Json w{{"positions", d.witness->positions}, {"values", Json::array()}, {"weight", d.witness->weight}};
    for (const auto& v : d.witness->values) {
      Json coeffs = Json::array();
      for (auto x : v.coeffs) coeffs.push_back(x.value);
      w["values"].push_back(std::move(coeffs));
    }
    r.body["witness"] = std::move(w);
  } else {
    r.body["witness"] = nullptr;
  }
  r.body["witness_verified"] = d.witness_verified;
  r.body["exact"] = d.exact;
  r.body["label"] = d.label;
  const bool agrees = d.computed && *d.computed == d.claimed && !d.support1_found;
  const bool ok = c.m < 2 || agrees;
  r.body["ok"] = ok;
  r.status = ok ? kExitOk : kExitMismatch;
  add_timing(r.body, c, t0);
  return r;
}

Report minimal_report(const RunConfig& c) {
  validate(c, true);
  const auto t0 = Clock::now();
  const TraceCode code = build_code(c);
  const MinimalityReport m = minimal_codewords_check(code, c.threads);

  bool claimed = false;
  switch (*c.set) {
    case SetKind::d1: claimed = (c.m >= 4 && c.m % 2 == 0) || (c.m >= 3 && c.m % 2 == 1 && c.p % 4 == 3); break;
    case SetKind::d2: claimed = c.m >= 2; break;
    case SetKind::d3: claimed = c.m >= 2 && is_d3_two_weight_case(c); break;
  }
  if (m.ab_ratio_ok && !m.all_minimal)
    throw VerificationError("the weight ratio forces minimality but the support scan found covering pairs");

  Report r;
  r.body = header("check minimal", c);
  r.body["all_minimal"] = m.all_minimal;
  r.body["violation_count"] = m.violation_count;
  Json v = Json::array();
  for (const auto& pr : m.violations) v.push_back({{"covering", pr.covering}, {"covered", pr.covered}});
  r.body["violations"] = std::move(v);
  r.body["classes"] = m.classes;
  r.body["w_min"] = m.w_min;
  r.body["w_max"] = m.w_max;
  r.body["ab_ratio_ok"] = m.ab_ratio_ok;
  r.body["ab_verdict"] = m.ab_ratio_ok ? "all minimal" : "inconclusive";
  r.body["claimed"] = claimed;
  const bool ok = !claimed || m.all_minimal;
  r.body["ok"] = ok;
  r.status = ok ? kExitOk : kExitMismatch;
  add_timing(r.body, c, t0);
  return r;
}

Report gauss_report(const RunConfig& c) {
  validate(c, false);
  if (c.p == 2) throw UsageError("the quadratic Gauss sum needs an odd prime p");
  const auto t0 = Clock::now();
  const Field f(c.p, c.m);
  const Complex g = quadratic_gauss_sum(f);
  const Complex cf = quadratic_gauss_sum_closed_form(f);
  const auto [qs, ns] = qn_sums(f);
  const double err = std::abs(g - cf);
  const double qn_err = std::abs(qs + ns + 1.0);

  Report r;
  r.body = header("check gauss", c);
  r.body["computed"] = {{"re", g.real()}, {"im", g.imag()}};
  r.body["closed_form"] = {{"re", cf.real()}, {"im", cf.imag()}};
  r.body["abs_error"] = err;
  r.body["qn_sum_error"] = qn_err;
  bool ok = err < 1e-6 && qn_err < 1e-9;
  if (c.nprime != 0) {
    if ((f.q() - 1) % c.nprime != 0) throw UsageError("--nprime must divide p^m - 1");
    std::uint64_t checked = 0, mismatches = 0;
    for (std::uint32_t v = 1; v < f.q(); ++v) {
      const FieldElement b{v};
      if (eq1_count(f, b, c.nprime) != direct_trace_zero_count(f, b, c.nprime)) ++mismatches;
      ++checked;
    }
    r.body["zero_counts"] = {{"checked", checked}, {"mismatches", mismatches}};
    ok = ok && mismatches == 0;
  }
  r.body["ok"] = ok;
  r.status = ok ? kExitOk : kExitMismatch;
  add_timing(r.body, c, t0);
  return r;
}

Report action_report(const RunConfig& c, std::uint64_t trials, std::uint64_t seed) {
  validate(c, true);
  if (*c.set == SetKind::d3) throw UsageError("the regular action check applies to d1 and d2");
  const auto t0 = Clock::now();
  const TraceCode code = build_code(c);
  const auto a = regular_action_check(code, trials, seed);
  Report r;
  r.body = header("check action", c);
  r.body["trials"] = a.trials;
  r.body["seed"] = seed;
  r.body["witness"] = a.witness ? Json(*a.witness) : Json(nullptr);
  r.body["ok"] = a.ok;
  r.status = a.ok ? kExitOk : kExitMismatch;
  add_timing(r.body, c, t0);
  return r;
}

std::vector<MatrixCell> desk_matrix() {
  using enum SetKind;
  return {
      {d1, 3, 1, 2}, {d1, 3, 2, 2}, {d1, 3, 3, 2}, {d1, 3, 4, 2}, {d1, 5, 2, 2}, {d1, 7, 2, 2},
      {d1, 3, 2, 3}, {d1, 7, 1, 2}, {d1, 5, 1, 2},
      {d2, 2, 2, 2}, {d2, 3, 2, 2}, {d2, 2, 3, 2}, {d2, 2, 3, 3}, {d2, 2, 2, 3}, {d2, 5, 2, 2},
      {d2, 3, 1, 3}, {d2, 2, 4, 2},
      {d3, 3, 3, 2, 2}, {d3, 3, 4, 2, 4}, {d3, 3, 4, 2, 8}, {d3, 5, 2, 2, 3}, {d3, 3, 2, 2, 2},
      {d3, 3, 2, 2, 1}, {d3, 2, 4, 2, 3}, {d3, 5, 2, 2, 8},
  };
}

namespace {

// Runs one report builder and folds budget / verification failures into the
// cell entry instead of aborting the whole matrix.
template <typename Build>
Json cell_part(Build build, int& status) {
  try {
    Report r = build();
    status = r.status;
    Json b = std::move(r.body);
    b.erase("schema_version");
    b.erase("parameters");
    b["exit_status"] = r.status;
    return b;
  } catch (const BudgetExceeded& e) {
    status = kExitBudget;
    return {{"exit_status", kExitBudget}, {"skipped", e.what()}};
  } catch (const VerificationError& e) {
    status = kExitMismatch;
    return {{"exit_status", kExitMismatch}, {"error", e.what()}};
  }
}

}  // namespace

Report matrix_report(int threads, bool timing, double cell_timeout_s) {
  const auto t0 = Clock::now();
  Report r;
  r.body = {{"schema_version", kSchemaVersion}, {"command", "matrix"}, {"cell_timeout_s", cell_timeout_s}};
  Json cells = Json::array();
  std::uint64_t matched = 0, mismatched = 0, inapplicable = 0, budget = 0, slow = 0;
  for (const auto& cell : desk_matrix()) {
    RunConfig c;
    c.set = cell.set;
    c.p = cell.p;
    c.m = cell.m;
    c.k = cell.k;
    c.nprime = cell.nprime;
    c.threads = threads;
    c.timing = timing;
    const auto tc = Clock::now();
    Json entry{{"parameters", parameter_echo(c)}};
    int st = 0;
    entry["weights"] = cell_part([&] { return weights_report(c); }, st);
    switch (st) {
      case kExitOk: ++matched; break;
      case kExitNoTheorem: ++inapplicable; break;
      case kExitBudget: ++budget; break;
      default: ++mismatched; break;
    }
    int other = 0;
    entry["optimal"] = cell_part([&] { return optimal_report(c); }, other);
    if (other == kExitMismatch) ++mismatched;
    if (other == kExitBudget) ++budget;
    entry["dual"] = cell_part([&] { return dual_report(c); }, other);
    if (other == kExitMismatch) ++mismatched;
    if (other == kExitBudget) ++budget;
    entry["minimal"] = cell_part([&] { return minimal_report(c); }, other);
    if (other == kExitMismatch) ++mismatched;
    if (other == kExitBudget) ++budget;
    const double secs = ms_since(tc) / 1000.0;
    // Soft limit: cells are not interrupted, only flagged.
    if (secs > cell_timeout_s) {
      ++slow;
      entry["over_time"] = true;
    }
    if (timing) entry["timing_ms"] = secs * 1000.0;
    cells.push_back(std::move(entry));
  }
  r.body["cells"] = std::move(cells);
  r.body["summary"] = {{"cells", desk_matrix().size()},
                       {"weights_ok", matched},
                       {"mismatches", mismatched},
                       {"not_applicable", inapplicable},
                       {"budget_skipped", budget},  // parts, not cells
                       {"over_time", slow}};
  r.status = mismatched == 0 ? kExitOk : kExitMismatch;
  if (timing) r.body["timing_ms"] = ms_since(t0);
  return r;
}

}  // namespace chaincode::cli
