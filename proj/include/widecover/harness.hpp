#pragma once

// Verification campaigns over families of diagrams (and over the formula
// and shifting suites), JSONL persistence with resume, and summaries.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "widecover/bipartite.hpp"
#include "widecover/covers.hpp"
#include "widecover/hypergraph.hpp"
#include "widecover/latin.hpp"
#include "widecover/partition.hpp"
#include "widecover/profile.hpp"
#include "widecover/serialize.hpp"

namespace widecover {

enum class Campaign { wide_tau, wpc, tau_nu, tau1, formulas, shift_fuzz };

inline constexpr Campaign kAllCampaigns[] = {Campaign::wide_tau, Campaign::wpc,      Campaign::tau_nu,
                                             Campaign::tau1,     Campaign::formulas, Campaign::shift_fuzz};

inline std::string campaign_name(Campaign c) {
  switch (c) {
    case Campaign::wide_tau: return "wide-tau";
    case Campaign::wpc: return "wpc";
    case Campaign::tau_nu: return "tau-nu";
    case Campaign::tau1: return "tau1";
    case Campaign::formulas: return "formulas";
    case Campaign::shift_fuzz: return "shift-fuzz";
  }
  return "?";
}

inline std::optional<Campaign> campaign_from_name(std::string_view name) {
  for (Campaign c : kAllCampaigns)
    if (campaign_name(c) == name) return c;
  return std::nullopt;
}

/// Conjecture campaigns report counterexamples as discoveries; theorem
/// campaigns treat them as bugs.
inline bool is_conjecture(Campaign c) { return c == Campaign::wpc || c == Campaign::tau_nu; }

/// Campaigns whose population is a set of diagrams (and which emit records).
inline bool is_partition_campaign(Campaign c) {
  return c == Campaign::wide_tau || c == Campaign::wpc || c == Campaign::tau_nu || c == Campaign::tau1;
}

inline constexpr int kRecordSchema = 1;

struct SweepRecord {
  Partition partition;
  bool wide = false;
  int tau2 = 0;
  std::optional<int> nu2;
  std::optional<bool> latin;
  std::map<std::string, bool> checks;
  double elapsed_ms = 0;  // not serialized

  int n() const { return partition.size(); }
  bool agrees() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
  }
};

inline Json record_to_json(const SweepRecord& r) {
  Json checks = Json::object();
  for (const auto& [name, ok] : r.checks) checks[name] = ok;
  Json j;
  j["partition"] = to_json(r.partition);
  j["n"] = r.n();
  j["wide"] = r.wide;
  j["tau2"] = r.tau2;
  j["nu2"] = r.nu2 ? Json(*r.nu2) : Json(nullptr);
  j["latin"] = r.latin ? Json(*r.latin) : Json(nullptr);
  j["checks"] = checks;
  j["schema"] = kRecordSchema;
  return j;
}

inline SweepRecord record_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("record is not a JSON object");
  if (j.value("schema", 0) != kRecordSchema) throw std::invalid_argument("unsupported record schema");
  SweepRecord r;
  r.partition = Partition(j.at("partition").get<std::vector<int>>());
  if (j.at("n").get<int>() != r.partition.size()) throw std::invalid_argument("record n does not match partition");
  r.wide = j.at("wide").get<bool>();
  r.tau2 = j.at("tau2").get<int>();
  if (!j.at("nu2").is_null()) r.nu2 = j.at("nu2").get<int>();
  if (!j.at("latin").is_null()) r.latin = j.at("latin").get<bool>();
  for (const auto& [name, ok] : j.at("checks").items()) r.checks[name] = ok.get<bool>();
  return r;
}

struct CampaignReport {
  std::string name;
  bool conjecture = false;
  std::size_t population = 0;
  std::size_t agreements = 0;
  std::vector<std::string> disagreements;
  std::vector<std::string> skipped;  // capacity guard trips, outside the population
  double elapsed_s = 0;

  bool clean() const { return disagreements.empty(); }
};

inline Json report_to_json(const CampaignReport& r) {
  return Json{{"campaign", r.name},     {"conjecture", r.conjecture},       {"population", r.population},
              {"agreements", r.agreements}, {"disagreements", r.disagreements}, {"skipped", r.skipped},
              {"elapsed_s", r.elapsed_s}};
}

struct CampaignBounds {
  int min_n = 0;
  int max_n = 10;
  int max_pq = 6;
  int max_ell = 14;
  int cases = 1000;
  int fuzz_max_n = 12;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::set<std::string> skip;  // canonical partition strings already done
};

using RecordSink = std::function<void(const SweepRecord&)>;

namespace detail {

inline constexpr std::size_t kFirstOrderEdgeLimit = 256;

inline double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Observation: tau(H) = nu(H) = tau(H[R x C]).
inline bool first_order_duality(const Partition& y) {
  TripartiteHypergraph h = build_H(y);
  int nu1 = brute_nu(h, 1, kFirstOrderEdgeLimit);
  int tau1 = brute_tau(h, 1, kFirstOrderEdgeLimit);
  BipartiteGraph rows_cols(y.num_rows(), y.width());
  for (int i = 1; i <= y.num_rows(); ++i)
    for (int j = 1; j <= y.row(i); ++j) rows_cols.add_edge(i - 1, j - 1);
  int tau_g = konig_cover(rows_cols).size();
  return nu1 == tau1 && tau1 == tau_g;
}

}  // namespace detail

/// One diagram under one campaign's predicate.
inline SweepRecord evaluate_partition(Campaign campaign, const Partition& y) {
  auto start = std::chrono::steady_clock::now();
  SweepRecord r;
  r.partition = y;
  r.tau2 = tau2_exact(y).value;
  r.wide = is_wide(y).wide;
  r.checks["tau2-le-n"] = r.tau2 <= y.size();
  switch (campaign) {
    case Campaign::wide_tau:
      r.checks["wide-tau"] = r.wide == (r.tau2 == y.size());
      break;
    case Campaign::wpc:
      r.latin = find_latin_filling(y).has_value();
      if (*r.latin) r.nu2 = y.size();
      r.checks["wpc"] = !r.wide || *r.latin;
      break;
    case Campaign::tau_nu:
      r.nu2 = max_partial_filling(y).size;
      r.latin = *r.nu2 == y.size();
      r.checks["tau-nu"] = r.tau2 == *r.nu2;
      break;
    case Campaign::tau1:
      r.checks["tau1"] = detail::first_order_duality(y);
      break;
    default:
      throw ContractViolation(campaign_name(campaign) + " is not a per-diagram campaign");
  }
  r.elapsed_ms = detail::elapsed_ms_since(start);
  return r;
}

/// Diagrams a partition campaign visits: n in [min_n, max_n] in enumeration
/// order; the WPC probe keeps only wide diagrams.
inline std::vector<Partition> campaign_population(Campaign campaign, const CampaignBounds& bounds) {
  std::vector<Partition> out;
  for (const Partition& y : partitions_up_to(bounds.max_n, bounds.min_n)) {
    if (bounds.skip.count(y.to_string())) continue;
    if (campaign == Campaign::wpc && !is_wide(y).wide) continue;
    out.push_back(y);
  }
  return out;
}

namespace detail {

struct Outcome {
  std::optional<SweepRecord> record;
  std::string skipped;
  std::string failure;
};

inline Outcome evaluate_guarded(Campaign campaign, const Partition& y) {
  Outcome o;
  try {
    o.record = evaluate_partition(campaign, y);
  } catch (const CapacityError& e) {
    o.skipped = y.to_string() + ": " + e.what();
  } catch (const std::logic_error& e) {
    o.failure = y.to_string() + ": " + e.what();
  }
  return o;
}

inline CampaignReport run_partition_campaign(Campaign campaign, const CampaignBounds& bounds,
                                             const RecordSink& sink) {
  CampaignReport report;
  std::vector<Partition> population = campaign_population(campaign, bounds);
  std::vector<Outcome> outcomes(population.size());

  int jobs = std::max(1, bounds.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < population.size(); ++i) outcomes[i] = evaluate_guarded(campaign, population[i]);
  } else {
    // Workers fill disjoint slots; the single writer below emits in order.
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < population.size(); i = next++)
          outcomes[i] = evaluate_guarded(campaign, population[i]);
      });
    }
    for (auto& t : workers) t.join();
  }

  for (const Outcome& o : outcomes) {
    if (!o.skipped.empty()) {
      report.skipped.push_back(o.skipped);
      continue;
    }
    ++report.population;
    if (!o.failure.empty()) {
      report.disagreements.push_back(o.failure);
      continue;
    }
    if (sink) sink(*o.record);
    if (o.record->agrees()) ++report.agreements;
    else report.disagreements.push_back(o.record->partition.to_string());
  }
  return report;
}

inline std::string grid_text(const GridSet& q) {
  std::string s = "{";
  for (auto [c, sym] : q.cells()) s += "c" + std::to_string(c) + "s" + std::to_string(sym) + " ";
  if (s.size() > 1) s.pop_back();
  return s + "}";
}

inline CampaignReport run_formulas(const CampaignBounds& bounds) {
  CampaignReport report;
  auto tally = [&](bool ok, const std::string& what) {
    ++report.population;
    if (ok) ++report.agreements;
    else report.disagreements.push_back(what);
  };

  // Rectangles against matching.
  for (int q = 0; q <= bounds.max_pq; ++q)
    for (int p = 0; p <= q; ++p)
      for (int ell = 0; ell <= bounds.max_ell; ++ell) {
        int by_matching = nu_ell_Q(ell, GridSet::rectangle(q, p, q));
        int by_formula = nu_rect_formula(ell, p, q);
        tally(by_matching == by_formula, "rectangle p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                             " l=" + std::to_string(ell) + ": matching " +
                                             std::to_string(by_matching) + " formula " + std::to_string(by_formula));
      }

  // Every non-empty closed-down Q in the box.
  const int box = bounds.max_pq;
  for (int size = 1; size <= box * box; ++size) {
    for_each_partition_in_box(size, box, box, [&](std::span<const int> heights) {
      GridSet q = GridSet::from_column_heights(box, heights);
      CheckReport checks = profile_checks(q, bounds.max_ell);
      std::string where = "Q=" + grid_text(q);
      tally(checks.ok(), where + (checks.ok() ? "" : ": " + checks.violations.front()));
      Profile prof = extract_profile(q);
      GridSet extremal = construct_extremal_Q(prof);
      bool same = extract_profile(extremal) == prof && extremal.count() == size_lower_bound(prof) &&
                  extremal.count() <= q.count();
      tally(same, where + ": extremal reconstruction of " + to_string(prof) + " fails");
    });
  }

  // Every run layout whose extremal set fits the box.
  for (const Profile& prof : enumerate_profiles(bounds.max_pq)) {
    GridSet q = construct_extremal_Q(prof);
    bool ok = is_closed_down(q) && extract_profile(q) == prof && q.count() == size_lower_bound(prof);
    tally(ok, "profile " + to_string(prof) + ": construction does not reproduce it");
  }
  return report;
}

}  // namespace detail

/// Small deterministic generator; draws are plain modulo reductions of
/// mt19937_64 so sequences do not depend on the standard library.
class FuzzRng {
 public:
  explicit FuzzRng(std::uint64_t seed) : engine_(seed) {}
  int below(int bound) { return bound <= 0 ? 0 : static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }
  bool percent(int pct) { return below(100) < pct; }

 private:
  std::mt19937_64 engine_;
};

/// A random diagram with 1 <= n <= max_n and a random 2-cover of its H.
inline std::pair<Partition, PairCover> random_cover_case(FuzzRng& rng, int max_n) {
  int n = 1 + rng.below(max_n);
  std::vector<Partition> shapes = enumerate_partitions(n);
  Partition y = shapes[static_cast<std::size_t>(rng.below(static_cast<int>(shapes.size())))];
  const int width = y.width();
  PairCover p(width);
  int pct_q = rng.below(50);
  int pct_rc = rng.below(40);
  int pct_rs = rng.below(40);
  for (int c = 1; c <= width; ++c)
    for (int s = 1; s <= width; ++s)
      if (rng.percent(pct_q)) p.cs.insert(c, s);
  for (int i = 1; i <= y.num_rows(); ++i)
    for (int x = 1; x <= width; ++x) {
      if (rng.percent(pct_rc)) p.rc.insert({i, x});
      if (rng.percent(pct_rs)) p.rs.insert({i, x});
    }
  for (int i = 1; i <= y.num_rows(); ++i)
    for (int j = 1; j <= y.row(i); ++j)
      for (int k = 1; k <= y.row(i); ++k) {
        if (p.rc.count({i, j}) || p.rs.count({i, k}) || p.cs.contains(j, k)) continue;
        switch (rng.below(3)) {
          case 0: p.rc.insert({i, j}); break;
          case 1: p.rs.insert({i, k}); break;
          default: p.cs.insert(j, k); break;
        }
      }
  return {y, p};
}

/// Checks size and cover preservation of every shift, strict potential
/// decrease on every change of Q, the change count against the starting
/// potential, and a closed-down result. Empty string means the case passed.
inline std::string check_shift_case(const Partition& y, const PairCover& p) {
  std::string failure;
  long changes = 0;
  auto note = [&](const std::string& what) {
    if (failure.empty()) failure = what;
  };
  auto observer = [&](const ShiftStep& step) {
    std::string at = std::string(step.axis == ShiftAxis::column ? "column" : "symbol") + " shift (" +
                     std::to_string(step.i) + "," + std::to_string(step.j) + ")";
    if (step.after.size() != step.before.size()) note(at + " changed the size");
    if (!validate_2cover(y, step.after)) note(at + " lost the cover property");
    if (!(step.after.cs == step.before.cs)) {
      ++changes;
      if (potential_f(step.after.cs) >= potential_f(step.before.cs)) note(at + " did not lower the potential");
    }
  };
  PairCover result;
  try {
    result = normalize_closed_down(p, y, observer);
  } catch (const std::logic_error& e) {
    return e.what();
  }
  if (changes > potential_f(p.cs)) note("more Q-changing shifts than the starting potential");
  if (!is_closed_down(result.cs)) note("result is not closed down");
  if (result.size() != p.size()) note("result size differs");
  if (!validate_2cover(y, result)) note("result is not a cover");
  return failure;
}

namespace detail {

inline CampaignReport run_shift_fuzz(const CampaignBounds& bounds) {
  CampaignReport report;
  FuzzRng rng(bounds.seed);
  for (int c = 0; c < bounds.cases; ++c) {
    auto [y, p] = random_cover_case(rng, bounds.fuzz_max_n);
    std::string failure = check_shift_case(y, p);
    ++report.population;
    if (failure.empty()) ++report.agreements;
    else report.disagreements.push_back("case " + std::to_string(c) + " Y=" + y.to_string() + ": " + failure);
  }
  return report;
}

}  // namespace detail

/// Runs one campaign. Partition campaigns hand each record to `sink` in
/// population order regardless of `jobs`.
inline CampaignReport run_campaign(Campaign campaign, const CampaignBounds& bounds, const RecordSink& sink = nullptr) {
  auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  if (is_partition_campaign(campaign)) report = detail::run_partition_campaign(campaign, bounds, sink);
  else if (campaign == Campaign::formulas) report = detail::run_formulas(bounds);
  else report = detail::run_shift_fuzz(bounds);
  report.name = campaign_name(campaign);
  report.conjecture = is_conjecture(campaign);
  report.elapsed_s = detail::elapsed_ms_since(start) / 1000.0;
  return report;
}

/// Appends one JSONL line and flushes.
inline void persist_append(const SweepRecord& record, const std::string& path) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for appending");
  out << record_to_json(record).dump() << '\n';
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

struct LoadedRecords {
  std::vector<SweepRecord> records;
  std::size_t corrupt_lines = 0;
  std::vector<std::string> warnings;
};

/// Reads a JSONL file; unparsable lines are skipped and counted.
inline LoadedRecords load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  LoadedRecords out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.records.push_back(record_from_json(Json::parse(line)));
    } catch (const std::exception& e) {
      ++out.corrupt_lines;
      out.warnings.push_back(path + ":" + std::to_string(line_no) + ": skipped (" + e.what() + ")");
    }
  }
  return out;
}

/// Canonical keys already present in a results file; a missing file means
/// nothing is done yet.
inline std::set<std::string> resume_keys(const std::string& path) {
  std::set<std::string> keys;
  std::ifstream probe(path);
  if (!probe) return keys;
  for (const SweepRecord& r : load_records(path).records) keys.insert(r.partition.to_string());
  return keys;
}

struct Summary {
  CampaignReport overall;
  std::vector<CampaignReport> per_check;
  std::size_t corrupt_lines = 0;
};

/// Overall agreement (a record agrees when all its checks pass) plus a
/// breakdown per check name, listing every disagreeing partition.
inline Summary summarize(const std::string& path) {
  LoadedRecords loaded = load_records(path);
  Summary s;
  s.overall.name = "all";
  s.corrupt_lines = loaded.corrupt_lines;
  std::map<std::string, CampaignReport> by_check;
  for (const SweepRecord& r : loaded.records) {
    ++s.overall.population;
    if (r.agrees()) ++s.overall.agreements;
    else s.overall.disagreements.push_back(r.partition.to_string());
    for (const auto& [name, ok] : r.checks) {
      CampaignReport& c = by_check[name];
      c.name = name;
      if (auto camp = campaign_from_name(name)) c.conjecture = is_conjecture(*camp);
      ++c.population;
      if (ok) ++c.agreements;
      else c.disagreements.push_back(r.partition.to_string());
    }
  }
  for (auto& [name, report] : by_check) s.per_check.push_back(std::move(report));
  return s;
}

}  // namespace widecover
