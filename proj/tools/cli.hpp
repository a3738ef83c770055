#pragma once

// Command-line driver: analyze, sweep, formulas, shift-fuzz, witness and
// summarize. Exit codes: 0 success (including conjecture reports), 1 theorem
// violation or internal inconsistency, 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "widecover/widecover.hpp"

namespace widecover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Above this size analyze reports nu2 only through the Latin search.
inline constexpr int kAnalyzePartialFillingLimit = 24;

inline const char* kOutDirEnv = "WIDECOVER_OUT_DIR";

/// Input the user can fix: bad files, capacity limits, malformed covers.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string render_diagram(const Partition& y) {
  if (y.empty()) return "(empty diagram)\n";
  std::string out;
  for (int a : y.rows()) {
    for (int j = 0; j < a; ++j) out += "[ ]";
    out += '\n';
  }
  return out;
}

inline std::string render_filling(const Partition& y, const Filling& f) {
  if (y.empty()) return "(empty filling)\n";
  int digits = static_cast<int>(std::to_string(std::max(1, y.width())).size());
  std::string out;
  for (int i = 1; i <= y.num_rows(); ++i) {
    for (int j = 1; j <= y.row(i); ++j) {
      int v = f.at(i, j);
      std::string cell = v ? std::to_string(v) : std::string(".");
      out += '[' + std::string(static_cast<std::size_t>(digits) - cell.size(), ' ') + cell + ']';
    }
    out += '\n';
  }
  return out;
}

inline std::string subset_text(const RowSubset& s) {
  std::string out = "{";
  for (std::size_t t = 0; t < s.indices.size(); ++t) out += (t ? "," : "") + std::to_string(s.indices[t]);
  return out + "}";
}

inline std::string grid_text(const GridSet& q) {
  std::string out;
  for (auto [c, s] : q.cells()) out += (out.empty() ? "" : " ") + ("c" + std::to_string(c) + "s" + std::to_string(s));
  return out.empty() ? "(none)" : out;
}

inline std::string cover_text(const PairCover& p) {
  auto pairs = [](const std::set<IndexPair>& set, char other) {
    std::string out;
    for (auto [r, x] : set) out += (out.empty() ? "" : " ") + ("r" + std::to_string(r) + other + std::to_string(x));
    return out.empty() ? std::string("(none)") : out;
  };
  return "  rc: " + pairs(p.rc, 'c') + "\n  rs: " + pairs(p.rs, 's') + "\n  cs: " + grid_text(p.cs) + "\n";
}

inline Json dominance_json(const DominanceWitness& w) {
  return Json{{"subset", to_json(w.subset)}, {"block", w.block}, {"profile", to_json(w.profile)}};
}

inline std::string report_text(const CampaignReport& r) {
  std::ostringstream os;
  os << r.name << ": " << r.agreements << "/" << r.population << " agree, " << r.disagreements.size()
     << " disagree";
  if (!r.skipped.empty()) os << ", " << r.skipped.size() << " skipped at capacity";
  os << " (" << r.elapsed_s << " s)\n";
  for (const auto& d : r.disagreements) os << "  disagreement: " << d << "\n";
  for (const auto& s : r.skipped) os << "  skipped: " << s << "\n";
  if (r.conjecture && !r.disagreements.empty()) {
    os << "************************************************************\n"
       << "* COUNTEREXAMPLE FOUND for " << r.name << ": see the list above\n"
       << "************************************************************\n";
  }
  return os.str();
}

/// Conjecture campaigns never fail the exit status.
inline int report_exit(const CampaignReport& r) {
  return (!r.conjecture && !r.disagreements.empty()) ? kExitViolation : kExitOk;
}

struct Options {
  bool json = false;
  std::string partition_text;
  int max_n = 10;
  int min_n = 0;
  std::string check = "wide-tau";
  std::string out_path;
  bool resume = false;
  int jobs = 1;
  std::uint64_t seed = 1;
  int max_pq = 6;
  int max_ell = 14;
  int cases = 1000;
  int fuzz_max_n = 12;
  std::string cover_path;
  std::string summary_path;
};

inline int analyze_cmd(const Options& o, std::ostream& out) {
  Partition y = parse_partition(o.partition_text);
  if (y.size() > kMaxTau2Size)
    throw UsageError("analyze supports |Y| <= " + std::to_string(kMaxTau2Size) + ", got " + std::to_string(y.size()));
  WidenessResult wide = is_wide(y);
  Tau2Result tau = tau2_exact(y);

  SweepRecord rec;
  rec.partition = y;
  rec.wide = wide.wide;
  rec.tau2 = tau.value;
  std::optional<Filling> filling;
  if (y.size() <= kAnalyzePartialFillingLimit) {
    PartialFillingResult best = max_partial_filling(y);
    rec.nu2 = best.size;
    rec.latin = best.size == y.size();
    filling = best.filling;
  } else if (y.width() <= kMaxFillingWidth) {
    filling = find_latin_filling(y);
    rec.latin = filling.has_value();
    if (*rec.latin) rec.nu2 = y.size();
  }
  rec.checks["wide-tau"] = wide.wide == (tau.value == y.size());
  rec.checks["tau2-le-n"] = tau.value <= y.size();
  if (rec.nu2) rec.checks["tau-nu"] = *rec.nu2 == tau.value;
  if (rec.latin) rec.checks["wpc"] = !wide.wide || *rec.latin;

  std::optional<NonwideCover> cover_witness;
  std::optional<DominanceWitness> dominance;
  if (!wide.wide) cover_witness = cover_witness_for_nonwide(y);
  if (tau.value < y.size()) dominance = nonwide_witness_from_cover(y, tau.p_opt);

  bool theorem_ok = rec.checks["wide-tau"] && rec.checks["tau2-le-n"];
  if (o.json) {
    Json j = record_to_json(rec);
    j["wideness_witness"] = wide.witness ? to_json(*wide.witness) : Json(nullptr);
    j["q_opt"] = to_json(tau.q_opt);
    j["p_opt"] = to_json(tau.p_opt);
    j["filling"] = filling ? to_json(*filling) : Json(nullptr);
    j["cover_witness"] = cover_witness ? witness_json(cover_witness->violation.subset, cover_witness->violation.k,
                                                      cover_witness->cover, y.size())
                                       : Json(nullptr);
    j["dominance_witness"] = dominance ? dominance_json(*dominance) : Json(nullptr);
    out << j.dump() << "\n";
    return theorem_ok ? kExitOk : kExitViolation;
  }

  out << "partition: " << (y.empty() ? "(empty)" : y.to_string()) << "  n = " << y.size() << "\n"
      << render_diagram(y);
  out << "wide: " << (wide.wide ? "yes" : "no");
  if (wide.witness) {
    Partition z = sub_diagram(y, *wide.witness);
    out << "  witness " << subset_text(*wide.witness) << ": rows " << z.to_string() << " do not dominate "
        << conjugate(z).to_string();
  }
  out << "\n";
  out << "tau2: " << tau.value << "  Q = " << grid_text(tau.q_opt) << "\n";
  if (rec.nu2) out << "nu2: " << *rec.nu2 << "\n";
  else out << "nu2: not computed (|Y| above " << kAnalyzePartialFillingLimit << ", no Latin filling found)\n";
  if (filling) out << (rec.latin.value_or(false) ? "Latin filling:\n" : "largest partial filling:\n")
                   << render_filling(y, *filling);
  if (cover_witness) {
    out << "cover below |Y| (size " << cover_witness->cover.size() << " < " << y.size() << ") from rows "
        << subset_text(cover_witness->violation.subset) << ", k = " << cover_witness->violation.k << ":\n"
        << cover_text(cover_witness->cover);
  }
  if (dominance) {
    out << "non-dominating rows from the optimal cover: " << subset_text(dominance->subset) << " (block "
        << dominance->block << ", profile " << to_string(dominance->profile) << ")\n";
  }
  if (!theorem_ok) out << "THEOREM VIOLATION: wide = " << wide.wide << " but tau2 = " << tau.value << "\n";
  return theorem_ok ? kExitOk : kExitViolation;
}

inline std::string default_out_path(const std::string& check) {
  const char* dir = std::getenv(kOutDirEnv);
  std::filesystem::path base = (dir && *dir) ? std::filesystem::path(dir) : std::filesystem::path(".");
  return (base / (check + ".jsonl")).string();
}

inline int sweep_cmd(const Options& o, std::ostream& out) {
  Campaign campaign = *campaign_from_name(o.check);
  std::string path = o.out_path.empty() ? default_out_path(o.check) : o.out_path;
  CampaignBounds bounds;
  bounds.min_n = o.min_n;
  bounds.max_n = o.max_n;
  bounds.jobs = o.jobs;
  bounds.seed = o.seed;
  if (o.resume) {
    bounds.skip = resume_keys(path);
  } else {
    std::ofstream truncate(path, std::ios::trunc);
    if (!truncate) throw UsageError("cannot open '" + path + "' for writing");
  }
  CampaignReport report = run_campaign(campaign, bounds, [&](const SweepRecord& r) { persist_append(r, path); });
  if (o.json) {
    Json j = report_to_json(report);
    j["out"] = path;
    j["resumed"] = bounds.skip.size();
    out << j.dump() << "\n";
  } else {
    if (o.resume) out << "resumed: " << bounds.skip.size() << " partitions already in " << path << "\n";
    out << report_text(report) << "records: " << path << "\n";
  }
  return report_exit(report);
}

inline int suite_cmd(Campaign campaign, const Options& o, std::ostream& out) {
  CampaignBounds bounds;
  bounds.max_pq = o.max_pq;
  bounds.max_ell = o.max_ell;
  bounds.cases = o.cases;
  bounds.seed = o.seed;
  bounds.fuzz_max_n = o.fuzz_max_n;
  CampaignReport report = run_campaign(campaign, bounds);
  if (o.json) out << report_to_json(report).dump() << "\n";
  else out << report_text(report);
  return report_exit(report);
}

inline PairCover read_cover_file(const std::string& path, const Partition& y) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open cover file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError("cover file '" + path + "' is not JSON: " + e.what());
  }
  if (j.is_object() && j.contains("cover")) j = j["cover"];
  return pair_cover_from_json(j, y);
}

inline int witness_cmd(const Options& o, std::ostream& out) {
  Partition y = parse_partition(o.partition_text);
  Json j;
  j["partition"] = to_json(y);
  j["n"] = y.size();
  std::ostringstream text;
  text << "partition: " << (y.empty() ? "(empty)" : y.to_string()) << "  n = " << y.size() << "\n";

  PairCover cover;
  bool have_cover = false;
  if (!o.cover_path.empty()) {
    cover = read_cover_file(o.cover_path, y);
    detail::require(validate_2cover(y, cover), "the supplied pairs are not a 2-cover of H(Y)");
    have_cover = true;
    j["cover_witness"] = nullptr;
  } else {
    WidenessResult wide = is_wide(y);
    j["wide"] = wide.wide;
    if (wide.wide) {
      j["cover_witness"] = nullptr;
      j["dominance_witness"] = nullptr;
      if (o.json) out << j.dump() << "\n";
      else out << text.str() << "wide: yes; no cover smaller than |Y| exists\n";
      return kExitOk;
    }
    NonwideCover cw = cover_witness_for_nonwide(y);
    detail::ensure(validate_2cover(y, cw.cover) && cw.cover.size() < y.size(), "cover witness failed validation");
    j["cover_witness"] = witness_json(cw.violation.subset, cw.violation.k, cw.cover, y.size());
    text << "wide: no; rows " << subset_text(cw.violation.subset) << " fail at k = " << cw.violation.k << "\n"
         << "cover of size " << cw.cover.size() << " < " << y.size() << ":\n"
         << cover_text(cw.cover);
    cover = cw.cover;
    have_cover = true;
  }
  if (have_cover) {
    DominanceWitness dw = nonwide_witness_from_cover(y, cover);
    Partition z = sub_diagram(y, dw.subset);
    detail::ensure(!dominates(z, conjugate(z)), "dominance witness dominates its conjugate");
    j["dominance_witness"] = dominance_json(dw);
    text << "rows recovered from the cover: " << subset_text(dw.subset) << " form " << z.to_string()
         << ", which does not dominate " << conjugate(z).to_string() << "\n";
  }
  if (o.json) out << j.dump() << "\n";
  else out << text.str();
  return kExitOk;
}

inline int summarize_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  if (!std::filesystem::exists(o.summary_path)) throw UsageError("no such file: '" + o.summary_path + "'");
  Summary s = summarize(o.summary_path);
  if (s.corrupt_lines) err << "warning: skipped " << s.corrupt_lines << " corrupt line(s) in " << o.summary_path << "\n";
  bool violated = false;
  for (const auto& c : s.per_check) violated |= !c.conjecture && !c.disagreements.empty();
  if (o.json) {
    Json per = Json::array();
    for (const auto& c : s.per_check) per.push_back(report_to_json(c));
    out << Json{{"overall", report_to_json(s.overall)}, {"per_check", per}, {"corrupt_lines", s.corrupt_lines}}.dump()
        << "\n";
  } else {
    out << report_text(s.overall);
    for (const auto& c : s.per_check) out << report_text(c);
    if (s.corrupt_lines) out << "corrupt lines skipped: " << s.corrupt_lines << "\n";
  }
  return violated ? kExitViolation : kExitOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Young diagram wideness, 2-covers and Latin fillings"};
  app.require_subcommand(1);
  Options o;

  std::vector<std::string> check_names;
  for (Campaign c : kAllCampaigns)
    if (is_partition_campaign(c)) check_names.push_back(campaign_name(c));

  auto* analyze = app.add_subcommand("analyze", "Report wideness, tau2, nu2 and witnesses for one diagram");
  analyze->add_option("partition", o.partition_text, "Row lengths, comma or space separated")->required();
  analyze->add_flag("--json", o.json, "Emit one JSON object");

  auto* sweep = app.add_subcommand("sweep", "Exhaustive campaign over all diagrams up to a size");
  sweep->add_option("--max-n", o.max_n, "Largest |Y|")->check(CLI::Range(0, kMaxTau2Size));
  sweep->add_option("--min-n", o.min_n, "Smallest |Y|")->check(CLI::NonNegativeNumber);
  sweep->add_option("--check", o.check, "Campaign")->check(CLI::IsMember(check_names));
  sweep->add_option("--out", o.out_path, std::string("JSONL output (default $") + kOutDirEnv + "/<check>.jsonl)");
  sweep->add_flag("--resume", o.resume, "Skip diagrams already recorded in the output");
  sweep->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  sweep->add_option("--seed", o.seed, "Seed (recorded; partition sweeps are deterministic)");
  sweep->add_flag("--json", o.json, "Emit the report as JSON");

  auto* formulas = app.add_subcommand("formulas", "Rectangle formula and profile calculus suites");
  formulas->add_option("--max-pq", o.max_pq, "Largest q (and box side)")->check(CLI::Range(0, 12));
  formulas->add_option("--max-ell", o.max_ell, "Largest l")->check(CLI::Range(0, 64));
  formulas->add_flag("--json", o.json, "Emit the report as JSON");

  auto* fuzz = app.add_subcommand("shift-fuzz", "Random covers through the shifting normalization");
  fuzz->add_option("--cases", o.cases, "Number of random covers")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--seed", o.seed, "Seed");
  fuzz->add_option("--max-n", o.fuzz_max_n, "Largest |Y|")->check(CLI::Range(1, 30));
  fuzz->add_flag("--json", o.json, "Emit the report as JSON");

  auto* witness = app.add_subcommand("witness", "Witnesses in both directions for one diagram");
  witness->add_option("partition", o.partition_text, "Row lengths")->required();
  witness->add_option("--cover-json", o.cover_path, "Start from this cover ({rc, rs, cs}) instead");
  witness->add_flag("--json", o.json, "Emit one JSON object");

  auto* summary = app.add_subcommand("summarize", "Aggregate a JSONL results file");
  summary->add_option("path", o.summary_path, "JSONL file")->required();
  summary->add_flag("--json", o.json, "Emit the summary as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return analyze_cmd(o, out);
    if (*sweep) return sweep_cmd(o, out);
    if (*formulas) return suite_cmd(Campaign::formulas, o, out);
    if (*fuzz) return suite_cmd(Campaign::shift_fuzz, o, out);
    if (*witness) return witness_cmd(o, out);
    if (*summary) return summarize_cmd(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace widecover::cli
