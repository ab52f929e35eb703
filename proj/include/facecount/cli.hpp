#pragma once

/// Command-line front end.
///
///   facecount fvector <spec> [--oracle] [--force-oracle]
///   facecount verify --suite <name|all> [--d-max N] [--s-set 2,3]
///   facecount table --which {eta,tau,dichotomy,minimisers} --d A..B
///   facecount dump <spec> [--force-oracle]
///
/// Every subcommand accepts --format {json,csv,md}, --out PATH and --workers N.
/// Exit codes: 0 success, 1 a verification suite failed, 2 bad arguments.

#include "facecount/families.hpp"
#include "facecount/serialize.hpp"
#include "facecount/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace facecount {

/// Largest facet scan (number of d-subsets) run without --force-oracle.
inline constexpr long long kOracleGuard = 10'000'000;

struct CliConfig {
  std::string subcommand;
  std::string family;
  std::string format = "md";
  std::string out_path;
  unsigned workers = 0;
  bool oracle = false;
  bool force_oracle = false;
  std::string suite;
  std::optional<int> d_max;
  std::vector<int> s_set;
  std::string which;
  std::string d_range;
};

class CliError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace cli_detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::pair<int, int> parse_d_range(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw CliError("--d " + text + ": expected A..B with integers");
    }
    if (used != s.size()) throw CliError("--d " + text + ": expected A..B with integers");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int d = parse_int(text);
    return {d, d};
  }
  const int lo = parse_int(text.substr(0, dots));
  const int hi = parse_int(text.substr(dots + 2));
  if (lo > hi) throw CliError("--d " + text + ": empty range");
  return {lo, hi};
}

inline void guard_oracle(const FamilySpec& spec, const VPolytope& p, bool force) {
  const auto cost = p.scan_cost();
  if (!force && cost > kOracleGuard) {
    throw CliError(to_string(spec) + ": oracle scan of C(" + std::to_string(p.n_vertices()) + "," +
                   std::to_string(p.dim()) + ") = " + cost.str() + " subsets exceeds " +
                   std::to_string(kOracleGuard) + "; pass --force-oracle to run it");
  }
}

/// Rows of string cells with a header; rendered as md, csv or json.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void render(std::ostream& out, const std::string& format) const {
    if (format == "csv") {
      for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << csv_field(header[i]);
      out << "\n";
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
        out << "\n";
      }
    } else if (format == "json") {
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = r[i];
        arr.push_back(std::move(obj));
      }
      out << arr.dump(2) << "\n";
    } else {
      out << "|";
      for (const auto& h : header) out << " " << h << " |";
      out << "\n|";
      for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
      out << "\n";
      for (const auto& r : rows) {
        out << "|";
        for (const auto& c : r) out << " " << c << " |";
        out << "\n";
      }
    }
  }
};

inline int cmd_fvector(const CliConfig& cfg, std::ostream& out) {
  const auto spec = parse_family(cfg.family);
  const auto formula = expected_fvector(spec);
  const auto stated = stated_counts(spec);
  std::optional<FaceCountVector> oracle;
  if (cfg.oracle) {
    const auto p = build(spec);
    guard_oracle(spec, p, cfg.force_oracle);
    oracle = face_lattice(p).f_vector();
  }
  std::string verdict;
  if (!oracle) {
    verdict = "NOT-RUN";
  } else if (formula) {
    verdict = *formula == *oracle ? "MATCH" : "MISMATCH";
  } else {
    bool ok = true;
    if (stated.vertices) ok = ok && oracle->counts().front() == *stated.vertices;
    if (stated.facets) ok = ok && oracle->counts().back() == *stated.facets;
    verdict = ok ? "MATCH-STATED-COUNTS" : "MISMATCH";
  }

  if (cfg.format == "json") {
    Json j{{"spec", to_string(spec)}, {"dim", spec.d}};
    j["formula"] = formula ? to_json(*formula) : Json(nullptr);
    Json st = Json::object();
    st["vertices"] = stated.vertices ? Json(stated.vertices->str()) : Json(nullptr);
    st["facets"] = stated.facets ? Json(stated.facets->str()) : Json(nullptr);
    j["stated"] = st;
    j["oracle"] = oracle ? to_json(*oracle) : Json(nullptr);
    j["verdict"] = verdict;
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "spec,source,k,count\n";
    auto rows = [&](const char* source, const FaceCountVector& f) {
      for (int k = 0; k < f.dim(); ++k) out << to_string(spec) << "," << source << "," << k << "," << f.f(k).str() << "\n";
    };
    if (formula) rows("formula", *formula);
    if (oracle) rows("oracle", *oracle);
    out << to_string(spec) << ",verdict,," << verdict << "\n";
  } else {
    out << "spec: " << to_string(spec) << "\n";
    out << "formula: " << (formula ? formula->str() : "none") << "\n";
    if (!formula) {
      out << "stated: f_0=" << (stated.vertices ? stated.vertices->str() : "?")
          << " f_{d-1}=" << (stated.facets ? stated.facets->str() : "?") << "\n";
    }
    if (oracle) out << "oracle: " << oracle->str() << "\n";
    out << "verdict: " << verdict << "\n";
  }
  return verdict == "MISMATCH" ? 1 : 0;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  std::vector<const Suite*> chosen;
  if (cfg.suite == "all") {
    if (cfg.d_max) throw CliError("--d-max applies to a single suite, not to --suite all");
    if (!cfg.s_set.empty()) throw CliError("--s-set applies to --suite tau_minimality only");
    for (const auto& s : suites()) chosen.push_back(&s);
  } else {
    const auto* s = find_suite(cfg.suite);
    if (!s) {
      std::string names;
      for (const auto& x : suites()) names += (names.empty() ? "" : ", ") + x.name;
      throw CliError("--suite " + cfg.suite + ": unknown suite (known: " + names + ", all)");
    }
    if (cfg.d_max && s->default_d_max == 0) throw CliError("--suite " + cfg.suite + " takes no --d-max");
    if (!cfg.s_set.empty() && s->name != "tau_minimality") {
      throw CliError("--s-set applies to --suite tau_minimality only");
    }
    chosen.push_back(s);
  }

  std::vector<CheckReport> reports;
  for (const auto* s : chosen) {
    SuiteOptions opts{cfg.d_max, cfg.workers};
    if (!cfg.s_set.empty()) {
      reports.push_back(check_tau_minimality(cfg.d_max.value_or(60), cfg.s_set, cfg.workers));
    } else {
      reports.push_back(s->run(opts));
    }
  }
  bool all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed();

  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << Json{{"passed", all_passed}, {"reports", arr}}.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "claim_id,passed,points_checked,failures,equality_witnesses,findings\n";
    for (const auto& r : reports) {
      std::string findings;
      for (const auto& f : r.findings) findings += (findings.empty() ? "" : " | ") + f;
      out << r.claim_id << "," << (r.passed() ? "true" : "false") << "," << r.points_checked << ","
          << r.failures.size() << "," << r.equality_witnesses.size() << "," << csv_field(findings) << "\n";
    }
  } else {
    for (const auto& r : reports) out << to_markdown(r) << "\n";
    out << "overall: " << (all_passed ? "PASS" : "FAIL") << "\n";
  }
  return all_passed ? 0 : 1;
}

inline int cmd_table(const CliConfig& cfg, std::ostream& out) {
  const auto [lo, hi] = parse_d_range(cfg.d_range);
  Table t;
  auto need = [&](bool ok, const std::string& rule) {
    if (!ok) throw CliError("table --which " + cfg.which + " --d " + cfg.d_range + ": requires " + rule);
  };
  if (cfg.which == "eta") {
    need(lo >= 3 && hi <= 200, "3 <= d <= 200");
    t.header = {"d", "k", "eta_k(2d+2,d)"};
    for (std::int64_t d = lo; d <= hi; ++d) {
      for (std::int64_t k = 1; k <= d - 1; ++k) {
        t.rows.push_back({std::to_string(d), std::to_string(k), eta(k, 2 * d + 2, d).str()});
      }
    }
  } else if (cfg.which == "tau") {
    need(lo >= 5 && hi <= 200, "5 <= d <= 200");
    t.header = {"d", "k", "tau_k(2d+2,d)"};
    for (std::int64_t d = lo; d <= hi; ++d) {
      for (std::int64_t k = 1; k <= d - 1; ++k) t.rows.push_back({std::to_string(d), std::to_string(k), tau(k, d, 3).str()});
    }
  } else if (cfg.which == "dichotomy") {
    need(lo >= 5 && hi <= 200, "5 <= d <= 200");
    t.header = {"d", "k", "eta", "tau", "tau-eta", "smaller"};
    for (std::int64_t d = lo; d <= hi; ++d) {
      for (std::int64_t k = 1; k <= d - 1; ++k) {
        const auto e = eta(k, 2 * d + 2, d);
        const auto ta = tau(k, d, 3);
        const std::string smaller = e < ta ? "eta" : (e > ta ? "tau" : "equal");
        t.rows.push_back({std::to_string(d), std::to_string(k), e.str(), ta.str(), Integer(ta - e).str(), smaller});
      }
    }
  } else if (cfg.which == "minimisers") {
    need(lo >= 4 && hi <= 60, "4 <= d <= 60");
    t.header = {"d", "s", "k", "min f_k", "argmin (b,m)", "tau", "split (b,m)", "split f_0", "split in class"};
    for (std::int64_t d = lo; d <= hi; ++d) {
      for (std::int64_t s = 2; s <= d - 2; ++s) {
        const auto a = (d + s) / 2 + 1;
        const auto split_f0 = d + 1 + 2 * (a - 2);
        for (std::int64_t k = 1; k <= d - 1; ++k) {
          std::optional<Integer> best;
          std::string arg;
          for (std::int64_t b = 2; b <= d; ++b) {
            for (std::int64_t m = 1; m <= b / 2; ++m) {
              if (d + 1 + m * (b - m) < 2 * d + s - 1) continue;
              auto v = pyr_prod_count(k, b, m, d);
              if (!best || v < *best) {
                best = v;
                arg = "(" + std::to_string(b) + "," + std::to_string(m) + ")";
              }
            }
          }
          t.rows.push_back({std::to_string(d), std::to_string(s), std::to_string(k), best ? best->str() : "none",
                            best ? arg : "none", tau(k, d, s).str(),
                            "(" + std::to_string(a) + ",2)", std::to_string(split_f0),
                            split_f0 >= 2 * d + s - 1 ? "yes" : "no"});
        }
      }
    }
  } else {
    throw CliError("--which " + cfg.which + ": expected eta, tau, dichotomy or minimisers");
  }
  t.render(out, cfg.format);
  return 0;
}

inline int cmd_dump(const CliConfig& cfg, std::ostream& out) {
  if (cfg.format != "json") throw CliError("dump writes JSON only; got --format " + cfg.format);
  const auto spec = parse_family(cfg.family);
  const auto p = build(spec);
  guard_oracle(spec, p, cfg.force_oracle);
  const auto lat = face_lattice(p);
  Json j{{"spec", to_string(spec)},
         {"polytope", to_json(p)},
         {"incidence", to_json(p.incidence())},
         {"fvector", to_json(lat.f_vector())}};
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace cli_detail

/// Runs one command line; writes results to `out` (or --out) and diagnostics to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CliConfig cfg;
  CLI::App app{"Exact face counts of polytope families and checks of their lower bounds", "facecount"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
    sub->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
    sub->add_option("--workers", cfg.workers, "Worker threads (default: FACECOUNT_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
  };

  auto* fvector = app.add_subcommand("fvector", "Formula and oracle f-vectors of a family member");
  fvector->add_option("spec", cfg.family, "Family spec, e.g. J:s=3,d=5")->required();
  fvector->add_flag("--oracle", cfg.oracle, "Also compute the f-vector from the face lattice");
  fvector->add_flag("--force-oracle", cfg.force_oracle, "Run the oracle beyond the size guard");
  common(fvector);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", cfg.suite, "Suite name or all")->required();
  verify->add_option("--d-max", cfg.d_max, "Grid bound for the suite");
  verify->add_option("--s-set", cfg.s_set, "Values of s for tau_minimality")->delimiter(',');
  common(verify);

  auto* table = app.add_subcommand("table", "Emit a table of formula values");
  table->add_option("--which", cfg.which, "eta, tau, dichotomy or minimisers")->required();
  table->add_option("--d", cfg.d_range, "Dimension range A..B")->required();
  common(table);

  auto* dump = app.add_subcommand("dump", "Vertices, incidences and f-vector of a family member as JSON");
  dump->add_option("spec", cfg.family, "Family spec")->required();
  dump->add_flag("--force-oracle", cfg.force_oracle, "Run the facet scan beyond the size guard");
  common(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (dump->parsed()) cfg.format = dump->count("--format") ? cfg.format : "json";

  std::ostringstream buffer;
  int code = 0;
  try {
    if (fvector->parsed()) {
      code = cli_detail::cmd_fvector(cfg, buffer);
    } else if (verify->parsed()) {
      code = cli_detail::cmd_verify(cfg, buffer);
    } else if (table->parsed()) {
      code = cli_detail::cmd_table(cfg, buffer);
    } else {
      code = cli_detail::cmd_dump(cfg, buffer);
    }
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: --out " << cfg.out_path << ": cannot open for writing\n";
      return 2;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace facecount
