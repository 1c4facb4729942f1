// Command-line frontend: root system tables, single pair checks, exhaustive
// pair enumeration, quasi-commutation verdicts, and the verification suites.
// All reports are machine-readable; exit codes are 0 (success / agreement),
// 1 (a checked property failed), 2 (invalid input).

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dynkin_ar/suites.hpp"
#include "dynkin_ar/textio.hpp"
#include "json.hpp"

namespace {

using dar::ClusterMonomial;
using dar::FieldSpec;
using dar::HomExtTables;
using dar::PairReport;
using dar::Quiver;
using dar::RootSystem;
using dar::SuiteOptions;
using dar::SuiteReport;
using dar::TauOrbitPartition;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  dar::require(f.good(), "IoError", "cannot open '" + out_path + "' for writing");
  f << text;
  dar::require(f.good(), "IoError", "write to '" + out_path + "' failed");
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

struct Built {
  Quiver q;
  RootSystem rs;
  HomExtTables t;
};

Built build(const std::string& type, const std::string& orientation) {
  Quiver q = dar::quiver_from_text(type, orientation);
  RootSystem rs = dar::build_root_system(q);
  HomExtTables t = dar::compute_hom_ext_tables(rs);
  return Built{std::move(q), std::move(rs), std::move(t)};
}

int cmd_roots(const std::string& type, const std::string& orientation, const std::string& format,
              const std::string& out) {
  Built b = build(type, orientation);
  const RootSystem& rs = b.rs;
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (int k = 1; k <= rs.N; ++k)
      rows.push_back({{"position", k},
                      {"root", dar::root_text(rs, k)},
                      {"letter", rs.word[k - 1]},
                      {"theta", k <= rs.n},
                      {"tau", rs.tau[k - 1]},
                      {"projective", rs.is_projective(k)}});
    emit(dump({{"schema", 1}, {"quiver", b.q.str()}, {"roots", rows}}), out);
    return 0;
  }
  std::vector<std::string> headers = {"position", "root", "letter", "theta", "tau", "projective"};
  std::vector<std::vector<std::string>> rows;
  for (int k = 1; k <= rs.N; ++k)
    rows.push_back({std::to_string(k), dar::root_text(rs, k), std::to_string(rs.word[k - 1]),
                    k <= rs.n ? "theta_" + std::to_string(k) : "",
                    rs.tau[k - 1] ? std::to_string(rs.tau[k - 1]) : "-",
                    rs.is_projective(k) ? "yes" : "no"});
  if (format == "csv") {
    std::string text = dar::csv_line(headers);
    for (const auto& row : rows) text += dar::csv_line(row);
    emit(text, out);
  } else {
    emit(dar::render_table(headers, rows), out);
  }
  return 0;
}

int cmd_homtable(const std::string& type, const std::string& orientation,
                 const std::string& format, const std::string& out) {
  Built b = build(type, orientation);
  const int N = b.rs.N;
  if (format == "json") {
    nlohmann::json hom = nlohmann::json::array(), ext = nlohmann::json::array();
    for (int k = 1; k <= N; ++k) {
      nlohmann::json hrow = nlohmann::json::array(), erow = nlohmann::json::array();
      for (int l = 1; l <= N; ++l) {
        hrow.push_back(b.t.hom_at(k, l));
        erow.push_back(b.t.ext_at(k, l));
      }
      hom.push_back(std::move(hrow));
      ext.push_back(std::move(erow));
    }
    emit(dump({{"schema", 1}, {"quiver", b.q.str()}, {"hom", hom}, {"ext", ext}}), out);
    return 0;
  }
  if (format == "csv") {
    std::string text = dar::csv_line({"k", "l", "hom", "ext"});
    for (int k = 1; k <= N; ++k)
      for (int l = 1; l <= N; ++l)
        text += dar::csv_line({std::to_string(k), std::to_string(l),
                               std::to_string(b.t.hom_at(k, l)), std::to_string(b.t.ext_at(k, l))});
    emit(text, out);
    return 0;
  }
  std::vector<std::string> headers = {"k"};
  for (int l = 1; l <= N; ++l) headers.push_back(std::to_string(l));
  std::string text;
  for (const char* which : {"hom", "ext"}) {
    std::vector<std::vector<std::string>> rows;
    for (int k = 1; k <= N; ++k) {
      std::vector<std::string> row = {std::to_string(k)};
      for (int l = 1; l <= N; ++l)
        row.push_back(std::to_string(which[0] == 'h' ? b.t.hom_at(k, l) : b.t.ext_at(k, l)));
      rows.push_back(std::move(row));
    }
    text += std::string(which) + " (row k, column l)\n" + dar::render_table(headers, rows) + "\n";
  }
  emit(text, out);
  return 0;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

int cmd_enumerate(const std::string& type, const std::string& orientation,
                  const std::string& format, const std::string& out) {
  Built b = build(type, orientation);
  auto parts = dar::enumerate_tau_orbit_partitions(b.rs);
  struct Row {
    std::string lambda, kappa;
    dar::PairStats s;
  };
  std::vector<Row> rows;
  for (const auto& lam : parts)
    for (const auto& kap : parts) {
      dar::VanishingCriterion v = dar::ext_vanishing_criterion(b.rs, b.t, lam, kap);
      rows.push_back({dar::tau_orbit_text(b.rs, lam), dar::tau_orbit_text(b.rs, kap),
                      dar::pair_stats(v)});
    }
  if (format == "json") {
    nlohmann::json jrows = nlohmann::json::array();
    for (const Row& r : rows)
      jrows.push_back({{"lambda", r.lambda},
                       {"kappa", r.kappa},
                       {"r_set", r.s.r_set},
                       {"r_windowed", r.s.r_windowed},
                       {"m_count", r.s.m_count},
                       {"p_count", r.s.p_count},
                       {"r_windowed_swapped", r.s.r_windowed_swapped},
                       {"m_count_swapped", r.s.m_count_swapped},
                       {"p_count_swapped", r.s.p_count_swapped},
                       {"verdict", r.s.criterion_holds ? "vanishing" : "nonvanishing"}});
    emit(dump({{"schema", 1}, {"quiver", b.q.str()}, {"pairs", jrows}}), out);
    return 0;
  }
  std::vector<std::string> headers = {"lambda",
                                      "kappa",
                                      "r_set",
                                      "r_windowed",
                                      "m_count",
                                      "p_count",
                                      "r_windowed_swapped",
                                      "m_count_swapped",
                                      "p_count_swapped",
                                      "verdict"};
  std::vector<std::vector<std::string>> cells;
  for (const Row& r : rows)
    cells.push_back({r.lambda, r.kappa, join_ints(r.s.r_set), std::to_string(r.s.r_windowed),
                     std::to_string(r.s.m_count), std::to_string(r.s.p_count),
                     std::to_string(r.s.r_windowed_swapped), std::to_string(r.s.m_count_swapped),
                     std::to_string(r.s.p_count_swapped),
                     r.s.criterion_holds ? "vanishing" : "nonvanishing"});
  if (format == "csv") {
    std::string text = dar::csv_line(headers);
    for (const auto& row : cells) text += dar::csv_line(row);
    emit(text, out);
  } else {
    emit(dar::render_table(headers, cells), out);
  }
  return 0;
}

int cmd_check_pair(const std::string& type, const std::string& orientation,
                   const std::string& lambda, const std::string& kappa, uint64_t seed,
                   const std::string& field, const std::string& out) {
  Built b = build(type, orientation);
  TauOrbitPartition lam = dar::parse_tau_orbit_text(b.rs, lambda);
  TauOrbitPartition kap = dar::parse_tau_orbit_text(b.rs, kappa);
  FieldSpec f = dar::parse_field_text(field);
  PairReport pr = dar::check_pair(b.rs, b.t, lam, kap, seed, f, true);
  emit(dump(pr.to_json()), out);
  return pr.agreement ? 0 : 1;
}

int cmd_quasicommute(const std::string& type, const std::string& orientation, const std::string& x,
                     const std::string& y, const std::string& out) {
  Built b = build(type, orientation);
  ClusterMonomial mx = dar::parse_monomial_text(b.rs, x);
  ClusterMonomial my = dar::parse_monomial_text(b.rs, y);
  dar::QuasiCommuteResult res = dar::quasi_commute(b.rs, b.t, mx, my);
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : res.pairs) {
    nlohmann::json jp = {{"a", dar::minor_str(p.a)},
                         {"b", dar::minor_str(p.b)},
                         {"frozen", p.frozen},
                         {"criterion", p.criterion.vanishing_canonical},
                         {"quasi_commute", p.quasi_commute}};
    if (!p.note.empty()) jp["note"] = p.note;
    pairs.push_back(std::move(jp));
  }
  emit(dump({{"schema", 1},
             {"quiver", b.q.str()},
             {"monomial_x", dar::monomial_str(mx)},
             {"monomial_y", dar::monomial_str(my)},
             {"quasi_commute", res.quasi_commute},
             {"any_frozen", res.any_frozen},
             {"window_ambiguity", res.window_ambiguity},
             {"pairs", pairs}}),
       out);
  return 0;
}

int cmd_verify(const std::string& type, const std::string& orientation, const std::string& suite,
               long trials, uint64_t seed, const std::string& field, const std::string& out) {
  SuiteOptions opt;
  opt.seed = seed;
  opt.trials = trials;
  opt.field = dar::parse_field_text(field);
  if (!type.empty()) opt.quivers = {dar::quiver_from_text(type, orientation)};
  std::vector<std::string> names;
  if (suite == "all")
    names = dar::suite_names();
  else
    names.push_back(suite);
  int exit_status = 0;
  std::vector<SuiteReport> reports;
  reports.reserve(names.size());
  for (const std::string& name : names) {
    reports.push_back(dar::run_suite(name, opt));
    exit_status = std::max(exit_status, reports.back().exit_status);
  }
  if (reports.size() == 1) {
    emit(dump(reports.front().to_json()), out);
  } else {
    nlohmann::json suites = nlohmann::json::array();
    for (const SuiteReport& r : reports) suites.push_back(r.to_json());
    emit(dump({{"schema", 1}, {"suites", suites}, {"exit_status", exit_status}}), out);
  }
  return exit_status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extension vanishing and quasi-commutation checker for Dynkin quivers"};
  app.require_subcommand(1);

  std::string type, orientation = "linear", field = "rational", out;
  std::string format_table = "table", format_json = "json";
  std::string lambda, kappa, mono_x, mono_y, suite = "all";
  uint64_t seed = 0;
  long trials = 200;

  auto add_quiver = [&](CLI::App* cmd, bool required) {
    auto* t = cmd->add_option("--type", type, "Dynkin type (A2..A9, D4..D9, E6, E7, E8)");
    if (required) t->required();
    cmd->add_option("--orientation", orientation,
                    "preset (linear, bipartite) or arrow list like 1>2,3>2");
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out, "write the report to a file instead of stdout");
  };
  auto add_format = [&](CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--format", fmt, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
  };

  CLI::App* roots = app.add_subcommand("roots", "positive roots in word order");
  add_quiver(roots, true);
  add_format(roots, format_table);
  add_out(roots);

  CLI::App* homtable = app.add_subcommand("homtable", "hom and ext dimension tables");
  add_quiver(homtable, true);
  add_format(homtable, format_table);
  add_out(homtable);

  CLI::App* enumerate = app.add_subcommand("enumerate", "all orbit partition pairs with verdicts");
  add_quiver(enumerate, true);
  add_format(enumerate, format_table);
  add_out(enumerate);

  CLI::App* checkpair =
      app.add_subcommand("check-pair", "criterion and oracle verdicts for one pair");
  add_quiver(checkpair, true);
  checkpair->add_option("--lambda", lambda, "first partition, e.g. \"tau-orbit base=[2,2] len=2\"")
      ->required();
  checkpair->add_option("--kappa", kappa, "second partition")->required();
  checkpair->add_option("--seed", seed, "oracle sampling seed");
  checkpair->add_option("--field", field, "oracle coefficients: rational or prime:P");
  add_out(checkpair);

  CLI::App* quasi = app.add_subcommand("quasicommute", "quasi-commutation of cluster monomials");
  add_quiver(quasi, true);
  quasi->add_option("--x", mono_x, "first monomial, e.g. \"D(0,4)^2 * D(0,2)\"")->required();
  quasi->add_option("--y", mono_y, "second monomial")->required();
  add_out(quasi);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_quiver(verify, false);
  verify->add_option("--suite", suite, "suite name or \"all\"")
      ->check(CLI::IsMember({"all", "euler", "tauhom", "fourcases", "zab", "theorem",
                             "corollaries", "closedforms", "minors"}));
  verify->add_option("--trials", trials, "instances for the commutator suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "suite seed");
  verify->add_option("--field", field, "oracle coefficients: rational or prime:P");
  verify->add_option("--format", format_json, "output format")->check(CLI::IsMember({"json"}));
  add_out(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*roots) return cmd_roots(type, orientation, format_table, out);
    if (*homtable) return cmd_homtable(type, orientation, format_table, out);
    if (*enumerate) return cmd_enumerate(type, orientation, format_table, out);
    if (*checkpair) return cmd_check_pair(type, orientation, lambda, kappa, seed, field, out);
    if (*quasi) return cmd_quasicommute(type, orientation, mono_x, mono_y, out);
    return cmd_verify(type, orientation, suite, trials, seed, field, out);
  } catch (const dar::Error& e) {
    std::cout << dump({{"schema", 1}, {"error", {{"kind", e.kind()}, {"message", e.what()}}}});
    return 2;
  }
}
