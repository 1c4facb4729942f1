#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "dynkin_ar/paircheck.hpp"
#include "dynkin_ar/suites.hpp"
#include "dynkin_ar/textio.hpp"

using namespace dar;

namespace {

template <class F>
std::string error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

struct Built {
  RootSystem rs;
  HomExtTables t;
};

Built built(const std::string& type, const std::string& orientation = "linear") {
  RootSystem rs = build_root_system(quiver_from_text(type, orientation));
  HomExtTables t = compute_hom_ext_tables(rs);
  return Built{std::move(rs), std::move(t)};
}

}  // namespace

TEST_CASE("quiver text accepts presets and explicit arrow lists") {
  CHECK(quiver_from_text("A3", "linear").str() == "type=A3; arrows=1>2,2>3");
  CHECK(quiver_from_text("A3", "2>1, 2>3").str() == "type=A3; arrows=2>1,2>3");
  CHECK(quiver_from_text("D4", "bipartite").str() == "type=D4; arrows=1>2,3>2,4>2");
  CHECK(error_kind([] { quiver_from_text("B3", "linear"); }) == "InvalidQuiver");
  CHECK(error_kind([] { quiver_from_text("A3", "1>2"); }) == "InvalidQuiver");
  CHECK(error_kind([] { quiver_from_text("A3", "1>2,2>3,1>3"); }) == "InvalidQuiver");
}

TEST_CASE("root text parses segments and coordinates to word positions") {
  Built b = built("A3");
  for (int k = 1; k <= b.rs.N; ++k) CHECK(parse_root_text(b.rs, root_text(b.rs, k)) == k);
  CHECK(parse_root_text(b.rs, "[1,3]") == 3);
  CHECK(parse_root_text(b.rs, "1,1,1") == 3);
  CHECK(error_kind([&] { parse_root_text(b.rs, "[3,1]"); }) == "InvalidPartition");
  CHECK(error_kind([&] { parse_root_text(b.rs, "2,0,0"); }) == "InvalidPartition");

  Built d = built("D4");
  for (int k = 1; k <= d.rs.N; ++k) CHECK(parse_root_text(d.rs, root_text(d.rs, k)) == k);
  CHECK(error_kind([&] { parse_root_text(d.rs, "[1,2]"); }) == "InvalidPartition");
}

TEST_CASE("orbit partition text round-trips over every enumerated partition") {
  for (const char* type : {"A3", "A4", "D4"}) {
    Built b = built(type);
    for (const auto& p : enumerate_tau_orbit_partitions(b.rs)) {
      std::string text = tau_orbit_text(b.rs, p);
      CHECK(parse_tau_orbit_text(b.rs, text).parts == p.parts);
    }
  }
  Built b = built("A3");
  CHECK(error_kind([&] { parse_tau_orbit_text(b.rs, "tau-orbit base=[3,3] len=2"); }) ==
        "InvalidPartition");
  CHECK(error_kind([&] { parse_tau_orbit_text(b.rs, "orbit base=[1,1] len=1"); }) ==
        "InvalidPartition");
  CHECK(error_kind([&] { parse_tau_orbit_text(b.rs, "tau-orbit base=[1,1] len=1 x=2"); }) ==
        "InvalidPartition");
}

TEST_CASE("general partition and monomial text round-trip") {
  Built b = built("A3");
  KostantPartition p = make_kostant_partition(b.rs, {4, 1, 1});
  CHECK(parse_kostant_text(b.rs, kostant_partition_str(b.rs, p)).parts == p.parts);
  CHECK(error_kind([&] { parse_kostant_text(b.rs, "[1,1]"); }) == "InvalidPartition");

  ClusterMonomial m = make_cluster_monomial(
      b.rs, {{make_minor_index(b.rs, 0, 4), 2}, {make_minor_index(b.rs, 0, 2), 1}});
  ClusterMonomial back = parse_monomial_text(b.rs, monomial_str(m));
  CHECK(monomial_str(back) == monomial_str(m));
  CHECK(parse_monomial_text(b.rs, "D(0,4)").factors.size() == 1);
  CHECK(parse_monomial_text(b.rs, "D(0,4)^3 * D(0,4)").factors.size() == 1);
  CHECK(error_kind([&] { parse_monomial_text(b.rs, "D(4,0)"); }) == "InvalidIndex");
  CHECK(error_kind([&] { parse_monomial_text(b.rs, "D(0,4)^0"); }) == "InvalidIndex");
}

TEST_CASE("csv cells are escaped exactly when they need to be") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_line({"a", "b,c", "d"}) == "a,\"b,c\",d\n");
  std::string table = render_table({"x", "yy"}, {{"1", "2"}});
  CHECK(table.find("x") != std::string::npos);
  CHECK(table.find("--") != std::string::npos);
}

TEST_CASE("field specs parse and reject bad moduli") {
  CHECK(parse_field_text("rational").rational);
  FieldSpec f = parse_field_text("prime:1000003");
  CHECK(!f.rational);
  CHECK(f.prime == 1000003);
  CHECK(error_kind([] { parse_field_text("prime:10"); }) == "InvalidModulus");
  CHECK(error_kind([] { parse_field_text("prime:abc"); }) == "ParseError");
  CHECK(error_kind([] { parse_field_text("real"); }) == "ParseError");
}

TEST_CASE("pair report carries the worked self-pair example") {
  Built b = built("A3");
  TauOrbitPartition lam = parse_tau_orbit_text(b.rs, "tau-orbit base=[1,1] len=2");
  PairReport pr = check_pair(b.rs, b.t, lam, lam, 0, FieldSpec{}, false);
  CHECK(pr.verdict == "vanishing");
  CHECK(pr.criterion);
  CHECK(pr.agreement);
  CHECK(pr.oracle.via_forms == 0);
  CHECK(pr.oracle.via_coker == 0);
  CHECK(pr.oracle.certified);
  CHECK(pr.warning.empty());
  nlohmann::json j = pr.to_json();
  CHECK(j["schema"] == 1);
  CHECK(!j.contains("timing_ms"));
  CHECK(!j.contains("warning"));
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("pair report marks translate shifts into frozen territory") {
  Built b = built("A3");
  TauOrbitPartition lam = parse_tau_orbit_text(b.rs, "tau-orbit base=[1,1] len=2");
  TauOrbitPartition kap = tau_shift(b.rs, lam);
  PairReport pr = check_pair(b.rs, b.t, lam, kap, 0, FieldSpec{}, false);
  CHECK(pr.frozen);
  CHECK(pr.verdict == "frozen");
  CHECK(!pr.warning.empty());
  CHECK(!pr.criterion);
  CHECK(pr.oracle.via_forms == 1);
  CHECK(pr.agreement);
  nlohmann::json j = pr.to_json();
  CHECK(j["verdict"] == "frozen");
  CHECK(j.contains("warning"));
}

TEST_CASE("pair reports are byte-stable for a fixed seed") {
  Built b = built("A4");
  auto parts = enumerate_tau_orbit_partitions(b.rs);
  for (std::size_t i = 0; i < 3; ++i) {
    PairReport one = check_pair(b.rs, b.t, parts[i], parts[i + 1], 99, FieldSpec{}, false);
    PairReport two = check_pair(b.rs, b.t, parts[i], parts[i + 1], 99, FieldSpec{}, false);
    CHECK(one.to_json().dump() == two.to_json().dump());
  }
}

TEST_CASE("suite reports count, round-trip, and stay byte-stable") {
  SuiteOptions opt;
  opt.seed = 7;
  opt.quivers = {quiver_from_text("A3", "linear")};
  SuiteReport r = run_suite("tauhom", opt);
  CHECK(r.counts.checks == 16);
  CHECK(r.counts.mismatches == 0);
  CHECK(r.counts.agreements == 16);
  CHECK(r.exit_status == 0);
  CHECK(r.scope == std::vector<std::string>{"type=A3; arrows=1>2,2>3"});
  nlohmann::json j = r.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["seed"] == 7);
  CHECK(nlohmann::json::parse(j.dump()) == j);
  CHECK(run_suite("tauhom", opt).to_json().dump() == j.dump());
}

TEST_CASE("suite names are fixed and unknown names are rejected") {
  const auto& names = suite_names();
  CHECK(names == std::vector<std::string>{"euler", "tauhom", "fourcases", "zab", "theorem",
                                          "corollaries", "closedforms", "minors"});
  CHECK(error_kind([] { run_suite("nope", SuiteOptions{}); }) == "InvalidSuite");
}

TEST_CASE("the commutator suite honors trials and the field choice") {
  SuiteOptions opt;
  opt.trials = 10;
  opt.seed = 3;
  SuiteReport r = run_suite("zab", opt);
  CHECK(r.counts.checks == 20);
  CHECK(r.counts.mismatches == 0);
  opt.field = parse_field_text("prime:1000003");
  SuiteReport rp = run_suite("zab", opt);
  CHECK(rp.counts.checks == 20);
  CHECK(rp.counts.mismatches == 0);
  CHECK(rp.field == "prime:1000003");
}

TEST_CASE("the four-case suite flags multiplicity pairs instead of failing") {
  SuiteOptions opt;
  opt.quivers = {quiver_from_text("D4", "bipartite")};
  SuiteReport r = run_suite("fourcases", opt);
  CHECK(r.counts.mismatches == 0);
  CHECK(r.counts.multiplicity_flags == 3);
  CHECK(r.exit_status == 0);
  CHECK(!r.notes.empty());
}
