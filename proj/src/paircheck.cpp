#include "dynkin_ar/paircheck.hpp"

#include <chrono>

#include "dynkin_ar/textio.hpp"

namespace dar {

std::string FieldSpec::str() const {
  return rational ? "rational" : "prime:" + std::to_string(prime);
}

FieldSpec parse_field_text(const std::string& text) {
  FieldSpec f;
  if (text == "rational") return f;
  if (text.rfind("prime:", 0) == 0) {
    const std::string digits = text.substr(6);
    require(!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos,
            "ParseError", "field must be 'rational' or 'prime:<p>'");
    f.rational = false;
    f.prime = std::stoull(digits);
    Fp::set_modulus(f.prime);
    return f;
  }
  fail("ParseError", "field must be 'rational' or 'prime:<p>'");
}

PairStats pair_stats(const VanishingCriterion& v) {
  PairStats s;
  s.r_set = v.fwd.r_set;
  s.r_windowed = v.fwd.window_canonical;
  s.m_count = static_cast<int>(v.fwd.m);
  s.p_count = static_cast<int>(v.fwd.p);
  s.r_set_swapped = v.bwd.r_set;
  s.r_windowed_swapped = v.bwd.window_canonical;
  s.m_count_swapped = static_cast<int>(v.bwd.m);
  s.p_count_swapped = static_cast<int>(v.bwd.p);
  s.criterion_holds = v.vanishing_canonical;
  return s;
}

namespace {

template <class K>
OracleDims oracle_impl(const RootSystem& rs, const TauOrbitPartition& lambda,
                       const TauOrbitPartition& kappa, uint64_t seed) {
  Rng rng(seed);
  Rng rl = rng.fork(1), rk = rng.fork(2);
  PreprojModule<K> ml = generic_dual(partition_rep<K>(rs, lambda), rl);
  PreprojModule<K> mk =
      lambda.parts == kappa.parts ? ml : generic_dual(partition_rep<K>(rs, kappa), rk);
  OracleDims out;
  out.via_forms = ext_dim_lambda_via_forms(ml, mk);
  out.via_coker = ext_dim_lambda_via_coker(ml, mk);
  out.hom_fwd = lambda_hom_dim(ml, mk);
  out.hom_bwd = lambda_hom_dim(mk, ml);
  out.certified = ml.certified && mk.certified;
  return out;
}

}  // namespace

OracleDims pair_oracle(const RootSystem& rs, const TauOrbitPartition& lambda,
                       const TauOrbitPartition& kappa, uint64_t seed, const FieldSpec& field) {
  if (field.rational) return oracle_impl<Rat>(rs, lambda, kappa, seed);
  Fp::set_modulus(field.prime);
  return oracle_impl<Fp>(rs, lambda, kappa, seed);
}

PairReport check_pair(const RootSystem& rs, const HomExtTables& t, const TauOrbitPartition& lambda,
                      const TauOrbitPartition& kappa, uint64_t seed, const FieldSpec& field,
                      bool with_timing) {
  auto start = std::chrono::steady_clock::now();
  PairReport out;
  out.quiver = rs.quiver.str();
  out.lambda_text = tau_orbit_text(rs, lambda);
  out.kappa_text = tau_orbit_text(rs, kappa);
  out.frozen = !lambda.assumption || !kappa.assumption;

  VanishingCriterion v = ext_vanishing_criterion_raw(rs, t, lambda, kappa);
  out.stats = pair_stats(v);
  out.criterion = v.vanishing_canonical;
  out.criterion_alternate = v.vanishing_alternate;
  out.window_ambiguity = v.window_ambiguity;
  for (int a : lambda.parts)
    for (int b : kappa.parts)
      if (t.hom_at(a, b) > 1 || t.hom_at(b, a) > 1) out.multiplicity_flag = true;

  out.oracle = pair_oracle(rs, lambda, kappa, seed, field);
  out.field = field.str();
  out.agreement = out.criterion == (out.oracle.via_forms == 0);
  out.verdict = out.frozen ? "frozen" : (out.criterion ? "vanishing" : "nonvanishing");
  if (out.frozen)
    out.warning = "an orbit head is projective, so the window formulas run outside their "
                  "hypotheses; the raw verdict is reported for inspection";
  out.seed = seed;
  if (with_timing) {
    auto elapsed = std::chrono::steady_clock::now() - start;
    out.timing_ms =
        static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
  }
  return out;
}

nlohmann::json PairReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["quiver"] = quiver;
  j["lambda"] = lambda_text;
  j["kappa"] = kappa_text;
  j["verdict"] = verdict;
  j["frozen"] = frozen;
  if (!warning.empty()) j["warning"] = warning;
  j["criterion"] = criterion;
  j["criterion_alternate"] = criterion_alternate;
  j["window_ambiguity"] = window_ambiguity;
  j["multiplicity_flag"] = multiplicity_flag;
  j["stats"] = {{"r_set", stats.r_set},
                {"r_windowed", stats.r_windowed},
                {"m_count", stats.m_count},
                {"p_count", stats.p_count},
                {"r_set_swapped", stats.r_set_swapped},
                {"r_windowed_swapped", stats.r_windowed_swapped},
                {"m_count_swapped", stats.m_count_swapped},
                {"p_count_swapped", stats.p_count_swapped},
                {"criterion_holds", stats.criterion_holds}};
  j["oracle"] = {{"via_forms", oracle.via_forms},
                 {"via_coker", oracle.via_coker},
                 {"hom_fwd", oracle.hom_fwd},
                 {"hom_bwd", oracle.hom_bwd},
                 {"certified", oracle.certified}};
  j["field"] = field;
  j["agreement"] = agreement;
  j["seed"] = seed;
  if (timing_ms >= 0) j["timing_ms"] = timing_ms;
  return j;
}

}  // namespace dar
