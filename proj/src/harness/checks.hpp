#ifndef SEMISTAR_HARNESS_CHECKS_HPP
#define SEMISTAR_HARNESS_CHECKS_HPP

#include <string>
#include <vector>

#include "semistar/calculus.hpp"
#include "semistar/harness.hpp"
#include "semistar/poly.hpp"

namespace semistar::checks {

inline CheckResult verified(ordered_json info = nullptr) { return {Verdict::Verified, std::move(info)}; }
inline CheckResult counterexample(ordered_json witness) { return {Verdict::Counterexample, std::move(witness)}; }
inline CheckResult skipped(const std::string& reason) { return {Verdict::Skipped, ordered_json{{"reason", reason}}}; }
inline CheckResult exhausted(const std::string& reason) {
  return {Verdict::BudgetExhausted, ordered_json{{"reason", reason}}};
}

// Seeded subset of the window ideals, in window order.
std::vector<Module> sample_ideals(const RunEnv& env);
std::vector<Module> integral_sample_ideals(const RunEnv& env);
std::vector<SemistarOp> configured_ops(const RunEnv& env);
// Configured families other than {K}.
std::vector<std::vector<std::string>> nontrivial_families(const RunEnv& env);
std::string family_label(const std::vector<std::string>& family);
// Graded ideals of D[X] built from the sample ideals: E[X] and I + J X.
std::vector<PolyIdeal> graded_samples(const RunEnv& env);
// Polynomial samples for the sampled ideals, capped at the configured degree.
std::vector<RationalFunction> capped_samples(const RunEnv& env, const Module& e);

CheckResult axioms(const RunEnv& env);
CheckResult v_nondivisorial(const RunEnv& env);
CheckResult stable_vs_spectral(const RunEnv& env);
CheckResult op_order(const RunEnv& env);
CheckResult loc1_4(const RunEnv& env);
CheckResult loc1_5(const RunEnv& env);
CheckResult nagata_4(const RunEnv& env);
CheckResult kr_6(const RunEnv& env);
CheckResult m_3(const RunEnv& env);

CheckResult ast_zero_2(const RunEnv& env);
CheckResult ast_zero_7_v(const RunEnv& env);
CheckResult ast_zero_7_b(const RunEnv& env);
CheckResult ext_lambda_2(const RunEnv& env);
CheckResult ext_lambda_3(const RunEnv& env);
CheckResult ext_lambda_4(const RunEnv& env);
CheckResult ext_lambda_5(const RunEnv& env);
CheckResult ext_sext_2(const RunEnv& env);
CheckResult bracket_star(const RunEnv& env);
CheckResult pic_b(const RunEnv& env);
CheckResult b_3_eab(const RunEnv& env);
CheckResult gauss_content(const RunEnv& env);
CheckResult cf_d(const RunEnv& env);
CheckResult stt_1(const RunEnv& env);
CheckResult cf_h(const RunEnv& env);

}  // namespace semistar::checks

#endif
