#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subord/expressions.hpp"
#include "subord/function_classes.hpp"
#include "subord/halfplane.hpp"
#include "subord/thresholds.hpp"

namespace subord {

// A lemma (p-level) or one premise of a theorem (f-level).
struct ResultId {
  bool is_lemma = true;
  Lemma lemma = Lemma::L2_5;
  TheoremPremise premise;

  static ResultId of(Lemma l) { return {true, l, {}}; }
  static ResultId of(Theorem t, int index) { return {false, Lemma::L2_5, {t, index}}; }
  static ResultId parse(const std::string& s);  // "L2_5" or "T2_1:3"
  std::string str() const;
  bool scaled_target() const;  // zp'/p against -2 delta z/(1-z)
};

struct TrialOutcome {
  bool analytic_premise = true;  // false when a premise denominator vanishes in the disk
  SubordinationResult premise;
  SubordinationResult conclusion;
  double delta = 0.0;  // threshold actually used (after weakening)
  Signature signature;  // of the p the conclusion is about

  bool violation(double tol) const { return premise.holds() && conclusion.margin < -tol; }
};

// Evaluates premise and conclusion of one result for individual members.
// `weaken` replaces delta by delta - weaken * sign(1 - beta).
class Evaluator {
 public:
  Evaluator(ResultId id, ParameterSet params, SampleGrid grid, double weaken = 0.0);

  const ResultId& id() const { return id_; }
  const ParameterSet& params() const { return params_; }
  const SampleGrid& grid() const { return grid_; }
  // Class members are drawn from (b or mu fixed by the theorem's coupling).
  ClassSpec class_spec() const { return spec_; }
  // Nominal threshold for the parameters (before weakening).
  double nominal_delta() const { return delta_; }

  // Throws only for malformed members; analytic failures surface in the outcome.
  TrialOutcome evaluate(const LaurentSeries& member) const;
  // Same decision on a different grid.
  TrialOutcome evaluate_on(const LaurentSeries& member, const SampleGrid& grid) const;

 private:
  double delta_for(const Signature& sig) const;

  ResultId id_;
  ParameterSet params_;
  SampleGrid grid_;
  std::vector<Complex> points_;
  double weaken_;
  ClassSpec spec_;
  double delta_;
};

// b for a theorem from mu: mu = n b (T2_1), mu = -(n+1) b (T2_2), mu = (n+1) b (T2_3).
double coefficient_for_mu(Theorem t, int n, double mu);

struct Witness {
  ClassSpec spec;
  LaurentSeries member;
  double premise_margin = 0.0;
  double conclusion_margin = 0.0;
  Complex conclusion_point;
  double objective = 0.0;
  std::uint64_t seed = 0;
};

struct VerifyOptions {
  SampleGrid grid;
  SamplerConfig sampler;
  int trials = 1000;
  std::uint64_t seed = 7;
  int max_witnesses = 5;
};

struct VerificationReport {
  std::string result_id;
  ParameterSet params;
  double delta = 0.0;
  int trials = 0;
  int sampling_failures = 0;  // rejection budget exhausted
  int excluded = 0;           // p outside every H class (meromorphic signature)
  int accepted = 0;
  int premise_pass = 0;
  int premise_poles = 0;
  int implication_violations = 0;
  int inconclusive = 0;  // premise held, conclusion margin within tolerance of 0
  double worst_premise_margin = 0.0;
  double worst_conclusion_margin = 0.0;
  std::vector<Witness> witnesses;
  // Both labelings of the p of the meromorphic theorem; for the analytic
  // results they coincide and signature_mismatches counts disagreements.
  int stated_n = 0;
  double stated_mu = 0.0;
  int effective_n = 0;
  double effective_mu = 0.0;
  int signature_mismatches = 0;
  int certified_close_to_convex = 0;
  std::vector<std::string> annotations;

  double pass_rate() const { return accepted > 0 ? static_cast<double>(premise_pass) / accepted : 0.0; }
};

std::uint64_t trial_seed(std::uint64_t seed, int trial);

VerificationReport verify_lemma(Lemma lemma, const ParameterSet& params, const VerifyOptions& opts = {});
VerificationReport verify_theorem(const TheoremPremise& premise, const ParameterSet& params,
                                  const VerifyOptions& opts = {});
VerificationReport verify(const ResultId& id, const ParameterSet& params, const VerifyOptions& opts = {});

// Close-to-convexity (hence univalence) certificate for the f' conclusion at beta = 0.
std::vector<std::string> remark_flags(const VerificationReport& report);

struct SuiteCell {
  ResultId id;
  ParameterSet params;
  // Overrides the sampler's amplitude_span for this cell.
  double amplitude_span = 0.0;
};

// Analytic results over the parameter lattice used for the implication suite.
std::vector<SuiteCell> default_suite();
// A handful of cells for quick runs and determinism checks.
std::vector<SuiteCell> smoke_suite();

std::vector<VerificationReport> run_suite(const std::vector<SuiteCell>& cells, const VerifyOptions& opts);

}  // namespace subord
