// Batch driver: thresholds, membership checks, verification suites,
// admissibility scans and counterexample hunts.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subord/admissibility.hpp"
#include "subord/errors.hpp"
#include "subord/hunter.hpp"
#include "subord/report.hpp"
#include "subord/thresholds.hpp"
#include "subord/verify.hpp"

using namespace subord;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  double alpha = 0.0;
  std::optional<double> beta;
  double gamma = 1.0;
  int n = 1;
  std::optional<double> mu;
  std::optional<double> b;
  std::vector<double> radii{0.5, 0.9, 0.99, 0.999};
  int angles = 720;
  double tol = 1e-9;
  int order = kDefaultOrder;
  int trials = 1000;
  std::uint64_t seed = 7;
  int budget = 10000;
  std::vector<double> epsilon{0.0};
  std::string out;
  std::string format;  // per-subcommand default when empty

  std::string result;
  std::string lemma;
  std::string suite;
  std::string member;
  std::optional<double> starlike;
  int depth = 4;
  double amplitude_span = 0.0;
};

// Written once at the end through a temporary file so readers never see a partial report.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
  }
  std::filesystem::rename(tmp, path);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

SampleGrid grid_of(const Options& o) {
  SampleGrid g;
  g.radii = o.radii;
  g.angles = o.angles;
  g.tolerance = o.tol;
  g.validate();
  return g;
}

ParameterSet params_of(const Options& o) {
  ParameterSet p;
  p.alpha = o.alpha;
  p.beta = o.beta.value_or(0.0);
  p.gamma = o.gamma;
  p.n = o.n;
  p.mu = o.mu.value_or(0.0);
  return p;
}

// mu implied by a fixed coefficient b under a theorem's coupling.
double mu_from_b(Theorem t, int n, double b) {
  switch (t) {
    case Theorem::T2_1: return n * b;
    case Theorem::T2_2: return -(n + 1) * b;
    case Theorem::T2_3: return (n + 1) * b;
  }
  return 0.0;
}

int cmd_threshold(const Options& o) {
  ParameterSet p = params_of(o);
  std::string coupling;
  if (o.b && !o.mu) {
    p.mu = o.n * *o.b;
    coupling = " (mu = n b)";
  }
  p.validate();
  const std::string format = o.format.empty() ? "text" : o.format;
  const ThresholdSet an = threshold_set(p, ThresholdVariant::Analytic);
  const ThresholdSet me = threshold_set(p, ThresholdVariant::Meromorphic);
  std::ostringstream s;
  if (format == "json") {
    Json j{{"params", params_to_json(p)},
           {"K", p.K()},
           {"analytic", Json::array({an.delta1, an.delta2, an.delta3, an.delta4})},
           {"meromorphic", Json::array({me.delta1, me.delta2, me.delta3, me.delta4})}};
    Json lemmas = Json::object();
    for (Lemma l : {Lemma::L2_4, Lemma::L2_5, Lemma::L2_6, Lemma::L2_7, Lemma::L2_8, Lemma::L2_9}) {
      try {
        lemmas[to_string(l)] = lemma_delta(l, p);
      } catch (const Error&) {
        lemmas[to_string(l)] = nullptr;
      }
    }
    j["lemmas"] = lemmas;
    Json sig = Json::array();
    for (double rho : {0.0, 0.5, 1.0, 2.0}) sig.push_back(Json::array({rho, sigma_max(rho, p.n, p.mu)}));
    j["sigma_max"] = sig;
    s << j.dump(2) << "\n";
  } else if (format == "csv") {
    s << "variant,delta1,delta2,delta3,delta4\n";
    s << "analytic," << fmt(an.delta1) << "," << fmt(an.delta2) << "," << fmt(an.delta3) << "," << fmt(an.delta4) << "\n";
    s << "meromorphic," << fmt(me.delta1) << "," << fmt(me.delta2) << "," << fmt(me.delta3) << "," << fmt(me.delta4)
      << "\n";
  } else {
    s << "K = " << fmt(p.K()) << coupling << "\n";
    s << "analytic:    d1=" << fmt(an.delta1) << " d2=" << fmt(an.delta2) << " d3=" << fmt(an.delta3)
      << " d4=" << fmt(an.delta4) << "\n";
    s << "meromorphic: d1=" << fmt(me.delta1) << " d2=" << fmt(me.delta2) << " d3=" << fmt(me.delta3)
      << " d4=" << fmt(me.delta4) << "\n";
    for (Lemma l : {Lemma::L2_4, Lemma::L2_5, Lemma::L2_6, Lemma::L2_7, Lemma::L2_8, Lemma::L2_9}) {
      s << to_string(l) << ": ";
      try {
        s << fmt(lemma_delta(l, p)) << "\n";
      } catch (const Error& e) {
        s << "n/a (" << e.what() << ")\n";
      }
    }
    s << "sigma_max:";
    for (double rho : {0.0, 0.5, 1.0, 2.0}) s << " rho=" << fmt(rho) << ":" << fmt(sigma_max(rho, p.n, p.mu));
    s << "\n";
  }
  emit(o.out, s.str());
  return kExitOk;
}

Json outcome_json(const SubordinationResult& r) {
  const char* v = r.verdict == Verdict::True ? "true" : r.verdict == Verdict::False ? "false" : "inconclusive";
  return Json{{"verdict", v},
              {"margin", std::isfinite(r.margin) ? Json(r.margin) : Json(nullptr)},
              {"witness", Json::array({r.witness.real(), r.witness.imag()})}};
}

int cmd_check(const Options& o) {
  std::ifstream in(o.member);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read member file '" + o.member + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("member file: ") + e.what());
  }
  ClassSpec spec;
  const LaurentSeries m = member_from_json(j, &spec);
  const SampleGrid grid = grid_of(o);
  Json report{{"member", j}};
  int code = kExitOk;

  if (o.starlike) {
    if (spec.family != Family::A) throw Error(ErrorCode::DomainError, "--starlike needs a family A member");
    const auto r = classify_starlike(m, *o.starlike, grid);
    report["starlike"] = outcome_json(r);
    report["starlike"]["beta"] = *o.starlike;
    if (!r.holds()) code = kExitFail;
  }
  if (!o.result.empty()) {
    const ResultId id = ResultId::parse(o.result);
    ParameterSet p = params_of(o);
    p.n = spec.n;
    if (id.is_lemma) {
      if (spec.family != Family::H) throw Error(ErrorCode::DomainError, "lemmas take a family H member");
      p.mu = spec.fixed;
    } else {
      if (spec.family != family_of(id.premise.theorem))
        throw Error(ErrorCode::DomainError, "member family does not match " + o.result);
      p.mu = mu_from_b(id.premise.theorem, spec.n, spec.fixed);
    }
    const Evaluator ev(id, p, grid);
    const TrialOutcome t = ev.evaluate(m);
    report["result_id"] = id.str();
    report["params"] = params_to_json(p);
    report["delta"] = t.delta;
    report["premise"] = outcome_json(t.premise);
    report["conclusion"] = outcome_json(t.conclusion);
    report["violation"] = t.violation(grid.tolerance);
    if (t.violation(grid.tolerance)) code = kExitFail;
  }
  if (!o.starlike && o.result.empty()) throw CLI::ValidationError("check needs --starlike or --result");
  emit(o.out, report.dump(2) + "\n");
  return code;
}

int cmd_verify(const Options& o) {
  VerifyOptions vo;
  vo.grid = grid_of(o);
  vo.trials = o.trials;
  vo.seed = o.seed;
  vo.sampler.order = o.order;
  std::vector<VerificationReport> reports;
  if (!o.suite.empty()) {
    if (o.suite == "default") {
      reports = run_suite(default_suite(), vo);
    } else if (o.suite == "smoke") {
      reports = run_suite(smoke_suite(), vo);
    } else {
      throw CLI::ValidationError("--suite must be default or smoke");
    }
  } else {
    if (o.result.empty()) throw CLI::ValidationError("verify needs --suite or --result");
    if (!o.beta) throw CLI::ValidationError("--beta is required");
    vo.sampler.amplitude_span = o.amplitude_span;
    reports.push_back(verify(ResultId::parse(o.result), params_of(o), vo));
  }
  int violations = 0;
  for (const auto& r : reports) violations += r.implication_violations;
  if (o.format == "csv") {
    emit(o.out, reports_to_csv(reports));
  } else if (o.format == "text") {
    std::ostringstream s;
    for (const auto& r : reports)
      s << r.result_id << " beta=" << fmt(r.params.beta) << " n=" << r.params.n << " mu=" << fmt(r.params.mu)
        << " premise_pass=" << r.premise_pass << "/" << r.accepted << " violations=" << r.implication_violations
        << "\n";
    emit(o.out, s.str());
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    emit(o.out, Json{{"seed", o.seed}, {"trials", o.trials}, {"reports", arr}}.dump(2) + "\n");
  }
  return violations > 0 ? kExitFail : kExitOk;
}

int cmd_admissibility(const Options& o) {
  if (!o.beta) throw CLI::ValidationError("--beta is required");
  const PsiSpec spec = PsiSpec::make(lemma_from_string(o.lemma), params_of(o));
  const auto grid = default_rho_grid();
  int skipped = 0;
  const auto pts = scan_points(spec, grid, o.depth, &skipped);
  const ScanResult res = boundary_scan(spec, grid, o.depth);
  std::ostringstream s;
  s << "rho,sigma,re_psi\n";
  for (const auto& p : pts) s << fmt(p.rho) << "," << fmt(p.sigma) << "," << fmt(p.re_psi) << "\n";
  emit(o.out, s.str());
  std::cerr << "max Re psi = " << fmt(res.max_re) << " at rho = " << fmt(res.argmax_rho)
            << ", sigma = " << fmt(res.argmax_sigma) << " (" << res.evaluated << " points, " << skipped
            << " poles skipped)\n";
  return res.max_re <= o.tol ? kExitOk : kExitFail;
}

int cmd_hunt(const Options& o) {
  if (o.result.empty()) throw CLI::ValidationError("hunt needs --result");
  if (!o.beta) throw CLI::ValidationError("--beta is required");
  HuntSpec spec;
  spec.result_id = ResultId::parse(o.result);
  spec.budget = o.budget;
  const ParameterSet p = params_of(o);
  HuntOptions ho;
  ho.search_grid.radii = o.radii;
  ho.search_grid.tolerance = o.tol;
  ho.search_grid.validate();
  ho.sampler.order = o.order;

  std::vector<double> eps = o.epsilon;
  std::sort(eps.begin(), eps.end());
  Json runs = Json::array();
  std::optional<double> smallest;
  for (double e : eps) {
    spec.epsilon = e;
    const HuntResult r = hunt(spec, p, o.seed, ho);
    runs.push_back(hunt_to_json(spec, p, r));
    if (!r.witnesses.empty() && !smallest) smallest = e;
  }
  Json out{{"result_id", spec.result_id.str()},
           {"seed", o.seed},
           {"smallest_witness_epsilon", smallest ? Json(*smallest) : Json(nullptr)},
           {"runs", runs}};
  emit(o.out, out.dump(2) + "\n");
  return smallest ? kExitFail : kExitOk;
}

void add_params(CLI::App* c, Options& o, bool need_beta) {
  c->add_option("--alpha", o.alpha, "alpha");
  auto* beta = c->add_option("--beta", o.beta, "beta (order of the conclusion half-plane)");
  if (need_beta) beta->required();
  c->add_option("--gamma", o.gamma, "gamma");
  c->add_option("--n", o.n, "index of the first free coefficient")->check(CLI::PositiveNumber);
  auto* mu = c->add_option("--mu", o.mu, "fixed coefficient of p");
  c->add_option("--b", o.b, "fixed coefficient of f")->excludes(mu);
}

void add_grid(CLI::App* c, Options& o) {
  c->add_option("--radii", o.radii, "sample radii")->delimiter(',');
  c->add_option("--angles", o.angles, "angles per radius");
  c->add_option("--tol", o.tol, "strictness tolerance");
  c->add_option("--order", o.order, "series truncation order");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential subordination thresholds, checks and verification runs"};
  app.require_subcommand(1);
  Options o;

  auto* th = app.add_subcommand("threshold", "print delta_1..delta_4, lemma thresholds and sigma_max");
  add_params(th, o, true);
  th->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  th->add_option("--out", o.out, "output path (stdout if omitted)");

  auto* ck = app.add_subcommand("check", "decide starlikeness or one result's implication for a stored member");
  ck->add_option("--member", o.member, "member JSON file")->required();
  ck->add_option("--starlike", o.starlike, "order of starlikeness to test");
  ck->add_option("--result", o.result, "L2_x or T2_x:index");
  add_params(ck, o, false);
  add_grid(ck, o);
  ck->add_option("--out", o.out, "output path");

  auto* vf = app.add_subcommand("verify", "sample members and count implication violations");
  vf->add_option("--suite", o.suite, "default or smoke");
  vf->add_option("--result", o.result, "L2_x or T2_x:index");
  add_params(vf, o, false);
  add_grid(vf, o);
  vf->add_option("--trials", o.trials, "trials per cell")->check(CLI::PositiveNumber);
  vf->add_option("--seed", o.seed, "master seed");
  vf->add_option("--amplitude-span", o.amplitude_span, "spread tail amplitudes over this many decades")
      ->check(CLI::NonNegativeNumber);
  vf->add_option("--out", o.out, "output path");
  vf->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* ad = app.add_subcommand("admissibility", "scan Re psi(i rho, sigma) below the boundary, CSV output");
  ad->add_option("--lemma", o.lemma, "L2_4 .. L2_9")->required();
  add_params(ad, o, true);
  ad->add_option("--depth", o.depth, "sigma steps below the boundary");
  ad->add_option("--tol", o.tol, "admissibility tolerance");
  ad->add_option("--out", o.out, "CSV path");

  auto* hu = app.add_subcommand("hunt", "search for members violating a weakened implication");
  hu->add_option("--result", o.result, "L2_x or T2_x:index")->required();
  add_params(hu, o, true);
  hu->add_option("--epsilon", o.epsilon, "threshold weakening (repeatable)")->delimiter(',');
  hu->add_option("--budget", o.budget, "member evaluations per epsilon")->check(CLI::PositiveNumber);
  hu->add_option("--seed", o.seed, "master seed");
  hu->add_option("--radii", o.radii, "sample radii")->delimiter(',');
  hu->add_option("--tol", o.tol, "strictness tolerance");
  hu->add_option("--order", o.order, "series truncation order");
  hu->add_option("--out", o.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*th) return cmd_threshold(o);
    if (*ck) return cmd_check(o);
    if (*vf) return cmd_verify(o);
    if (*ad) return cmd_admissibility(o);
    if (*hu) return cmd_hunt(o);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
