#include "subord/report.hpp"

#include <cmath>
#include <cstdio>

#include "subord/errors.hpp"

namespace subord {

namespace {

Json complex_pair(Complex c) { return Json::array({c.real(), c.imag()}); }

Json real_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string fmt(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

Json member_to_json(const ClassSpec& spec, const LaurentSeries& member) {
  Json j;
  j["family"] = to_string(spec.family);
  j["n"] = spec.n;
  j[spec.family == Family::H ? "mu" : "b"] = spec.fixed;
  const LaurentSeries m = member.low_exp() == spec.low_exp() ? member : member.lowered_to(spec.low_exp());
  Json cs = Json::array();
  for (const Complex c : m.coeffs()) cs.push_back(complex_pair(c));
  j["coeffs"] = std::move(cs);
  j["order"] = m.order();
  return j;
}

LaurentSeries member_from_json(const Json& j, ClassSpec* spec_out) {
  ClassSpec spec;
  std::vector<Complex> cs;
  try {
    spec.family = family_from_string(j.at("family").get<std::string>());
    spec.n = j.at("n").get<int>();
    spec.fixed = j.at(spec.family == Family::H ? "mu" : "b").get<double>();
    for (const auto& c : j.at("coeffs")) {
      if (!c.is_array() || c.size() != 2) throw Error(ErrorCode::ParseError, "coefficient must be [re, im]");
      cs.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(cs.size()) - 1)
      throw Error(ErrorCode::ParseError, "order does not match the number of coefficients");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("member descriptor: ") + e.what());
  }
  spec.validate();
  if (cs.empty()) throw Error(ErrorCode::ParseError, "member has no coefficients");
  LaurentSeries m(spec.low_exp(), std::move(cs));
  if (std::abs(m.coeff(spec.low_exp()) - 1.0) > 1e-12)
    throw Error(ErrorCode::ParseError, "leading coefficient must be 1");
  if (spec.fixed_exp() <= m.high_exp() && std::abs(m.coeff(spec.fixed_exp()) - spec.fixed) > 1e-12)
    throw Error(ErrorCode::ParseError, "fixed coefficient disagrees with the stated b/mu");
  for (int k = spec.low_exp() + 1; k < spec.fixed_exp() && k <= m.high_exp(); ++k)
    if (std::abs(m.coeff(k)) > 1e-12) throw Error(ErrorCode::ParseError, "coefficients below the fixed one must vanish");
  if (spec_out) *spec_out = spec;
  return m;
}

Json params_to_json(const ParameterSet& p) {
  return Json{{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"n", p.n}, {"mu", p.mu}};
}

Json witness_to_json(const Witness& w) {
  return Json{{"member", member_to_json(w.spec, w.member)},
              {"premise_margin", real_or_null(w.premise_margin)},
              {"conclusion_margin", real_or_null(w.conclusion_margin)},
              {"conclusion_point", complex_pair(w.conclusion_point)},
              {"objective", real_or_null(w.objective)},
              {"seed", w.seed}};
}

Json report_to_json(const VerificationReport& r) {
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_to_json(w));
  return Json{{"result_id", r.result_id},
              {"params", params_to_json(r.params)},
              {"delta", real_or_null(r.delta)},
              {"trials", r.trials},
              {"sampling_failures", r.sampling_failures},
              {"excluded", r.excluded},
              {"accepted", r.accepted},
              {"premise_pass", r.premise_pass},
              {"premise_poles", r.premise_poles},
              {"implication_violations", r.implication_violations},
              {"inconclusive", r.inconclusive},
              {"worst_margin_pair", Json::array({real_or_null(r.worst_premise_margin),
                                                 real_or_null(r.worst_conclusion_margin)})},
              {"labeling", Json{{"stated", Json{{"n", r.stated_n}, {"mu", r.stated_mu}}},
                                {"effective", Json{{"n", r.effective_n}, {"mu", r.effective_mu}}},
                                {"mismatches", r.signature_mismatches}}},
              {"certified_close_to_convex", r.certified_close_to_convex},
              {"annotations", r.annotations},
              {"witnesses", std::move(ws)}};
}

Json hunt_to_json(const HuntSpec& spec, const ParameterSet& params, const HuntResult& r) {
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_to_json(w));
  return Json{{"result_id", spec.result_id.str()},
              {"params", params_to_json(params)},
              {"epsilon", spec.epsilon},
              {"budget", spec.budget},
              {"evaluations", r.evaluations},
              {"restarts", r.restarts},
              {"best_objective", real_or_null(r.best_objective)},
              {"status", r.witnesses.empty() ? "no witness" : "witness"},
              {"witnesses", std::move(ws)}};
}

std::string csv_header() {
  return "result_id,alpha,beta,gamma,n,mu,delta,trials,accepted,premise_pass,violations,inconclusive,"
         "min_premise_margin,min_conclusion_margin\n";
}

std::string csv_row(const VerificationReport& r) {
  std::string s = r.result_id;
  for (double v : {r.params.alpha, r.params.beta, r.params.gamma}) s += "," + fmt(v);
  s += "," + std::to_string(r.params.n) + "," + fmt(r.params.mu) + "," + fmt(r.delta);
  for (int v : {r.trials, r.accepted, r.premise_pass, r.implication_violations, r.inconclusive})
    s += "," + std::to_string(v);
  s += "," + fmt(r.worst_premise_margin) + "," + fmt(r.worst_conclusion_margin) + "\n";
  return s;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::string s = csv_header();
  for (const auto& r : reports) s += csv_row(r);
  return s;
}

}  // namespace subord
