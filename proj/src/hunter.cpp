#include "subord/hunter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "subord/admissibility.hpp"
#include "subord/errors.hpp"
#include "subord/rng.hpp"

namespace subord {

void HuntSpec::validate() const {
  if (!(epsilon >= 0.0)) throw Error(ErrorCode::DomainError, "epsilon must be nonnegative");
  if (budget < 1) throw Error(ErrorCode::DomainError, "budget must be at least 1");
  if (refine_steps < 0) throw Error(ErrorCode::DomainError, "refine_steps must be nonnegative");
  if (!result_id.is_lemma) result_id.premise.validate();
}

LaurentSeries extremal_solve(const LaurentSeries& h, double gamma) {
  if (h.low_exp() < 0) throw Error(ErrorCode::DomainError, "extremal_solve needs an analytic h");
  std::vector<Complex> cs(static_cast<std::size_t>(h.high_exp() + 1));
  cs[0] = 1.0;
  for (int k = 1; k <= h.high_exp(); ++k) cs[static_cast<std::size_t>(k)] = h.coeff(k) / (1.0 + gamma * k);
  return LaurentSeries(0, std::move(cs));
}

std::vector<LaurentSeries> extremal_seeds(const ResultId& id, const ParameterSet& params, double epsilon, int order) {
  double gamma = 0.0;
  double delta = 0.0;
  bool integrate = false;  // p = f' for the derivative premise
  if (id.is_lemma && id.lemma == Lemma::L2_5) {
    gamma = params.gamma;
    delta = delta_linear(params.beta, gamma, params.n, params.mu);
  } else if (!id.is_lemma && id.premise.theorem == Theorem::T2_3 && id.premise.index == 2) {
    gamma = 1.0;
    delta = threshold_set(params, ThresholdVariant::Analytic).delta2;
    integrate = true;
  } else {
    return {};
  }
  delta -= epsilon * (params.beta < 1.0 ? 1.0 : -1.0);
  if (!(delta < 1.0) || gamma <= 0.0 || params.mu <= 0.0) return {};

  // h(z) = (1 + (1-2 delta) w)/(1 - w) with w = s z^n, so h_{nj} = 2 (1-delta) s^j
  // and p_n = mu fixes s.
  const int n = params.n;
  const double s = params.mu * (1.0 + gamma * n) / (2.0 * (1.0 - delta));
  if (s >= 1.0) return {};
  std::vector<Complex> hc(static_cast<std::size_t>(order + 1));
  hc[0] = 1.0;
  double sj = s;
  for (int k = n; k <= order; k += n, sj *= s) hc[static_cast<std::size_t>(k)] = 2.0 * (1.0 - delta) * sj;
  LaurentSeries p = extremal_solve(LaurentSeries(0, std::move(hc)), gamma);
  if (!integrate) return {p};

  std::vector<Complex> fc(static_cast<std::size_t>(order + 1));
  for (int k = 0; k <= order; ++k) fc[static_cast<std::size_t>(k)] = p.coeff(k) / static_cast<double>(k + 1);
  return {LaurentSeries(1, std::move(fc))};
}

namespace {

double objective(const TrialOutcome& o) {
  return std::min(o.premise.margin, 0.1) - o.conclusion.margin;
}

}  // namespace

HuntResult hunt(const HuntSpec& spec, const ParameterSet& params, std::uint64_t seed, const HuntOptions& opts) {
  spec.validate();
  const Evaluator ev(spec.result_id, params, opts.search_grid, spec.epsilon);
  const SampleGrid fine = opts.search_grid.refined(4);
  const ClassSpec cls = ev.class_spec();
  const double tol = opts.search_grid.tolerance;
  SamplerConfig cfg = opts.sampler;
  cfg.test_radius = opts.search_grid.max_radius();
  cfg.zero_free = true;

  HuntResult res;
  res.best_objective = -std::numeric_limits<double>::infinity();

  auto score = [&](const LaurentSeries& m) -> std::optional<TrialOutcome> {
    ++res.evaluations;
    // p-level premises check their own denominators; f-level ones need f/z and f' zero-free.
    if (cls.family != Family::H && !member_admissible(cls, m, cfg.test_radius, opts.search_grid.angles, cfg.floor))
      return std::nullopt;
    try {
      TrialOutcome o = ev.evaluate(m);
      res.best_objective = std::max(res.best_objective, objective(o));
      return o;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DomainError && e.code() != ErrorCode::DegenerateConstant) throw;
      return std::nullopt;
    }
  };
  auto accept = [&](const LaurentSeries& m, const TrialOutcome& o, std::uint64_t tag) {
    if (!o.violation(tol)) return false;
    const TrialOutcome f = ev.evaluate_on(m, fine);
    if (!f.violation(tol)) return false;
    res.witnesses.push_back(
        {cls, m, f.premise.margin, f.conclusion.margin, f.conclusion.witness, objective(f), tag});
    return true;
  };

  const auto seeds = extremal_seeds(spec.result_id, params, spec.epsilon, opts.seed_order);
  const int first_free = cls.fixed_exp() + 1;
  const int free_terms = std::max(cfg.tail_terms, 1);

  for (int r = 0; res.evaluations < spec.budget; ++r) {
    const std::uint64_t tag = stream_engine(seed, 0x68756e74ULL, static_cast<std::uint64_t>(r))();
    LaurentSeries member;
    if (r < static_cast<int>(seeds.size())) {
      member = seeds[static_cast<std::size_t>(r)];
    } else {
      try {
        member = sample_member(cls, tag, cfg);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::RejectionBudgetExhausted) throw;
        res.evaluations += cfg.max_attempts;
        continue;
      }
    }
    ++res.restarts;
    auto cur = score(member);
    if (!cur) continue;
    if (accept(member, *cur, tag)) break;

    double step = 0.5;
    bool found = false;
    for (int level = 0; level <= spec.refine_steps && !found && res.evaluations < spec.budget; ++level, step *= 0.5) {
      bool improved = true;
      while (improved && !found && res.evaluations < spec.budget) {
        improved = false;
        for (int i = 0; i < free_terms && !found && res.evaluations < spec.budget; ++i) {
          const int k = first_free + i;
          if (k > member.high_exp()) break;
          const Complex dirs[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
          for (const Complex d : dirs) {
            if (res.evaluations >= spec.budget) break;
            std::vector<Complex> cs(member.coeffs().begin(), member.coeffs().end());
            cs[static_cast<std::size_t>(k - member.low_exp())] += step * std::pow(cfg.decay, k) * d;
            LaurentSeries cand(member.low_exp(), std::move(cs));
            auto o = score(cand);
            if (!o || objective(*o) <= objective(*cur)) continue;
            member = std::move(cand);
            cur = o;
            improved = true;
            if (accept(member, *cur, tag)) found = true;
            break;
          }
        }
      }
    }
    if (found) break;
  }

  std::stable_sort(res.witnesses.begin(), res.witnesses.end(), [](const Witness& a, const Witness& b) {
    if (a.objective != b.objective) return a.objective > b.objective;
    return a.seed < b.seed;
  });
  return res;
}

double smallest_witness_epsilon(HuntSpec spec, const ParameterSet& params, std::uint64_t seed,
                                std::vector<double> epsilons, const HuntOptions& opts) {
  std::sort(epsilons.begin(), epsilons.end());
  for (double e : epsilons) {
    spec.epsilon = e;
    if (!hunt(spec, params, seed, opts).witnesses.empty()) return e;
  }
  return -1.0;
}

}  // namespace subord
