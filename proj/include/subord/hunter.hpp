#pragma once

#include <cstdint>
#include <vector>

#include "subord/verify.hpp"

namespace subord {

struct HuntSpec {
  ResultId result_id;
  double epsilon = 0.0;  // delta -> delta - epsilon * sign(1 - beta)
  int budget = 10000;    // member evaluations, all restarts included
  int refine_steps = 6;  // step halvings per restart
  void validate() const;
};

struct HuntOptions {
  // Search grid; candidates are re-checked on search_grid.refined(4).
  SampleGrid search_grid{{0.5, 0.9, 0.99, 0.999}, 180, 1e-9};
  SamplerConfig sampler;
  // Truncation order of the extremal seeds (their tails decay slowly).
  int seed_order = 800;
};

struct HuntResult {
  std::vector<Witness> witnesses;  // sorted by objective (desc), then seed
  int evaluations = 0;
  int restarts = 0;
  double best_objective = 0.0;
};

// Solves p + gamma z p' = h coefficientwise: p_0 = 1, p_k = h_k / (1 + gamma k).
LaurentSeries extremal_solve(const LaurentSeries& h, double gamma);

// Extremal candidate for results whose premise is p + gamma z p' (or reduces to it),
// sized so its premise image touches the (weakened) half-plane. Empty when no
// such member exists inside the disk.
std::vector<LaurentSeries> extremal_seeds(const ResultId& id, const ParameterSet& params, double epsilon, int order);

HuntResult hunt(const HuntSpec& spec, const ParameterSet& params, std::uint64_t seed, const HuntOptions& opts = {});

// Runs hunt for each epsilon in increasing order and returns the first one
// that produced a witness, or a negative value if none did.
double smallest_witness_epsilon(HuntSpec spec, const ParameterSet& params, std::uint64_t seed,
                                std::vector<double> epsilons, const HuntOptions& opts = {});

}  // namespace subord
