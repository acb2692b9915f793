#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subord/halfplane.hpp"
#include "subord/series.hpp"

namespace subord {

// A:     f = z + b z^{n+1} + ...        (b >= 0)
// Sigma: f = 1/z + b z^n + ...          (b <= 0)
// H:     p = 1 + mu z^n + ...           (mu >= 0)
enum class Family { A, Sigma, H };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

struct ClassSpec {
  Family family = Family::H;
  int n = 1;
  double fixed = 0.0;  // b for A and Sigma, mu for H

  void validate() const;
  // Exponent carrying the fixed coefficient and the first free one.
  int fixed_exp() const;
  int low_exp() const;
};

// (alpha, beta, gamma, n, mu). K = n + (2-mu)/(2+mu) is always derived.
struct ParameterSet {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 1.0;
  int n = 1;
  double mu = 0.0;

  double K() const { return n + (2.0 - mu) / (2.0 + mu); }
  // beta != 1 (tolerance 1e-9), n >= 1, mu in [0, 2].
  void validate() const;
};

LaurentSeries make_member(const ClassSpec& spec, std::span<const Complex> tail, int order = kDefaultOrder);

struct SamplerConfig {
  double decay = 0.5;
  double test_radius = 0.95;
  int tail_terms = 12;
  int max_attempts = 500;
  double floor = 1e-3;
  int angles = 720;
  int order = kDefaultOrder;
  // Each draw is scaled by 10^(-amplitude_span * U), U uniform on [0,1).
  double amplitude_span = 0.0;
  // Also require zero winding number on the test circle, i.e. no zeros inside
  // it, instead of only the modulus floor at the sampled points.
  bool zero_free = false;
};

struct ZeroFreeCheck {
  bool ok = false;
  double min_modulus = 0.0;
  int winding = 0;
};

// Nonvanishing of g on the closed disk |z| <= r, judged from samples on the
// circle |z| = r: zero winding number (no interior zeros) and a modulus floor
// (the minimum of |g| over the disk sits on the circle).
ZeroFreeCheck zero_free_on_circle(std::span<const Complex> circle_values, double floor);

// Modulus floor on the circle |z| = radius for f/z and f' (A), z f and z^2 f'
// (Sigma) or p (H); with zero_free also no zeros inside the circle.
bool member_admissible(const ClassSpec& spec, const LaurentSeries& member, double radius, int angles, double floor,
                       bool zero_free = true);

// Deterministic random member; throws RejectionBudgetExhausted.
LaurentSeries sample_member(const ClassSpec& spec, std::uint64_t seed, const SamplerConfig& cfg = {});

// Starlikeness of order beta (beta < 1) or membership in M(beta) (beta > 1),
// decided from zf'/f on the grid.
SubordinationResult classify_starlike(const LaurentSeries& f, double beta, const SampleGrid& grid = {});

}  // namespace subord
