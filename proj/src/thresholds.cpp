#include "subord/thresholds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "subord/errors.hpp"

namespace subord {

namespace {

void require_mu_n(int n, double mu) {
  if (n < 1) throw Error(ErrorCode::DomainError, "n must be >= 1");
  if (!(mu >= 0.0 && mu <= 2.0)) throw Error(ErrorCode::DomainError, "mu = " + std::to_string(mu) + " not in [0,2]");
}

void require_beta(double beta) {
  if (std::abs(beta - 1.0) < 1e-9) throw Error(ErrorCode::DomainError, "beta must differ from 1");
}

// Both sides are evaluated at the branch point; disagreement means a
// transcription bug, not a numerical issue.
template <typename Left, typename Right>
double at_branch_point(Left left, Right right) {
  const double l = left();
  const double r = right();
  if (std::abs(l - r) > 1e-12 * std::max(1.0, std::abs(l)))
    throw std::logic_error("threshold branches disagree at the branch point: " + std::to_string(l) + " vs " +
                           std::to_string(r));
  return 0.5 * (l + r);
}

double quadratic_formula(double alpha, double beta, double gamma, double k) {
  return -(gamma / 2.0) * (1.0 - beta) * k + (1.0 - alpha) * beta + alpha * beta * beta;
}

double mixed_formula(double alpha, double beta, double k) {
  auto low = [&] { return -alpha * beta * k / (2.0 * (1.0 - beta)) + beta; };
  auto high = [&] { return -alpha * (1.0 - beta) * k / (2.0 * beta) + beta; };
  if (beta == 0.5) return at_branch_point(low, high);
  return beta < 0.5 ? low() : high();
}

double pure_formula(double beta, double k) {
  auto low = [&] { return -beta * k / (2.0 * (1.0 - beta)); };
  auto high = [&] { return -(1.0 - beta) * k / (2.0 * beta); };
  if (beta == 0.5) return at_branch_point(low, high);
  return beta < 0.5 ? low() : high();
}

}  // namespace

double bracket_k(int n, double mu) { return n + (2.0 - mu) / (2.0 + mu); }

double sigma_max(double rho, int n, double mu) {
  require_mu_n(n, mu);
  return -0.5 * bracket_k(n, mu) * (1.0 + rho * rho);
}

double delta_quadratic(double alpha, double beta, double gamma, int n, double mu) {
  require_mu_n(n, mu);
  require_beta(beta);
  if (!(gamma > 0.0)) throw Error(ErrorCode::DomainError, "gamma must be positive");
  if (alpha < 0.0) throw Error(ErrorCode::DomainError, "alpha must be nonnegative");
  return quadratic_formula(alpha, beta, gamma, bracket_k(n, mu));
}

double delta_linear(double beta, double gamma, int n, double mu) {
  require_mu_n(n, mu);
  require_beta(beta);
  if (!(gamma > 0.0)) throw Error(ErrorCode::DomainError, "gamma must be positive");
  return -(gamma / 2.0) * (1.0 - beta) * bracket_k(n, mu) + beta;
}

double delta_logderiv_mixed(double alpha, double beta, int n, double mu) {
  require_mu_n(n, mu);
  require_beta(beta);
  if (!(alpha > 0.0)) throw Error(ErrorCode::DomainError, "alpha must be positive");
  return mixed_formula(alpha, beta, bracket_k(n, mu));
}

double delta_logderiv_pure(double beta, int n, double mu) {
  require_mu_n(n, mu);
  require_beta(beta);
  return pure_formula(beta, bracket_k(n, mu));
}

double delta_briot_bouquet(double alpha, double beta, double gamma, int n, double mu) {
  require_mu_n(n, mu);
  require_beta(beta);
  if (!(alpha > 0.0)) throw Error(ErrorCode::DomainError, "alpha must be positive");
  const double shift = alpha * beta + gamma;
  if (std::abs(shift) < 1e-12) throw Error(ErrorCode::DomainError, "alpha*beta + gamma = 0 puts a pole in psi");
  const double k = bracket_k(n, mu);
  auto wide = [&] { return -0.5 * (1.0 - beta) * k / shift + beta; };
  auto narrow = [&] { return -0.5 * shift * k / (alpha * alpha * (1.0 - beta)) + beta; };
  const double split = alpha * (1.0 - 2.0 * beta);
  if (gamma == split) return at_branch_point(wide, narrow);
  return gamma > split ? wide() : narrow();
}

double delta_square(double beta, double gamma, int n, double mu) {
  require_mu_n(n, mu);
  require_beta(beta);
  if (!(gamma > 0.0)) throw Error(ErrorCode::DomainError, "gamma must be positive");
  return -(gamma / 2.0) * (1.0 - beta) * bracket_k(n, mu) + beta * beta;
}

double ThresholdSet::operator[](int index) const {
  switch (index) {
    case 1: return delta1;
    case 2: return delta2;
    case 3: return delta3;
    case 4: return delta4;
  }
  throw Error(ErrorCode::DomainError, "premise index must be 1..4");
}

ThresholdSet threshold_set(const ParameterSet& params, ThresholdVariant variant) {
  params.validate();
  if (params.alpha < 0.0) throw Error(ErrorCode::DomainError, "alpha must be nonnegative");
  const double a = params.alpha;
  const double b = params.beta;
  const double k = params.K();
  ThresholdSet t;
  t.variant = variant;
  t.delta4 = pure_formula(b, k);
  if (variant == ThresholdVariant::Analytic) {
    t.delta1 = quadratic_formula(a, b, a, k);
    t.delta2 = -0.5 * (1.0 - b) * k + b;
    t.delta3 = mixed_formula(a, b, k);
  } else {
    // Same expressions with the K-term entering with a plus sign.
    t.delta1 = (a / 2.0) * (1.0 - b) * k + (1.0 - a) * b + a * b * b;
    t.delta2 = 0.5 * (1.0 - b) * k + b;
    t.delta3 = 2.0 * b - mixed_formula(a, b, k);
  }
  return t;
}

}  // namespace subord
