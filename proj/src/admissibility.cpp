#include "subord/admissibility.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "subord/errors.hpp"
#include "subord/thresholds.hpp"

namespace subord {

double lemma_delta(Lemma lemma, const ParameterSet& p) {
  switch (lemma) {
    case Lemma::L2_4: return delta_quadratic(p.alpha, p.beta, p.gamma, p.n, p.mu);
    case Lemma::L2_5: return delta_linear(p.beta, p.gamma, p.n, p.mu);
    case Lemma::L2_6: return delta_logderiv_mixed(p.alpha, p.beta, p.n, p.mu);
    case Lemma::L2_7: return delta_logderiv_pure(p.beta, p.n, p.mu);
    case Lemma::L2_8: return delta_briot_bouquet(p.alpha, p.beta, p.gamma, p.n, p.mu);
    case Lemma::L2_9: return delta_square(p.beta, p.gamma, p.n, p.mu);
  }
  throw Error(ErrorCode::DomainError, "unknown lemma");
}

PsiSpec PsiSpec::make(Lemma lemma, const ParameterSet& params) {
  params.validate();
  return PsiSpec{lemma, params, lemma_delta(lemma, params), 0.0};
}

PsiSpec PsiSpec::with_delta_offset(double offset) const {
  PsiSpec s = *this;
  s.delta_offset += offset;
  s.delta += offset;
  return s;
}

void PsiSpec::validate() const {
  const double expected = lemma_delta(lemma, params) + delta_offset;
  if (std::abs(expected - delta) > 1e-12 * std::max(1.0, std::abs(expected)))
    throw Error(ErrorCode::DomainError, "psi delta " + std::to_string(delta) + " does not match threshold " +
                                            std::to_string(expected));
}

namespace {

Complex checked_inverse(Complex den) {
  if (std::abs(den) < 1e-12) throw Error(ErrorCode::PoleHit, "psi evaluated at its pole");
  return 1.0 / den;
}

}  // namespace

Complex psi_eval(const PsiSpec& spec, Complex r, Complex s) {
  const double a = spec.params.alpha;
  const double b = spec.params.beta;
  const double g = spec.params.gamma;
  const double d = spec.delta;
  const double c = 1.0 - b;
  switch (spec.lemma) {
    case Lemma::L2_4: return c * (1.0 - a + 2.0 * a * b) * r + a * c * c * r * r + g * c * s + (1.0 - a) * b + a * b * b - d;
    case Lemma::L2_5: return c * r + g * c * s + b - d;
    case Lemma::L2_6: return c * r + a * c * s * checked_inverse(c * r + b) + b - d;
    case Lemma::L2_7: return c * s * checked_inverse(c * r + b) - d;
    case Lemma::L2_8: return c * r + c * s * checked_inverse(a * c * r + a * b + g) + b - d;
    case Lemma::L2_9: {
      const Complex t = c * r + b;
      return t * t + g * c * s - d;
    }
  }
  throw Error(ErrorCode::DomainError, "unknown lemma");
}

std::vector<double> default_rho_grid(int points, double cap) {
  const double scale = cap / 3.0;
  const double vmax = std::tanh(cap / scale);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(points) + 1);
  bool has_zero = false;
  for (int j = 0; j < points; ++j) {
    const double v = -vmax + 2.0 * vmax * j / (points - 1);
    double rho = scale * std::atanh(v);
    if (std::abs(rho) < 1e-14) rho = 0.0;
    has_zero = has_zero || rho == 0.0;
    out.push_back(rho);
  }
  if (!has_zero) out.insert(out.begin() + points / 2, 0.0);
  return out;
}

std::vector<ScanPoint> scan_points(const PsiSpec& spec, std::span<const double> rho_grid, int depth,
                                   int* skipped_poles) {
  spec.validate();
  if (spec.params.beta > 1.0)
    throw Error(ErrorCode::DomainError, "admissibility scan is defined for beta < 1 only");
  if (depth < 0) throw Error(ErrorCode::DomainError, "depth must be nonnegative");
  std::vector<ScanPoint> out;
  int skipped = 0;
  for (double rho : rho_grid) {
    const double edge = sigma_max(rho, spec.params.n, spec.params.mu);
    for (int k = 0; k <= depth; ++k) {
      const double sigma = depth == 0 ? edge : edge * (1.0 + static_cast<double>(k) / depth);
      try {
        out.push_back({rho, sigma, psi_eval(spec, Complex{0.0, rho}, Complex{sigma, 0.0}).real()});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PoleHit) throw;
        ++skipped;
      }
    }
  }
  if (skipped_poles) *skipped_poles = skipped;
  return out;
}

ScanResult boundary_scan(const PsiSpec& spec, std::span<const double> rho_grid, int depth) {
  ScanResult res;
  const auto pts = scan_points(spec, rho_grid, depth, &res.skipped_poles);
  res.max_re = -std::numeric_limits<double>::infinity();
  for (const auto& p : pts) {
    if (p.re_psi > res.max_re) {
      res.max_re = p.re_psi;
      res.argmax_rho = p.rho;
      res.argmax_sigma = p.sigma;
    }
  }
  res.evaluated = static_cast<int>(pts.size());
  return res;
}

}  // namespace subord
