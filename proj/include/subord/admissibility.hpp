#pragma once

#include <span>
#include <vector>

#include "subord/expressions.hpp"
#include "subord/function_classes.hpp"

namespace subord {

// The lemma's threshold delta for the given parameters (range-checked).
double lemma_delta(Lemma lemma, const ParameterSet& params);

// psi(r, s) from the proof of a lemma, written in q = (p - beta)/(1 - beta).
struct PsiSpec {
  Lemma lemma = Lemma::L2_5;
  ParameterSet params;
  double delta = 0.0;
  double delta_offset = 0.0;  // nonzero only for deliberately perturbed specs

  static PsiSpec make(Lemma lemma, const ParameterSet& params);
  // Same lemma with delta replaced by delta + offset.
  PsiSpec with_delta_offset(double offset) const;
  // Recomputes delta from the thresholds and checks it against the stored one.
  void validate() const;
};

// Throws PoleHit within 1e-12 of a pole of psi.
Complex psi_eval(const PsiSpec& spec, Complex r, Complex s);

// Symmetric rho grid, uniform in tanh(rho/scale) with |rho| <= cap; always
// contains rho = 0.
std::vector<double> default_rho_grid(int points = 400, double cap = 50.0);

struct ScanPoint {
  double rho;
  double sigma;
  double re_psi;
};

struct ScanResult {
  double max_re = 0.0;
  double argmax_rho = 0.0;
  double argmax_sigma = 0.0;
  int evaluated = 0;
  int skipped_poles = 0;
};

// Re psi(i rho, sigma) for sigma = sigma_max(rho) * (1 + k/depth), k = 0..depth.
// Points that hit a pole are skipped and counted. Refuses beta > 1.
std::vector<ScanPoint> scan_points(const PsiSpec& spec, std::span<const double> rho_grid, int depth,
                                   int* skipped_poles = nullptr);
ScanResult boundary_scan(const PsiSpec& spec, std::span<const double> rho_grid, int depth = 4);

}  // namespace subord
