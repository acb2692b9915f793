#pragma once

#include "subord/function_classes.hpp"

namespace subord {

// Every threshold below is built from K = n + (2-mu)/(2+mu).
double bracket_k(int n, double mu);

// Upper bound on sigma in the admissibility condition at a given rho:
// -(1/2) K (1 + rho^2).
double sigma_max(double rho, int n, double mu);

// (1-alpha) p + alpha p^2 + gamma z p'
double delta_quadratic(double alpha, double beta, double gamma, int n, double mu);
// p + gamma z p'
double delta_linear(double beta, double gamma, int n, double mu);
// p + alpha z p'/p, branches at beta = 1/2
double delta_logderiv_mixed(double alpha, double beta, int n, double mu);
// z p'/p against the scaled target, branches at beta = 1/2
double delta_logderiv_pure(double beta, int n, double mu);
// p + z p'/(alpha p + gamma), branches at gamma = alpha (1 - 2 beta)
double delta_briot_bouquet(double alpha, double beta, double gamma, int n, double mu);
// p^2 + gamma z p'
double delta_square(double beta, double gamma, int n, double mu);

enum class ThresholdVariant { Analytic, Meromorphic };

struct ThresholdSet {
  double delta1 = 0.0;
  double delta2 = 0.0;
  double delta3 = 0.0;
  double delta4 = 0.0;
  ThresholdVariant variant = ThresholdVariant::Analytic;

  double operator[](int index) const;  // 1-based
};

// delta_1..delta_4 for the four starlikeness/convexity premises. Uses alpha
// and beta from params; gamma is implied (alpha for delta_1, 1 for delta_2).
ThresholdSet threshold_set(const ParameterSet& params, ThresholdVariant variant);

}  // namespace subord
