#pragma once

#include <functional>
#include <span>
#include <vector>

#include "subord/series.hpp"

namespace subord {

enum class Orientation { GreaterThan, LessThan, Degenerate };
enum class TargetSource { Cayley, Scaled };

// Image of a half-plane superordinate: either the Cayley-type map
// (1+(1-2c)z)/(1-z) or the scaled map -2*delta*z/(1-z).
struct HalfPlaneTarget {
  double abscissa = 0.0;
  Orientation orientation = Orientation::GreaterThan;
  TargetSource source = TargetSource::Cayley;

  // Value of the superordinate at z = 0.
  Complex center() const { return source == TargetSource::Cayley ? Complex{1.0, 0.0} : Complex{}; }
  // Positive inside the half-plane. For the degenerate target this is -|w|.
  double signed_distance(Complex w) const;
};

HalfPlaneTarget target_from_cayley(double c);
HalfPlaneTarget target_from_scaled(double delta);

struct SampleGrid {
  std::vector<double> radii{0.5, 0.9, 0.99, 0.999};
  int angles = 720;
  double tolerance = 1e-9;

  void validate() const;
  double max_radius() const;
  // Radii outer, angles inner; angle j is 2*pi*j/angles.
  std::vector<Complex> points() const;
  // Same radii, angles multiplied by `factor` (a superset of the original points).
  SampleGrid refined(int factor) const;
  // Drop radii above `r`.
  SampleGrid restricted(double r) const;
};

enum class Verdict { True, False, Inconclusive };

struct SubordinationResult {
  Verdict verdict = Verdict::False;
  double margin = 0.0;  // min signed distance over the grid
  Complex witness;      // grid point realising the margin
  double tail = 0.0;    // truncation estimate (series input only)

  bool holds() const { return verdict == Verdict::True; }
};

// Core decision on precomputed samples. `center` is w(0).
SubordinationResult check_samples(std::span<const Complex> values, std::span<const Complex> points, Complex center,
                                  const HalfPlaneTarget& target, double tol);

// Series route: evaluates the truncated series and refuses a verdict
// (Inconclusive) when the truncated tail at the largest radius exceeds tol/10.
SubordinationResult check_subordination(const LaurentSeries& w, const HalfPlaneTarget& target,
                                        const SampleGrid& grid);

// Pointwise route for expressions that can be evaluated exactly.
SubordinationResult check_subordination(const std::function<Complex(Complex)>& w, Complex center,
                                        const HalfPlaneTarget& target, const SampleGrid& grid);

}  // namespace subord
