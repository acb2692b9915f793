#include "subord/halfplane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "subord/errors.hpp"

namespace subord {

double HalfPlaneTarget::signed_distance(Complex w) const {
  switch (orientation) {
    case Orientation::GreaterThan: return w.real() - abscissa;
    case Orientation::LessThan: return abscissa - w.real();
    case Orientation::Degenerate: return -std::abs(w);
  }
  return -std::numeric_limits<double>::infinity();
}

HalfPlaneTarget target_from_cayley(double c) {
  if (std::abs(c - 1.0) < 1e-12) throw Error(ErrorCode::Degenerate, "Cayley map with c = 1 is constant");
  return {c, c < 1.0 ? Orientation::GreaterThan : Orientation::LessThan, TargetSource::Cayley};
}

HalfPlaneTarget target_from_scaled(double delta) {
  // -2*delta*z/(1-z) maps the disk onto Re w > delta for delta < 0 and
  // onto Re w < delta for delta > 0.
  if (delta == 0.0) return {0.0, Orientation::Degenerate, TargetSource::Scaled};
  return {delta, delta < 0.0 ? Orientation::GreaterThan : Orientation::LessThan, TargetSource::Scaled};
}

void SampleGrid::validate() const {
  if (radii.empty()) throw Error(ErrorCode::DomainError, "grid needs at least one radius");
  for (double r : radii)
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::DomainError, "grid radius " + std::to_string(r) + " not in (0,1)");
  if (angles < 8) throw Error(ErrorCode::DomainError, "grid needs at least 8 angles");
  if (!(tolerance >= 0.0)) throw Error(ErrorCode::DomainError, "negative tolerance");
}

double SampleGrid::max_radius() const { return *std::max_element(radii.begin(), radii.end()); }

std::vector<Complex> SampleGrid::points() const {
  validate();
  std::vector<Complex> out;
  out.reserve(radii.size() * static_cast<std::size_t>(angles));
  for (double r : radii)
    for (int j = 0; j < angles; ++j)
      out.push_back(std::polar(r, 2.0 * std::numbers::pi * j / angles));
  return out;
}

SampleGrid SampleGrid::refined(int factor) const {
  SampleGrid g = *this;
  g.angles *= factor;
  return g;
}

SampleGrid SampleGrid::restricted(double r) const {
  SampleGrid g = *this;
  std::erase_if(g.radii, [r](double x) { return x > r; });
  return g;
}

SubordinationResult check_samples(std::span<const Complex> values, std::span<const Complex> points, Complex center,
                                  const HalfPlaneTarget& target, double tol) {
  if (std::abs(center - target.center()) > 1e-9)
    throw Error(ErrorCode::CenterMismatch, "w(0) = (" + std::to_string(center.real()) + ", " +
                                               std::to_string(center.imag()) + ")");
  SubordinationResult res;
  res.margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i) {
    double d = target.signed_distance(values[i]);
    if (!std::isfinite(d)) d = -std::numeric_limits<double>::infinity();
    if (d < res.margin) {
      res.margin = d;
      res.witness = points[i];
    }
  }
  const bool ok = target.orientation == Orientation::Degenerate ? -res.margin <= tol : res.margin > tol;
  res.verdict = ok ? Verdict::True : Verdict::False;
  return res;
}

SubordinationResult check_subordination(const LaurentSeries& w, const HalfPlaneTarget& target,
                                        const SampleGrid& grid) {
  if (w.low_exp() < 0) throw Error(ErrorCode::DomainError, "subordinand has a pole at the origin");
  const auto pts = grid.points();
  std::vector<Complex> vals(pts.size());
  std::transform(pts.begin(), pts.end(), vals.begin(), [&](Complex z) { return evaluate(w, z); });
  auto res = check_samples(vals, pts, evaluate(w, Complex{}), target, grid.tolerance);
  res.tail = tail_bound(w, grid.max_radius());
  if (!(res.tail < grid.tolerance / 10.0)) res.verdict = Verdict::Inconclusive;
  return res;
}

SubordinationResult check_subordination(const std::function<Complex(Complex)>& w, Complex center,
                                        const HalfPlaneTarget& target, const SampleGrid& grid) {
  const auto pts = grid.points();
  std::vector<Complex> vals(pts.size());
  std::transform(pts.begin(), pts.end(), vals.begin(), w);
  return check_samples(vals, pts, center, target, grid.tolerance);
}

}  // namespace subord
