#include "subord/function_classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "subord/errors.hpp"
#include "subord/rng.hpp"

namespace subord {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::Sigma: return "Sigma";
    case Family::H: return "H";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "Sigma") return Family::Sigma;
  if (s == "H") return Family::H;
  throw Error(ErrorCode::ParseError, "unknown family '" + s + "'");
}

void ClassSpec::validate() const {
  if (n < 1) throw Error(ErrorCode::DomainError, "n must be a positive integer");
  switch (family) {
    case Family::A:
      if (fixed < 0.0) throw Error(ErrorCode::SignViolation, "family A needs b >= 0");
      break;
    case Family::Sigma:
      if (fixed > 0.0) throw Error(ErrorCode::SignViolation, "family Sigma needs b <= 0");
      break;
    case Family::H:
      if (fixed < 0.0) throw Error(ErrorCode::SignViolation, "family H needs mu >= 0");
      break;
  }
}

int ClassSpec::fixed_exp() const { return family == Family::A ? n + 1 : n; }

int ClassSpec::low_exp() const {
  switch (family) {
    case Family::A: return 1;
    case Family::Sigma: return -1;
    case Family::H: return 0;
  }
  return 0;
}

void ParameterSet::validate() const {
  if (n < 1) throw Error(ErrorCode::DomainError, "n must be a positive integer");
  if (std::abs(beta - 1.0) < 1e-9) throw Error(ErrorCode::DomainError, "beta must differ from 1");
  if (!(mu >= 0.0 && mu <= 2.0)) throw Error(ErrorCode::DomainError, "mu must lie in [0, 2]");
}

LaurentSeries make_member(const ClassSpec& spec, std::span<const Complex> tail, int order) {
  spec.validate();
  const int low = spec.low_exp();
  const int first_free = spec.fixed_exp() + 1;
  const int top = std::max(low + order, first_free + static_cast<int>(tail.size()) - 1);
  std::vector<Complex> cs(static_cast<std::size_t>(top - low + 1));
  cs[0] = 1.0;
  cs[static_cast<std::size_t>(spec.fixed_exp() - low)] = spec.fixed;
  for (std::size_t i = 0; i < tail.size(); ++i) cs[static_cast<std::size_t>(first_free - low) + i] = tail[i];
  return LaurentSeries(low, std::move(cs));
}

ZeroFreeCheck zero_free_on_circle(std::span<const Complex> values, double floor) {
  ZeroFreeCheck out;
  out.min_modulus = std::numeric_limits<double>::infinity();
  double turn = 0.0;
  bool resolved = true;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const Complex a = values[j];
    const Complex b = values[(j + 1) % values.size()];
    out.min_modulus = std::min(out.min_modulus, std::abs(a));
    const double step = std::arg(b / a);
    if (std::abs(step) > std::numbers::pi / 2) resolved = false;
    turn += step;
  }
  out.winding = static_cast<int>(std::lround(turn / (2.0 * std::numbers::pi)));
  out.ok = resolved && out.winding == 0 && out.min_modulus > floor && std::isfinite(out.min_modulus);
  return out;
}

namespace {

std::vector<Complex> circle(double r, int angles) {
  std::vector<Complex> pts(static_cast<std::size_t>(angles));
  for (int j = 0; j < angles; ++j) pts[static_cast<std::size_t>(j)] = std::polar(r, 2.0 * std::numbers::pi * j / angles);
  return pts;
}

}  // namespace

bool member_admissible(const ClassSpec& spec, const LaurentSeries& member, double radius, int angles, double floor,
                       bool zero_free) {
  const auto pts = circle(radius, angles);
  std::vector<Complex> g1(pts.size()), g2(pts.size());
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const Complex z = pts[j];
    const Jet f = jet_at(member, z);
    switch (spec.family) {
      case Family::A:
        g1[j] = f.value / z;
        g2[j] = f.z_d1 / z;
        break;
      case Family::Sigma:
        g1[j] = z * f.value;
        g2[j] = z * f.z_d1;
        break;
      case Family::H:
        g1[j] = f.value;
        g2[j] = 1.0;
        break;
    }
  }
  const ZeroFreeCheck c1 = zero_free_on_circle(g1, floor);
  const ZeroFreeCheck c2 = zero_free_on_circle(g2, floor);
  if (zero_free) return c1.ok && c2.ok;
  return c1.min_modulus > floor && c2.min_modulus > floor;
}

LaurentSeries sample_member(const ClassSpec& spec, std::uint64_t seed, const SamplerConfig& cfg) {
  spec.validate();
  if (!(cfg.test_radius > 0.0 && cfg.test_radius < 1.0))
    throw Error(ErrorCode::DomainError, "test_radius must lie in (0,1)");
  const int first_free = spec.fixed_exp() + 1;
  std::vector<Complex> tail(static_cast<std::size_t>(std::max(cfg.tail_terms, 0)));
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    auto eng = stream_engine(seed, 0x5a3d1e, static_cast<std::uint64_t>(attempt));
    const double amp = std::pow(10.0, -cfg.amplitude_span * unit_uniform(eng));
    for (std::size_t i = 0; i < tail.size(); ++i) {
      const double rad = std::sqrt(unit_uniform(eng));
      const double ang = 2.0 * std::numbers::pi * unit_uniform(eng);
      const int k = first_free + static_cast<int>(i);
      tail[i] = std::polar(amp * std::pow(cfg.decay, k) * rad, ang);
    }
    LaurentSeries m = make_member(spec, tail, cfg.order);
    if (member_admissible(spec, m, cfg.test_radius, cfg.angles, cfg.floor, cfg.zero_free)) return m;
  }
  throw Error(ErrorCode::RejectionBudgetExhausted,
              "no admissible member after " + std::to_string(cfg.max_attempts) + " draws");
}

SubordinationResult classify_starlike(const LaurentSeries& f, double beta, const SampleGrid& grid) {
  if (f.low_exp() != 1 || std::abs(f.coeff(1) - 1.0) > 1e-12)
    throw Error(ErrorCode::DomainError, "classify_starlike expects f = z + ...");
  const auto target = target_from_cayley(beta);
  return check_subordination(
      [&f](Complex z) {
        const Jet j = jet_at(f, z);
        return j.z_d1 / j.value;
      },
      Complex{1.0, 0.0}, target, grid);
}

}  // namespace subord
