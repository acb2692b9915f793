#include <cmath>
#include <vector>

#include "doctest.h"
#include "subord/errors.hpp"
#include "subord/function_classes.hpp"

using namespace subord;

namespace {

// Koebe function to high order; zf'/f = (1+z)/(1-z) in closed form.
LaurentSeries koebe(int order) {
  std::vector<Complex> cs(static_cast<std::size_t>(order + 1));
  for (int k = 0; k <= order; ++k) cs[static_cast<std::size_t>(k)] = static_cast<double>(k + 1);
  return LaurentSeries(1, std::move(cs));
}

double min_modulus_on_circle(const LaurentSeries& p, double r, int angles) {
  double m = 1e300;
  for (int j = 0; j < angles; ++j) m = std::min(m, std::abs(evaluate(p, std::polar(r, 2.0 * M_PI * j / angles))));
  return m;
}

}  // namespace

TEST_CASE("make_member builds the class prefix") {
  const std::vector<Complex> tail{3.0, 4.0, 5.0};
  const LaurentSeries f = make_member({Family::A, 1, 2.0}, tail, 10);
  CHECK(f.low_exp() == 1);
  for (int k = 1; k <= 5; ++k) CHECK(f.coeff(k) == Complex(static_cast<double>(k)));
  CHECK(f.coeff(6) == Complex{});

  const std::vector<Complex> zero{0.0};
  const LaurentSeries g = make_member({Family::Sigma, 1, -0.5}, zero, 6);
  CHECK(g.low_exp() == -1);
  CHECK(g.coeff(-1) == Complex(1.0));
  CHECK(g.coeff(0) == Complex{});
  CHECK(g.coeff(1) == Complex(-0.5));
  CHECK(g.coeff(2) == Complex{});

  const LaurentSeries p = make_member({Family::H, 2, 0.7}, {}, 6);
  CHECK(p.coeff(0) == Complex(1.0));
  CHECK(p.coeff(1) == Complex{});
  CHECK(p.coeff(2) == Complex(0.7));
}

TEST_CASE("class sign constraints") {
  const std::vector<Complex> none;
  auto code_of = [&](ClassSpec s) {
    try {
      make_member(s, none);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Degenerate;
  };
  CHECK(code_of({Family::A, 1, -0.1}) == ErrorCode::SignViolation);
  CHECK(code_of({Family::Sigma, 1, 0.1}) == ErrorCode::SignViolation);
  CHECK(code_of({Family::H, 1, -0.1}) == ErrorCode::SignViolation);
  CHECK(code_of({Family::H, 0, 0.1}) == ErrorCode::DomainError);
  CHECK_NOTHROW(make_member({Family::A, 1, 0.0}, none));
}

TEST_CASE("parameter set derives K and validates") {
  ParameterSet p{0.0, 0.0, 1.0, 1, 2.0};
  CHECK(p.K() == doctest::Approx(1.0));
  p.mu = 0.0;
  CHECK(p.K() == doctest::Approx(2.0));
  for (int n = 1; n <= 4; ++n)
    for (double mu = 0.0; mu <= 2.0; mu += 0.25) {
      const double k = ParameterSet{0, 0, 1, n, mu}.K();
      CHECK(k >= n);
      CHECK(k <= n + 1);
    }
  CHECK_THROWS_AS(ParameterSet({0.0, 1.0, 1.0, 1, 1.0}).validate(), Error);
  CHECK_THROWS_AS(ParameterSet({0.0, 1.0 + 1e-10, 1.0, 1, 1.0}).validate(), Error);
  CHECK_NOTHROW(ParameterSet({0.0, 1.0 + 1e-6, 1.0, 1, 1.0}).validate());
  CHECK_THROWS_AS(ParameterSet({0.0, 0.0, 1.0, 1, 2.5}).validate(), Error);
}

TEST_CASE("sampler honours the modulus floor") {
  const ClassSpec spec{Family::H, 1, 2.0};
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const LaurentSeries p = sample_member(spec, s);
    CHECK(p.coeff(0) == Complex(1.0));
    CHECK(p.coeff(1) == Complex(2.0));
    CHECK(min_modulus_on_circle(p, 0.95, 720) > 1e-3);
  }
}

TEST_CASE("sampler is deterministic per seed") {
  const ClassSpec spec{Family::A, 2, 0.3};
  const LaurentSeries a = sample_member(spec, 42);
  const LaurentSeries b = sample_member(spec, 42);
  const LaurentSeries c = sample_member(spec, 43);
  CHECK(std::equal(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin()));
  CHECK_FALSE(std::equal(a.coeffs().begin(), a.coeffs().end(), c.coeffs().begin()));
}

TEST_CASE("zero decay gives the two-term member") {
  SamplerConfig cfg;
  cfg.decay = 0.0;
  const LaurentSeries f = sample_member({Family::A, 2, 0.25}, 3, cfg);
  CHECK(f.coeff(1) == Complex(1.0));
  CHECK(f.coeff(3) == Complex(0.25));
  for (int k = 2; k <= f.high_exp(); ++k)
    if (k != 3) CHECK(f.coeff(k) == Complex{});
}

TEST_CASE("large tails exhaust the rejection budget") {
  SamplerConfig cfg;
  cfg.decay = 3.0;
  cfg.zero_free = true;
  try {
    sample_member({Family::H, 1, 2.0}, 5, cfg);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RejectionBudgetExhausted);
  }
}

TEST_CASE("zero-free check on sampled circles") {
  std::vector<Complex> vals(64);
  for (int j = 0; j < 64; ++j) vals[static_cast<std::size_t>(j)] = 1.0 + 0.5 * std::polar(1.0, 2.0 * M_PI * j / 64);
  CHECK(zero_free_on_circle(vals, 1e-3).ok);
  for (int j = 0; j < 64; ++j) vals[static_cast<std::size_t>(j)] = 1.0 + 1.5 * std::polar(1.0, 2.0 * M_PI * j / 64);
  const ZeroFreeCheck c = zero_free_on_circle(vals, 1e-3);
  CHECK(c.winding == 1);
  CHECK_FALSE(c.ok);
}

TEST_CASE("sampled members carry the expected signatures") {
  for (int n = 1; n <= 3; ++n) {
    const double b = 0.2;
    for (std::uint64_t s = 0; s < 5; ++s) {
      const LaurentSeries f = sample_member({Family::A, n, b}, s);
      const Signature sp = effective_signature(z_times_derivative(f) / f);
      CHECK(sp.n == n);
      CHECK(std::abs(sp.mu - n * b) < 1e-10);
      const Signature sd = effective_signature(derivative(f));
      CHECK(sd.n == n);
      CHECK(std::abs(sd.mu - (n + 1) * b) < 1e-10);
    }
  }
}

TEST_CASE("meromorphic two-term member: leading term of -zf'/f") {
  for (int n = 1; n <= 3; ++n) {
    const double b = -0.25;
    const std::vector<Complex> zero{0.0};
    const LaurentSeries f = make_member({Family::Sigma, n, b}, zero, 40);
    const LaurentSeries q = -(z_times_derivative(f) / f);
    CHECK(std::abs(q.coeff(0) - 1.0) < 1e-15);
    for (int k = 1; k <= n; ++k) CHECK(std::abs(q.coeff(k)) < 1e-15);
    CHECK(std::abs(q.coeff(n + 1) + (n + 1) * b) < 1e-15);
  }
}

TEST_CASE("starlikeness of the Koebe function") {
  SampleGrid grid{{0.99}, 720, 1e-9};
  const SubordinationResult r = classify_starlike(koebe(6000), 0.0, grid);
  CHECK(r.holds());
  CHECK(r.margin == doctest::Approx(0.01 / 1.99).epsilon(1e-6));
}

TEST_CASE("identity is starlike with margin 1 - beta") {
  const LaurentSeries z = LaurentSeries::monomial(1.0, 1, 8);
  for (double beta : {-1.0, 0.0, 0.5, 0.9}) {
    const SubordinationResult r = classify_starlike(z, beta);
    CHECK(r.holds());
    CHECK(r.margin == doctest::Approx(1.0 - beta));
  }
}

TEST_CASE("z + 2z^2 is not starlike") {
  const SubordinationResult r = classify_starlike(LaurentSeries(1, {1.0, 2.0}), 0.0, SampleGrid{{0.49, 0.99}, 720, 1e-9});
  CHECK_FALSE(r.holds());
  CHECK(r.margin < 0.0);
  CHECK(r.witness.real() < 0.0);
}

TEST_CASE("starlikeness margins are ordered in beta") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const LaurentSeries f = sample_member({Family::A, 1, 0.1}, s);
    double prev = -1e300;
    for (double beta : {0.9, 0.5, 0.0, -0.5}) {
      const double m = classify_starlike(f, beta, SampleGrid{{0.5, 0.9}, 180, 1e-9}).margin;
      CHECK(m >= prev);
      prev = m;
    }
  }
}
