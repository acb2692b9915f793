#include <cmath>
#include <random>

#include "doctest.h"
#include "subord/errors.hpp"
#include "subord/series.hpp"

using namespace subord;

namespace {

LaurentSeries poly(int low, std::vector<Complex> cs) { return LaurentSeries(low, std::move(cs)); }

LaurentSeries z_series(int order = kDefaultOrder) { return LaurentSeries::monomial(1.0, 1, order); }

LaurentSeries random_series(std::mt19937_64& eng, int low, int order) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> cs(static_cast<std::size_t>(order + 1));
  for (auto& c : cs) c = {u(eng), u(eng)};
  return LaurentSeries(low, cs);
}

double max_coeff_diff(const LaurentSeries& a, const LaurentSeries& b) {
  const int lo = std::min(a.low_exp(), b.low_exp());
  const int hi = std::min(a.high_exp(), b.high_exp());
  double d = 0.0;
  for (int k = lo; k <= hi; ++k) d = std::max(d, std::abs(a.coeff(k) - b.coeff(k)));
  return d;
}

}  // namespace

TEST_CASE("ring operations on small series") {
  const LaurentSeries z = z_series();
  const LaurentSeries zz = z * z;
  CHECK(zz.coeff(2) == Complex(1.0));
  for (int k = 0; k <= zz.high_exp(); ++k)
    if (k != 2) CHECK(zz.coeff(k) == Complex{});

  const LaurentSeries s = (1.0 + z) + (1.0 - z);
  CHECK(s.coeff(0) == Complex(2.0));
  CHECK(s.coeff(1) == Complex{});

  const LaurentSeries laurent = poly(-1, {1.0, 0.0, 1.0});  // 1/z + z
  const LaurentSeries prod = laurent * z;
  CHECK(prod.low_exp() == 0);
  CHECK(prod.coeff(0) == Complex(1.0));
  CHECK(prod.coeff(1) == Complex{});
  CHECK(prod.coeff(2) == Complex(1.0));
}

TEST_CASE("products never report beyond the shared valid order") {
  const LaurentSeries a = poly(0, {1.0, 1.0, 1.0});      // known to z^2
  const LaurentSeries b = poly(0, {1.0, 2.0, 3.0, 4.0});  // known to z^3
  CHECK((a * b).high_exp() == 2);
  CHECK((a + b).high_exp() == 2);
  CHECK_THROWS_AS((a * b).coeff(3), Error);
}

TEST_CASE("division matches geometric series") {
  const LaurentSeries z = z_series();
  const LaurentSeries q = (1.0 + z) / (1.0 - z);
  CHECK(q.coeff(0) == Complex(1.0));
  for (int k = 1; k <= q.high_exp(); ++k) CHECK(std::abs(q.coeff(k) - 2.0) < 1e-12);

  const LaurentSeries one = z / z;
  CHECK(one.low_exp() == 0);
  CHECK(std::abs(one.coeff(0) - 1.0) < 1e-15);
  CHECK(one.is_zero() == false);
  for (int k = 1; k <= one.high_exp(); ++k) CHECK(one.coeff(k) == Complex{});

  const double b = 0.5;
  const LaurentSeries g = LaurentSeries::constant(1.0) / (1.0 + (2.0 * b) * z);
  for (int k = 0; k <= 20; ++k) CHECK(std::abs(g.coeff(k) - std::pow(-1.0, k)) < 1e-12);
}

TEST_CASE("division by a vanishing leading coefficient") {
  const LaurentSeries den = poly(0, {1e-14, 1.0});
  CHECK_THROWS_AS(divide(LaurentSeries::constant(1.0), den), Error);
  try {
    divide(LaurentSeries::constant(1.0), den);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroLeadingCoefficient);
  }
}

TEST_CASE("quotient low exponent is the difference of low exponents") {
  const LaurentSeries a = poly(2, {1.0, 3.0, 0.5});
  const LaurentSeries b = poly(-1, {2.0, 1.0, 0.0});
  CHECK(divide(a, b).low_exp() == 3);
}

TEST_CASE("derivatives") {
  const double mu = 0.7;
  const LaurentSeries p = 1.0 + mu * LaurentSeries::monomial(1.0, 3, 10);
  const LaurentSeries zp = z_times_derivative(p.lowered_to(0));
  CHECK(std::abs(zp.coeff(3) - 3.0 * mu) < 1e-15);
  CHECK(zp.coeff(0) == Complex{});

  const LaurentSeries inv = poly(-1, {1.0, 0.0});
  const LaurentSeries d = derivative(inv);
  CHECK(d.low_exp() == -2);
  CHECK(d.coeff(-2) == Complex(-1.0));

  CHECK(z_times_derivative(LaurentSeries::constant(1.0)).is_zero());
}

TEST_CASE("evaluation") {
  CHECK(std::abs(evaluate(poly(0, {1.0, 1.0}), 0.5) - 1.5) < 1e-15);

  const LaurentSeries z = z_series(60);
  const LaurentSeries q = (1.0 + z) / (1.0 - z);
  CHECK(q.high_exp() == 61);
  CHECK(std::abs(evaluate(q, 0.5) - 3.0) < 1e-12);

  const LaurentSeries laurent = poly(-1, {1.0, 0.0, 1.0});
  CHECK(std::abs(evaluate(laurent, Complex(0.0, 1.0))) < 1e-15);
  CHECK_THROWS_AS(evaluate(laurent, 0.0), Error);
}

TEST_CASE("jets agree with separately differentiated series") {
  std::mt19937_64 eng(11);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (int low : {-1, 0, 1}) {
    const LaurentSeries a = random_series(eng, low, 12);
    const LaurentSeries d1 = derivative(a);
    const LaurentSeries d2 = derivative(d1);
    for (int i = 0; i < 10; ++i) {
      const Complex z{u(eng), u(eng)};
      const Jet j = jet_at(a, z);
      CHECK(std::abs(j.value - evaluate(a, z)) < 1e-12);
      CHECK(std::abs(j.z_d1 - z * evaluate(d1, z)) < 1e-11);
      CHECK(std::abs(j.z2_d2 - z * z * evaluate(d2, z)) < 1e-10);
    }
  }
}

TEST_CASE("effective signature") {
  const Signature s = effective_signature(poly(0, {1.0, 0.0, 0.0, 0.5, 0.25}));
  CHECK(s.n == 3);
  CHECK(s.mu == doctest::Approx(0.5));
  CHECK_FALSE(s.non_real_leading);

  const double b = 0.3;
  const LaurentSeries f = poly(1, std::vector<Complex>{1.0, b, 0.0, 0.0, 0.0, 0.0, 0.0});
  const LaurentSeries p = z_times_derivative(f) / f;
  // zf'/f = (1 + 2bz)/(1 + bz) = 1 + bz - b^2 z^2 + ...
  CHECK(std::abs(p.coeff(1) - b) < 1e-15);
  CHECK(std::abs(p.coeff(2) + b * b) < 1e-15);
  const Signature sp = effective_signature(p);
  CHECK(sp.n == 1);
  CHECK(sp.mu == doctest::Approx(b));

  CHECK(effective_signature(poly(0, {1.0, -0.5})).non_real_leading);

  try {
    effective_signature(LaurentSeries::constant(1.0, 8));
    FAIL("expected DegenerateConstant");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateConstant);
  }
}

TEST_CASE("ring axioms hold coefficient-exactly on random series") {
  std::mt19937_64 eng(5);
  for (int t = 0; t < 20; ++t) {
    const LaurentSeries a = random_series(eng, 0, 16);
    const LaurentSeries b = random_series(eng, -1, 16);
    const LaurentSeries c = random_series(eng, 1, 16);
    CHECK(max_coeff_diff((a + b) + c, a + (b + c)) < 1e-14);
    CHECK(max_coeff_diff(a * (b + c), a * b + a * c) < 1e-13);
  }
}

TEST_CASE("divide then multiply round trip") {
  std::mt19937_64 eng(9);
  for (int t = 0; t < 20; ++t) {
    const LaurentSeries a = random_series(eng, 0, 20);
    std::vector<Complex> dc(21);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    dc[0] = 1.0;
    for (std::size_t k = 1; k < dc.size(); ++k) dc[k] = Complex{u(eng), u(eng)} * std::pow(0.6, k);
    const LaurentSeries b(0, dc);
    CHECK(max_coeff_diff(divide(a, b) * b, a) < 1e-12);
  }
}

TEST_CASE("evaluation is linear and matches termwise sums") {
  std::mt19937_64 eng(21);
  std::uniform_real_distribution<double> u(-0.95, 0.95);
  const LaurentSeries a = random_series(eng, -1, 15);
  const LaurentSeries b = random_series(eng, -1, 15);
  const Complex s{0.3, -1.2};
  for (int i = 0; i < 20; ++i) {
    Complex z{u(eng), u(eng)};
    if (std::abs(z) < 0.1) z += 0.2;
    Complex direct{};
    for (int k = a.low_exp(); k <= a.high_exp(); ++k) direct += a.coeff(k) * std::pow(z, k);
    CHECK(std::abs(evaluate(a, z) - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
    const Complex lin = evaluate(a + s * b, z);
    const Complex sep = evaluate(a, z) + s * evaluate(b, z);
    CHECK(std::abs(lin - sep) <= 1e-12 * std::max(1.0, std::abs(sep)));
  }
}

TEST_CASE("tail bound") {
  CHECK(tail_bound(poly(0, {1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}), 0.99) == 0.0);
  const LaurentSeries z = z_series(40);
  const LaurentSeries geo = LaurentSeries::constant(1.0, 40) / (1.0 - z);
  // Exact tail of sum r^k beyond k=40 at r = 0.5 is 0.5^41 / 0.5.
  CHECK(tail_bound(geo, 0.5) == doctest::Approx(std::pow(0.5, 41) / 0.5).epsilon(1e-6));
  CHECK(tail_bound(geo, 0.999) > 1.0);
}
