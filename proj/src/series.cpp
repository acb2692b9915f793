#include "subord/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "subord/errors.hpp"

namespace subord {

namespace {

Complex int_pow(Complex z, int e) {
  Complex base = e < 0 ? 1.0 / z : z;
  int k = e < 0 ? -e : e;
  Complex out{1.0, 0.0};
  while (k > 0) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

}  // namespace

LaurentSeries::LaurentSeries() : low_exp_(0), coeffs_{Complex{}} {}

LaurentSeries::LaurentSeries(int low_exp, std::vector<Complex> coeffs)
    : low_exp_(low_exp), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::DomainError, "series needs at least one coefficient");
}

LaurentSeries LaurentSeries::constant(Complex c, int order) { return monomial(c, 0, order); }

LaurentSeries LaurentSeries::monomial(Complex c, int exp, int order) {
  std::vector<Complex> cs(static_cast<std::size_t>(std::max(order, 0)) + 1);
  cs[0] = c;
  return LaurentSeries(exp, std::move(cs));
}

Complex LaurentSeries::coeff(int exp) const {
  if (exp > high_exp())
    throw Error(ErrorCode::DomainError,
                "coefficient z^" + std::to_string(exp) + " beyond truncation z^" + std::to_string(high_exp()));
  if (exp < low_exp_) return {};
  return coeffs_[static_cast<std::size_t>(exp - low_exp_)];
}

bool LaurentSeries::is_zero(double tol) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [tol](Complex c) { return std::abs(c) <= tol; });
}

LaurentSeries LaurentSeries::truncated(int high) const {
  if (high > high_exp()) throw Error(ErrorCode::DomainError, "cannot extend truncation");
  if (high < low_exp_) return LaurentSeries(high, {Complex{}});
  return LaurentSeries(low_exp_, std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + (high - low_exp_ + 1)));
}

LaurentSeries LaurentSeries::lowered_to(int low) const {
  if (low >= low_exp_) return *this;
  std::vector<Complex> cs(static_cast<std::size_t>(low_exp_ - low), Complex{});
  cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
  return LaurentSeries(low, std::move(cs));
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentSeries& LaurentSeries::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

namespace {

template <typename Op>
LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, Op op) {
  const int low = std::min(a.low_exp(), b.low_exp());
  const int high = std::min(a.high_exp(), b.high_exp());
  std::vector<Complex> cs(static_cast<std::size_t>(high - low + 1));
  for (int e = low; e <= high; ++e) cs[static_cast<std::size_t>(e - low)] = op(a.coeff(e), b.coeff(e));
  return LaurentSeries(low, std::move(cs));
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  return combine(a, b, [](Complex x, Complex y) { return x + y; });
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return combine(a, b, [](Complex x, Complex y) { return x - y; });
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const int order = std::min(a.order(), b.order());
  auto ca = a.coeffs();
  auto cb = b.coeffs();
  std::vector<Complex> cs(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    Complex acc{};
    for (int i = 0; i <= k; ++i) acc += ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(k - i)];
    cs[static_cast<std::size_t>(k)] = acc;
  }
  return LaurentSeries(a.low_exp() + b.low_exp(), std::move(cs));
}

LaurentSeries operator+(const LaurentSeries& a, Complex s) {
  if (a.high_exp() < 0) return a;  // the constant lies beyond the known range
  LaurentSeries out = a.lowered_to(0);
  std::vector<Complex> cs(out.coeffs().begin(), out.coeffs().end());
  cs[static_cast<std::size_t>(-out.low_exp())] += s;
  return LaurentSeries(out.low_exp(), std::move(cs));
}

LaurentSeries operator+(Complex s, const LaurentSeries& a) { return a + s; }
LaurentSeries operator-(const LaurentSeries& a, Complex s) { return a + (-s); }
LaurentSeries operator-(Complex s, const LaurentSeries& a) { return (-a) + s; }

LaurentSeries operator*(Complex s, const LaurentSeries& a) {
  LaurentSeries out = a;
  out *= s;
  return out;
}

LaurentSeries operator*(const LaurentSeries& a, Complex s) { return s * a; }

LaurentSeries divide(const LaurentSeries& num, const LaurentSeries& den, double threshold) {
  auto cb = den.coeffs();
  const Complex lead = cb[0];
  if (std::abs(lead) < threshold)
    throw Error(ErrorCode::ZeroLeadingCoefficient,
                "denominator coefficient at z^" + std::to_string(den.low_exp()) + " is " +
                    std::to_string(std::abs(lead)));
  const int order = std::min(num.order(), den.order());
  auto ca = num.coeffs();
  std::vector<Complex> cs(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    Complex acc = ca[static_cast<std::size_t>(k)];
    for (int j = 1; j <= k; ++j) acc -= cb[static_cast<std::size_t>(j)] * cs[static_cast<std::size_t>(k - j)];
    cs[static_cast<std::size_t>(k)] = acc / lead;
  }
  return LaurentSeries(num.low_exp() - den.low_exp(), std::move(cs));
}

LaurentSeries derivative(const LaurentSeries& a) {
  std::vector<Complex> cs(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t j = 0; j < cs.size(); ++j) cs[j] *= static_cast<double>(a.low_exp() + static_cast<int>(j));
  return LaurentSeries(a.low_exp() - 1, std::move(cs));
}

LaurentSeries z_times_derivative(const LaurentSeries& a) {
  std::vector<Complex> cs(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t j = 0; j < cs.size(); ++j) cs[j] *= static_cast<double>(a.low_exp() + static_cast<int>(j));
  return LaurentSeries(a.low_exp(), std::move(cs));
}

Complex evaluate(const LaurentSeries& a, Complex z) {
  auto cs = a.coeffs();
  if (z == Complex{}) {
    if (a.low_exp() < 0) {
      for (std::size_t j = 0; j < cs.size() && a.low_exp() + static_cast<int>(j) < 0; ++j)
        if (cs[j] != Complex{}) throw Error(ErrorCode::PoleAtOrigin, "evaluate at z=0");
    }
    return a.low_exp() <= 0 && a.high_exp() >= 0 ? cs[static_cast<std::size_t>(-a.low_exp())] : Complex{};
  }
  Complex acc{};
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * z + *it;
  return a.low_exp() == 0 ? acc : acc * int_pow(z, a.low_exp());
}

Jet jet_at(const LaurentSeries& a, Complex z) {
  auto cs = a.coeffs();
  std::size_t top = cs.size();
  while (top > 1 && cs[top - 1] == Complex{}) --top;
  Complex p = cs[top - 1], d1{}, d2{};
  for (std::size_t j = top - 1; j-- > 0;) {
    d2 = d2 * z + d1;
    d1 = d1 * z + p;
    p = p * z + cs[j];
  }
  const Complex zp1 = z * d1;
  const Complex z2p2 = 2.0 * z * z * d2;
  const int l = a.low_exp();
  if (l == 0) return {p, zp1, z2p2};
  if (z == Complex{}) throw Error(ErrorCode::PoleAtOrigin, "jet at z=0");
  const Complex w = int_pow(z, l);
  const double ld = l;
  return {w * p, w * (ld * p + zp1), w * (ld * (ld - 1.0) * p + 2.0 * ld * zp1 + z2p2)};
}

double tail_bound(const LaurentSeries& a, double r) {
  auto cs = a.coeffs();
  const std::size_t m = std::min<std::size_t>(8, cs.size());
  std::vector<double> t(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = cs.size() - m + i;
    t[i] = std::abs(cs[j]) * std::pow(r, a.low_exp() + static_cast<int>(j));
  }
  const double last = *std::max_element(t.begin(), t.end());
  if (last == 0.0) return 0.0;
  const std::size_t half = m / 2;
  if (half == 0) return std::numeric_limits<double>::infinity();
  const double early = *std::max_element(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(half));
  const double late = *std::max_element(t.begin() + static_cast<std::ptrdiff_t>(half), t.end());
  if (early == 0.0) return std::numeric_limits<double>::infinity();
  const double q = std::pow(late / early, 1.0 / static_cast<double>(half));
  if (!(q < 1.0)) return std::numeric_limits<double>::infinity();
  return late * q / (1.0 - q);
}

Signature effective_signature(const LaurentSeries& p, double tol) {
  if (p.low_exp() > 0 || p.high_exp() < 0) throw Error(ErrorCode::DomainError, "series has no constant term");
  for (int e = p.low_exp(); e < 0; ++e)
    if (std::abs(p.coeff(e)) > tol) throw Error(ErrorCode::DomainError, "series has a pole at the origin");
  if (std::abs(p.coeff(0) - 1.0) > tol) throw Error(ErrorCode::DomainError, "constant term is not 1");
  for (int k = 1; k <= p.high_exp(); ++k) {
    const Complex c = p.coeff(k);
    if (std::abs(c) > tol) {
      Signature s;
      s.n = k;
      s.leading = c;
      s.mu = c.real();
      s.non_real_leading = std::abs(c.imag()) > tol || c.real() < -tol;
      return s;
    }
  }
  throw Error(ErrorCode::DegenerateConstant, "all post-constant coefficients vanish");
}

}  // namespace subord
