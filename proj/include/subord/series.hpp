#pragma once

#include <complex>
#include <span>
#include <vector>

namespace subord {

using Complex = std::complex<double>;

inline constexpr int kDefaultOrder = 64;
inline constexpr double kLeadingZeroThreshold = 1e-13;

// Truncated Laurent series  sum_{k=low}^{low+order} c_k z^k.
//
// The series is only meaningful up to exponent high_exp(); every operation
// propagates the smallest exponent that is still exact, so a product or a
// quotient never reports coefficients it could not have computed.
class LaurentSeries {
 public:
  LaurentSeries();  // the constant 0 known to exponent 0
  LaurentSeries(int low_exp, std::vector<Complex> coeffs);

  static LaurentSeries constant(Complex c, int order = kDefaultOrder);
  static LaurentSeries monomial(Complex c, int exp, int order = kDefaultOrder);

  int low_exp() const noexcept { return low_exp_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  int high_exp() const noexcept { return low_exp_ + order(); }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  // Coefficient of z^exp. Exponents below low_exp() are zero; exponents
  // above high_exp() are unknown and throw.
  Complex coeff(int exp) const;

  bool is_zero(double tol = 0.0) const;

  // Keep only exponents <= high (high must not exceed high_exp()).
  LaurentSeries truncated(int high) const;
  // Re-express with a smaller lowest exponent by prepending zeros.
  LaurentSeries lowered_to(int low) const;

  LaurentSeries operator-() const;
  LaurentSeries& operator*=(Complex s);

 private:
  int low_exp_ = 0;
  std::vector<Complex> coeffs_;
};

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

LaurentSeries operator+(const LaurentSeries& a, Complex s);
LaurentSeries operator+(Complex s, const LaurentSeries& a);
LaurentSeries operator-(const LaurentSeries& a, Complex s);
LaurentSeries operator-(Complex s, const LaurentSeries& a);
LaurentSeries operator*(Complex s, const LaurentSeries& a);
LaurentSeries operator*(const LaurentSeries& a, Complex s);

// Long division. Throws ZeroLeadingCoefficient when |den.coeff(low)| is below
// `threshold`.
LaurentSeries divide(const LaurentSeries& num, const LaurentSeries& den,
                     double threshold = kLeadingZeroThreshold);
inline LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return divide(a, b); }

LaurentSeries derivative(const LaurentSeries& a);
LaurentSeries z_times_derivative(const LaurentSeries& a);

// Horner evaluation of the stored coefficients. Throws PoleAtOrigin for z=0
// when negative exponents are present.
Complex evaluate(const LaurentSeries& a, Complex z);

// Value together with the two Euler-operator derivatives at a point:
// g(z), z g'(z), z^2 g''(z). Exact for the stored (polynomial) data.
struct Jet {
  Complex value;
  Complex z_d1;
  Complex z2_d2;
};

Jet jet_at(const LaurentSeries& a, Complex z);

// Estimate of sum_{k > high_exp} |c_k| r^k extrapolated geometrically from
// the last eight stored terms. Zero when those terms vanish (polynomials).
double tail_bound(const LaurentSeries& a, double r);

struct Signature {
  int n = 0;
  double mu = 0.0;
  Complex leading;
  bool non_real_leading = false;  // leading coefficient not real and >= 0
};

// Reads p = 1 + c_n z^n + ... and returns (n, c_n). Throws DegenerateConstant
// when every post-constant coefficient is negligible.
Signature effective_signature(const LaurentSeries& p, double tol = 1e-10);

}  // namespace subord
