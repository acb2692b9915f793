#include "subord/expressions.hpp"

#include <algorithm>
#include <cmath>

#include "subord/errors.hpp"

namespace subord {

void TheoremPremise::validate() const {
  if (index < 1 || index > 4) throw Error(ErrorCode::DomainError, "premise index must be 1..4");
}

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::T2_1: return "T2_1";
    case Theorem::T2_2: return "T2_2";
    case Theorem::T2_3: return "T2_3";
  }
  return "?";
}

std::string to_string(Lemma l) {
  switch (l) {
    case Lemma::L2_4: return "L2_4";
    case Lemma::L2_5: return "L2_5";
    case Lemma::L2_6: return "L2_6";
    case Lemma::L2_7: return "L2_7";
    case Lemma::L2_8: return "L2_8";
    case Lemma::L2_9: return "L2_9";
  }
  return "?";
}

std::string to_string(const TheoremPremise& k) { return to_string(k.theorem) + ":" + std::to_string(k.index); }

Theorem theorem_from_string(const std::string& s) {
  if (s == "T2_1") return Theorem::T2_1;
  if (s == "T2_2") return Theorem::T2_2;
  if (s == "T2_3") return Theorem::T2_3;
  throw Error(ErrorCode::ParseError, "unknown theorem '" + s + "'");
}

Lemma lemma_from_string(const std::string& s) {
  static const char* names[] = {"L2_4", "L2_5", "L2_6", "L2_7", "L2_8", "L2_9"};
  for (int i = 0; i < 6; ++i)
    if (s == names[i]) return static_cast<Lemma>(i);
  throw Error(ErrorCode::ParseError, "unknown lemma '" + s + "'");
}

Family family_of(Theorem t) { return t == Theorem::T2_2 ? Family::Sigma : Family::A; }

LaurentSeries p_from_f(Theorem t, const LaurentSeries& f) {
  switch (t) {
    case Theorem::T2_1: return z_times_derivative(f) / f;
    case Theorem::T2_2: return -(z_times_derivative(f) / f);
    case Theorem::T2_3: return derivative(f);
  }
  throw Error(ErrorCode::DomainError, "unknown theorem");
}

LaurentSeries premise_from_p(Lemma lemma, const LaurentSeries& p, double alpha, double gamma) {
  const LaurentSeries zdp = z_times_derivative(p);
  switch (lemma) {
    case Lemma::L2_4: return (1.0 - alpha) * p + alpha * (p * p) + gamma * zdp;
    case Lemma::L2_5: return p + gamma * zdp;
    case Lemma::L2_6: return p + alpha * (zdp / p);
    case Lemma::L2_7: return zdp / p;
    case Lemma::L2_8: return p + zdp / (alpha * p + gamma);
    case Lemma::L2_9: return p * p + gamma * zdp;
  }
  throw Error(ErrorCode::DomainError, "unknown lemma");
}

LemmaForm lemma_form(const TheoremPremise& kind, double alpha) {
  kind.validate();
  // The meromorphic identities carry -zp' where the analytic ones carry +zp'.
  const double s = kind.theorem == Theorem::T2_2 ? -1.0 : 1.0;
  switch (kind.index) {
    case 1: return {Lemma::L2_4, alpha, s * alpha};
    case 2: return {Lemma::L2_5, 0.0, s * 1.0};
    case 3: return {Lemma::L2_6, s * alpha, 0.0};
    default: return {Lemma::L2_7, 0.0, 0.0};
  }
}

LaurentSeries premise_from_p(const TheoremPremise& kind, const LaurentSeries& p, double alpha) {
  const LemmaForm form = lemma_form(kind, alpha);
  return premise_from_p(form.lemma, p, form.alpha, form.gamma);
}

LaurentSeries premise_from_f(const TheoremPremise& kind, const LaurentSeries& f, double alpha) {
  kind.validate();
  const double a = alpha;
  const LaurentSeries fp = derivative(f);
  const LaurentSeries q = z_times_derivative(fp) / fp;  // z f''/f'
  if (kind.theorem == Theorem::T2_3) {
    switch (kind.index) {
      case 1: return fp * (a * (q + fp - 1.0) + 1.0);
      case 2: return fp + z_times_derivative(fp);
      case 3: return a * q + fp;
      default: return q;
    }
  }
  const LaurentSeries P = z_times_derivative(f) / f;  // z f'/f
  if (kind.theorem == Theorem::T2_1) {
    switch (kind.index) {
      case 1: return P * (a * q + 1.0);
      case 2: return P * (2.0 - P + q);
      case 3: return (1.0 - a) * P + a * (1.0 + q);
      default: return 1.0 + q - P;
    }
  }
  switch (kind.index) {
    case 1: return P * (2.0 * a - 1.0 + a * q);
    case 2: return P * (q - P);
    case 3: return -((1.0 - a) * P + a * (1.0 + q));
    default: return 1.0 + q - P;
  }
}

Complex premise_at_p(Lemma lemma, const Jet& p, double alpha, double gamma) {
  const Complex v = p.value;
  const Complex zd = p.z_d1;
  switch (lemma) {
    case Lemma::L2_4: return (1.0 - alpha) * v + alpha * v * v + gamma * zd;
    case Lemma::L2_5: return v + gamma * zd;
    case Lemma::L2_6: return v + alpha * zd / v;
    case Lemma::L2_7: return zd / v;
    case Lemma::L2_8: return v + zd / (alpha * v + gamma);
    case Lemma::L2_9: return v * v + gamma * zd;
  }
  return {};
}

Complex premise_at_f(const TheoremPremise& kind, const Jet& f, Complex z, double alpha) {
  const double a = alpha;
  const Complex P = f.z_d1 / f.value;  // z f'/f
  const Complex q = f.z2_d2 / f.z_d1;  // z f''/f'
  const Complex fp = f.z_d1 / z;
  switch (kind.theorem) {
    case Theorem::T2_1:
      switch (kind.index) {
        case 1: return P * (a * q + 1.0);
        case 2: return P * (2.0 + q - P);
        case 3: return (1.0 - a) * P + a * (1.0 + q);
        default: return 1.0 + q - P;
      }
    case Theorem::T2_2:
      switch (kind.index) {
        case 1: return P * (2.0 * a - 1.0 + a * q);
        case 2: return P * (q - P);
        case 3: return -((1.0 - a) * P + a * (1.0 + q));
        default: return 1.0 + q - P;
      }
    case Theorem::T2_3:
      switch (kind.index) {
        case 1: return fp * (a * (q + fp - 1.0) + 1.0);
        case 2: return (f.z_d1 + f.z2_d2) / z;
        case 3: return a * q + fp;
        default: return q;
      }
  }
  return {};
}

Jet p_jet_from_f(Theorem t, const Jet& f, Complex z) {
  switch (t) {
    case Theorem::T2_1: {
      const Complex p = f.z_d1 / f.value;
      return {p, (f.z_d1 + f.z2_d2) / f.value - p * p, {}};
    }
    case Theorem::T2_2: {
      const Complex P = f.z_d1 / f.value;
      return {-P, -((f.z_d1 + f.z2_d2) / f.value - P * P), {}};
    }
    case Theorem::T2_3: return {f.z_d1 / z, f.z2_d2 / z, {}};
  }
  return {};
}

IdentityDiscrepancy identity_check(const TheoremPremise& kind, const LaurentSeries& f, double alpha,
                                   const SampleGrid& grid) {
  kind.validate();
  if (f.low_exp() != (family_of(kind.theorem) == Family::A ? 1 : -1))
    throw Error(ErrorCode::DomainError, "member shape does not match " + to_string(kind.theorem));
  const LaurentSeries direct = premise_from_f(kind, f, alpha);
  const LaurentSeries via_p = premise_from_p(kind, p_from_f(kind.theorem, f), alpha);
  const int high = std::min(direct.high_exp(), via_p.high_exp());
  const LaurentSeries a = direct.truncated(high);
  const LaurentSeries b = via_p.truncated(high);
  const LemmaForm form = lemma_form(kind, alpha);

  IdentityDiscrepancy out;
  for (const Complex z : grid.points()) {
    out.series = std::max(out.series, std::abs(evaluate(a, z) - evaluate(b, z)));
    const Jet fj = jet_at(f, z);
    const Complex lhs = premise_at_f(kind, fj, z, alpha);
    const Complex rhs = premise_at_p(form.lemma, p_jet_from_f(kind.theorem, fj, z), form.alpha, form.gamma);
    out.pointwise = std::max(out.pointwise, std::abs(lhs - rhs));
  }
  return out;
}

}  // namespace subord
