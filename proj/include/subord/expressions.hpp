#pragma once

#include <string>

#include "subord/function_classes.hpp"
#include "subord/halfplane.hpp"
#include "subord/series.hpp"

namespace subord {

enum class Theorem { T2_1, T2_2, T2_3 };
enum class Lemma { L2_4, L2_5, L2_6, L2_7, L2_8, L2_9 };

// One of the four displayed premises of a theorem.
struct TheoremPremise {
  Theorem theorem = Theorem::T2_1;
  int index = 1;  // 1..4

  void validate() const;
};

std::string to_string(Theorem t);
std::string to_string(Lemma l);
std::string to_string(const TheoremPremise& k);
Theorem theorem_from_string(const std::string& s);
Lemma lemma_from_string(const std::string& s);

// Family the theorem's f is drawn from (A for T2_1/T2_3, Sigma for T2_2).
Family family_of(Theorem t);

// The function the theorem concludes about: zf'/f, -zf'/f, or f'.
LaurentSeries p_from_f(Theorem t, const LaurentSeries& f);

// Lemma premises in terms of p:
//   L2_4 (1-a)p + a p^2 + g zp'    L2_5 p + g zp'         L2_6 p + a zp'/p
//   L2_7 zp'/p                      L2_8 p + zp'/(a p + g)  L2_9 p^2 + g zp'
// Coefficients are not range-checked here.
LaurentSeries premise_from_p(Lemma lemma, const LaurentSeries& p, double alpha, double gamma);
// Theorem premise through the corresponding identity in p.
LaurentSeries premise_from_p(const TheoremPremise& kind, const LaurentSeries& p, double alpha);
// Theorem premise built directly from f, f' and f''.
LaurentSeries premise_from_f(const TheoremPremise& kind, const LaurentSeries& f, double alpha);

// Lemma and (alpha, gamma) the theorem premise reduces to. T2_2 carries
// negated coefficients on the zp' terms.
struct LemmaForm {
  Lemma lemma;
  double alpha;
  double gamma;
};
LemmaForm lemma_form(const TheoremPremise& kind, double alpha);

// Pointwise counterparts; `f` and `p` are jets (value, z g', z^2 g'') at z != 0.
Complex premise_at_p(Lemma lemma, const Jet& p, double alpha, double gamma);
Complex premise_at_f(const TheoremPremise& kind, const Jet& f, Complex z, double alpha);
Jet p_jet_from_f(Theorem t, const Jet& f, Complex z);

struct IdentityDiscrepancy {
  double series = 0.0;     // premise_from_f vs premise_from_p, truncated series
  double pointwise = 0.0;  // premise_at_f vs premise_at_p from exact jets

  double max() const { return series > pointwise ? series : pointwise; }
};

// Max modulus over the grid of the difference between the two routes.
IdentityDiscrepancy identity_check(const TheoremPremise& kind, const LaurentSeries& f, double alpha,
                                   const SampleGrid& grid);

}  // namespace subord
