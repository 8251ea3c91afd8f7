#pragma once

// Evaluated pieces of the three identity families, shared by the checks and
// the sign resolver.

#include "rhh/verify.hpp"

namespace rhh::detail {

struct Rel1Terms {
  Vector lhs, xy, yx;
};
struct Rel2Terms {
  Vector lhs, x_yz, xz_y;
};
struct TurchinTerms {
  Vector lhs;
  std::vector<Vector> terms;  // terms[i] = C(n,i) x^{[i]}⌣x^{[n-i]}, i = 1..n-1 (index 0 unused)
};

int parity_class(int a, int b);
int parity_class(int a, int b, int c);

Rel1Terms rel1_terms(const CochainComplex& cx, const Cochain& x, const Cochain& y, const HarnessOptions& h);
Rel2Terms rel2_terms(const CochainComplex& cx, const Cochain& x, const Cochain& y, const Cochain& z,
                     const HarnessOptions& h);
TurchinTerms turchin_terms(const CochainComplex& cx, const Cochain& x, int n, const HarnessOptions& h);

bool rel1_holds(const PrimeField& f, const Rel1Terms& t, int a, int b);
bool rel2_holds(const PrimeField& f, const Rel2Terms& t, int c, int d);
bool turchin_holds(const PrimeField& f, const TurchinTerms& t, int n, int e, int k);

}  // namespace rhh::detail
