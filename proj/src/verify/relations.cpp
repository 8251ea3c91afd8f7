#include <string>

#include "rhh/error.hpp"
#include "terms.hpp"

namespace rhh {
namespace detail {

namespace {

Cochain brace1(const CochainComplex& cx, const Cochain& x, const Cochain& y, const HarnessOptions& h) {
  return brace(cx, x, std::span<const Cochain>(&y, 1), h.brace_mode);
}

// x{y} with the convention that it vanishes when |x| + |y| = 0.
std::optional<Cochain> brace_or_none(const CochainComplex& cx, const Cochain& x, const Cochain& y,
                                     const HarnessOptions& h) {
  if (x.degree + y.degree - 1 < 0) return std::nullopt;
  return brace1(cx, x, y, h);
}

Vector combine(const PrimeField& f, const Vector& a, const Vector& b, int sign_b) {
  Vector r = a;
  axpy(f, r, b, f.sign(sign_b));
  return r;
}

}  // namespace

int parity_class(int a, int b) { return (a & 1) * 2 + (b & 1); }
int parity_class(int a, int b, int c) { return (a & 1) * 4 + (b & 1) * 2 + (c & 1); }

Rel1Terms rel1_terms(const CochainComplex& cx, const Cochain& x, const Cochain& y, const HarnessOptions& h) {
  if (x.degree + y.degree < 1)
    throw Error(ErrorCode::DegreeUnderflow, "x{y} needs |x| + |y| >= 1");
  const PrimeField& f = cx.field();
  Cochain xy = brace1(cx, x, y, h);
  Vector lhs = differential(cx, xy).coeffs;
  Cochain dx = differential(cx, x);
  axpy(f, lhs, brace1(cx, dx, y, h).coeffs, f.p() - 1);
  Cochain dy = differential(cx, y);
  axpy(f, lhs, brace1(cx, x, dy, h).coeffs, f.neg(f.sign(x.degree - 1)));
  return {std::move(lhs), cup(cx, x, y).coeffs, cup(cx, y, x).coeffs};
}

Rel2Terms rel2_terms(const CochainComplex& cx, const Cochain& x, const Cochain& y, const Cochain& z,
                     const HarnessOptions& h) {
  if (z.degree < 1) throw Error(ErrorCode::BadParameter, "rel2 samples use |z| >= 1");
  Cochain xy = cup(cx, x, y);
  Vector lhs = brace1(cx, xy, z, h).coeffs;
  const std::size_t size = lhs.size();
  auto yz = brace_or_none(cx, y, z, h);
  auto xz = brace_or_none(cx, x, z, h);
  Vector a = yz ? cup(cx, x, *yz).coeffs : Vector(size, 0);
  Vector b = xz ? cup(cx, *xz, y).coeffs : Vector(size, 0);
  return {std::move(lhs), std::move(a), std::move(b)};
}

TurchinTerms turchin_terms(const CochainComplex& cx, const Cochain& x, int n, const HarnessOptions& h) {
  const PrimeField& f = cx.field();
  std::vector<Cochain> pw{cx.zero(0), x};
  for (int i = 2; i <= n; ++i) pw.push_back(brace1(cx, pw.back(), x, h));
  TurchinTerms t;
  t.lhs = differential(cx, pw[static_cast<std::size_t>(n)]).coeffs;
  t.terms.resize(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    Residue c = f.binomial(static_cast<unsigned>(n), static_cast<unsigned>(i));
    Cochain term = cup(cx, pw[static_cast<std::size_t>(i)], pw[static_cast<std::size_t>(n - i)]);
    t.terms[static_cast<std::size_t>(i)] = cx.scale(term, c).coeffs;
  }
  return t;
}

bool rel1_holds(const PrimeField& f, const Rel1Terms& t, int a, int b) {
  Vector rhs = combine(f, t.xy, t.yx, b + 1);
  scale(f, rhs, f.sign(a));
  return rhs == t.lhs;
}

bool rel2_holds(const PrimeField& f, const Rel2Terms& t, int c, int d) {
  Vector rhs = t.x_yz;
  scale(f, rhs, f.sign(c));
  axpy(f, rhs, t.xz_y, f.sign(d));
  return rhs == t.lhs;
}

bool turchin_holds(const PrimeField& f, const TurchinTerms& t, int n, int e, int k) {
  Vector rhs(t.lhs.size(), 0);
  for (int i = 1; i < n; ++i) axpy(f, rhs, t.terms[static_cast<std::size_t>(i)], f.sign(e + n * i + k * i));
  return rhs == t.lhs;
}

}  // namespace detail

bool check_rel1(const CochainComplex& cx, const Cochain& x, const Cochain& y, const SignConvention& c,
                const HarnessOptions& h) {
  auto t = detail::rel1_terms(cx, x, y, h);
  const auto& s = c.rel1[static_cast<std::size_t>(detail::parity_class(x.degree, y.degree))];
  return detail::rel1_holds(cx.field(), t, s[0], s[1]);
}

bool check_rel2(const CochainComplex& cx, const Cochain& x, const Cochain& y, const Cochain& z,
                const SignConvention& c, const HarnessOptions& h) {
  auto t = detail::rel2_terms(cx, x, y, z, h);
  const auto& s = c.rel2[static_cast<std::size_t>(detail::parity_class(x.degree, y.degree, z.degree))];
  return detail::rel2_holds(cx.field(), t, s[0], s[1]);
}

bool check_turchin(const CochainComplex& cx, const Cochain& x, int n, const SignConvention& c,
                   const HarnessOptions& h) {
  if (x.degree % 2 == 0)
    throw Error(ErrorCode::ParityViolation, "Turchin's formula needs odd degree, got " + std::to_string(x.degree));
  if (n < 2 || n > 5) throw Error(ErrorCode::BadParameter, "Turchin check supports 2 <= n <= 5, got " + std::to_string(n));
  if (!is_zero(differential(cx, x).coeffs)) throw Error(ErrorCode::NotACocycle, "Turchin's formula needs a cocycle");
  auto t = detail::turchin_terms(cx, x, n, h);
  const auto& s = c.turchin[static_cast<std::size_t>(n)];
  return detail::turchin_holds(cx.field(), t, n, s[0], s[1]);
}

}  // namespace rhh
