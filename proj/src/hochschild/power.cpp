#include <string>

#include "rhh/error.hpp"
#include "rhh/hochschild.hpp"

namespace rhh {

CohomologyClass p_power_class(const CochainComplex& cx, const CohomologyClass& c) {
  if (c.degree % 2 == 0)
    throw Error(ErrorCode::WrongParity, "p-power needs odd cochain degree, got " + std::to_string(c.degree));
  Cochain y = iterated_power(cx, c.representative, static_cast<int>(cx.field().p()));
  return class_of(cx, y, c.normalized);
}

ZetaResult zeta(const CochainComplex& cx, const Cochain& x, ZetaRange range, bool normalized) {
  const PrimeField& f = cx.field();
  const int p = static_cast<int>(f.p());
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "zeta is defined for odd p only");
  if (x.degree % 2 == 0)
    throw Error(ErrorCode::WrongParity, "zeta needs odd cochain degree, got " + std::to_string(x.degree));

  std::vector<Cochain> powers;
  powers.push_back(cx.unit());
  powers.push_back(x);
  for (int i = 2; i < p; ++i) powers.push_back(circle(cx, powers.back(), x));

  ZetaResult out;
  const int jmin = range == ZetaRange::BothPositive ? 1 : 0;
  for (int i = 1; i <= p - 1 - jmin; ++i) {
    const int j = p - 1 - i;
    Residue coeff = f.inv(static_cast<Residue>(i));
    if (i % 2 != 0) coeff = f.neg(coeff);
    Cochain term = cup(cx, powers[static_cast<std::size_t>(i)], powers[static_cast<std::size_t>(j)]);
    auto it = out.components.find(term.degree);
    if (it == out.components.end()) {
      out.components.emplace(term.degree, cx.scale(term, coeff));
    } else {
      it->second = cx.axpy(it->second, term, coeff);
    }
  }
  out.cocycle = true;
  for (const auto& [deg, comp] : out.components) {
    Cochain d = differential(cx, comp);
    if (!is_zero(d.coeffs)) out.cocycle = false;
  }
  if (out.cocycle)
    for (const auto& [deg, comp] : out.components) out.classes.emplace(deg, class_of(cx, comp, normalized));
  return out;
}

}  // namespace rhh
