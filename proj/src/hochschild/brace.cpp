#include <string>

#include "rhh/error.hpp"
#include "rhh/hochschild.hpp"

namespace rhh {

namespace {

// Object between positions j-1 and j of an output tuple; position 0 is the
// overall target and position N the overall source.
struct Frame {
  const FDCategory* cat;
  std::span<const int> tuple;
  int object;  // used when the tuple is empty

  int at(std::size_t j) const {
    if (tuple.empty()) return object;
    if (j == tuple.size()) return cat->source(tuple.back());
    return cat->target(tuple[j]);
  }
};

// Value of y on the sub-tuple [pos, pos + deg) of a frame, as global terms.
SparseVector value_on(const CochainComplex& cx, const Cochain& y, const Frame& fr, std::size_t pos) {
  const auto& cat = cx.category();
  const auto& ly = cx.layout(y.degree);
  std::size_t t;
  if (y.degree == 0) {
    int obj = fr.at(pos);
    t = ly.find(std::span<const int>(&obj, 1));
  } else {
    t = ly.find(fr.tuple.subspan(pos, static_cast<std::size_t>(y.degree)));
  }
  SparseVector out;
  if (t == CochainLayout::npos) return out;
  const auto& blk = cat.hom(ly.source(t), ly.target(t));
  for (std::size_t k = 0; k < blk.size(); ++k) {
    Residue r = y.coeffs[ly.offset(t) + k];
    if (r != 0) out.push_back({blk[k], r});
  }
  return out;
}

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

struct Evaluator {
  const CochainComplex& cx;
  const Cochain& x;
  const CochainLayout& lx;
  const std::vector<SparseVector>& slots;
  std::vector<std::uint64_t>& acc;
  Residue p;
  std::uint64_t dim;

  void run(std::size_t i, std::uint64_t key, std::uint64_t coeff) {
    if (i == slots.size()) {
      std::size_t t = lx.find_key(key);
      if (t == CochainLayout::npos) return;
      const Residue* xv = x.coeffs.data() + lx.offset(t);
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += coeff * xv[k];
      return;
    }
    for (const auto& term : slots[i]) run(i + 1, key * dim + static_cast<std::uint64_t>(term.index), coeff * term.coeff % p);
  }
};

Cochain brace_impl(const CochainComplex& cx, const Cochain& x, std::span<const Cochain> ys, bool only_normalized,
                   bool result_normalized, bool signed_sum = true) {
  const int n = x.degree;
  const int s = static_cast<int>(ys.size());
  long out_deg = n - s;
  for (const auto& y : ys) out_deg += y.degree;
  if (out_deg < 0)
    throw Error(ErrorCode::DegreeUnderflow, "brace of a degree-" + std::to_string(n) + " cochain with " +
                                                std::to_string(s) + " inputs has degree " + std::to_string(out_deg));
  const int N = static_cast<int>(out_deg);
  Cochain r = cx.zero(N);
  r.normalized = result_normalized || N == 0;
  if (n < s) return r;
  const auto& cat = cx.category();
  const PrimeField& f = cx.field();
  const Residue p = f.p();
  const auto& lx = cx.layout(n);
  const auto& lo = cx.layout(N);
  if (x.coeffs.size() != lx.size()) throw Error(ErrorCode::DimensionMismatch, "cochain size does not match its degree");
  for (const auto& y : ys)
    if (y.coeffs.size() != cx.layout(y.degree).size())
      throw Error(ErrorCode::DimensionMismatch, "cochain size does not match its degree");

  std::vector<std::vector<int>> placements;
  std::vector<int> cur;
  compositions(n - s, s + 1, cur, placements);

  std::vector<SparseVector> slots;
  std::vector<std::uint64_t> acc;
  for (std::size_t t = 0; t < lo.num_tuples(); ++t) {
    if (only_normalized && lo.normalized_offset(t) < 0) continue;
    Frame fr{&cat, lo.tuple(t), N == 0 ? static_cast<int>(t) : 0};
    acc.assign(lo.block_size(t), 0);
    for (const auto& m : placements) {
      slots.clear();
      std::size_t pos = 0;
      long sign_exp = 0;
      bool vanished = false;
      for (int i = 0; i <= s && !vanished; ++i) {
        for (int c = 0; c < m[static_cast<std::size_t>(i)]; ++c) slots.push_back({{fr.tuple[pos++], 1}});
        if (i == s) break;
        const Cochain& y = ys[static_cast<std::size_t>(i)];
        sign_exp += static_cast<long>(pos) * (y.degree + 1);
        SparseVector v = value_on(cx, y, fr, pos);
        if (v.empty()) vanished = true;
        slots.push_back(std::move(v));
        pos += static_cast<std::size_t>(y.degree);
      }
      if (vanished) continue;
      Evaluator ev{cx, x, lx, slots, acc, p, cat.dim()};
      ev.run(0, 0, !signed_sum || sign_exp % 2 == 0 ? 1 : p - 1);
    }
    for (std::size_t k = 0; k < acc.size(); ++k) r.coeffs[lo.offset(t) + k] = static_cast<Residue>(acc[k] % p);
  }
  return r;
}

}  // namespace

Cochain brace(const CochainComplex& cx, const Cochain& x, std::span<const Cochain> ys, BraceEval mode) {
  bool norm = x.normalized;
  for (const auto& y : ys) norm = norm && y.normalized;
  if (mode == BraceEval::Full) return brace_impl(cx, x, ys, false, false);
  if (mode == BraceEval::DropSignsFault) return brace_impl(cx, x, ys, norm, norm, false);
  return brace_impl(cx, x, ys, norm, norm);
}

Cochain circle(const CochainComplex& cx, const Cochain& x, const Cochain& y) {
  return brace(cx, x, std::span<const Cochain>(&y, 1));
}

Cochain cup(const CochainComplex& cx, const Cochain& x, const Cochain& y) {
  const auto& cat = cx.category();
  const PrimeField& f = cx.field();
  const int n = x.degree, m = y.degree, N = n + m;
  Cochain r = cx.zero(N);
  r.normalized = (x.normalized && y.normalized) || N == 0;
  const auto& lo = cx.layout(N);
  for (std::size_t t = 0; t < lo.num_tuples(); ++t) {
    if (r.normalized && lo.normalized_offset(t) < 0) continue;
    Frame fr{&cat, lo.tuple(t), N == 0 ? static_cast<int>(t) : 0};
    SparseVector xv = value_on(cx, x, fr, 0);
    if (xv.empty()) continue;
    SparseVector yv = value_on(cx, y, fr, static_cast<std::size_t>(n));
    if (yv.empty()) continue;
    Residue* out = r.coeffs.data() + lo.offset(t);
    for (const auto& a : xv)
      for (const auto& b : yv)
        for (const auto& c : cat.compose(a.index, b.index)) {
          auto& slot = out[static_cast<std::size_t>(cat.local_index(c.index))];
          slot = f.add(slot, f.mul(f.mul(a.coeff, b.coeff), c.coeff));
        }
  }
  return r;
}

Cochain differential(const CochainComplex& cx, const Cochain& x) {
  const Cochain& m = cx.multiplication();
  bool norm = x.normalized;
  Cochain a = brace_impl(cx, m, std::span<const Cochain>(&x, 1), norm, norm);
  Cochain b = brace_impl(cx, x, std::span<const Cochain>(&m, 1), norm, norm);
  Cochain r = x.degree % 2 == 0 ? cx.add(a, b) : cx.sub(a, b);
  r.normalized = norm;
  return r;
}

Cochain bracket(const CochainComplex& cx, const Cochain& x, const Cochain& y) {
  Cochain a = circle(cx, x, y);
  Cochain b = circle(cx, y, x);
  return ((x.degree - 1) * (y.degree - 1)) % 2 == 0 ? cx.sub(a, b) : cx.add(a, b);
}

Cochain reduced_square(const CochainComplex& cx, const Cochain& x) {
  if (x.degree % 2 != 0)
    throw Error(ErrorCode::WrongParity, "reduced square needs even cochain degree, got " + std::to_string(x.degree));
  return circle(cx, x, x);
}

Cochain iterated_power(const CochainComplex& cx, const Cochain& x, int k) {
  if (k < 1) throw Error(ErrorCode::BadParameter, "iterated power exponent " + std::to_string(k) + " < 1");
  Cochain r = x;
  for (int i = 1; i < k; ++i) r = circle(cx, r, x);
  return r;
}

}  // namespace rhh
