#include <string>

#include "rhh/error.hpp"
#include "rhh/liealg.hpp"

namespace rhh {

namespace {

constexpr std::size_t kMaxEnvelopingIndex = std::size_t{1} << 40;
constexpr std::size_t kMaxRewriteDepth = 100'000;
constexpr std::size_t kMaxRewriteSteps = 200'000'000;

}  // namespace

EnvelopingAlgebra::EnvelopingAlgebra(const RestrictedLie& l) : lie_(l), f_(l.p), n_(l.dim), dim_(1) {
  for (std::size_t i = 0; i < n_; ++i) {
    stride_.push_back(dim_);
    if (dim_ > kMaxEnvelopingIndex / l.p)
      throw Error(ErrorCode::ResourceBound, "u(L) of dimension " + std::to_string(l.p) + "^" + std::to_string(n_) +
                                                " cannot be indexed");
    dim_ *= l.p;
  }
}

std::vector<int> EnvelopingAlgebra::exponents(std::size_t mono) const {
  std::vector<int> e(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    e[i] = static_cast<int>(mono % lie_.p);
    mono /= lie_.p;
  }
  return e;
}

std::size_t EnvelopingAlgebra::monomial(std::span<const int> exps) const {
  std::size_t m = 0;
  for (std::size_t i = 0; i < n_; ++i) m += static_cast<std::size_t>(exps[i]) * stride_[i];
  return m;
}

std::size_t EnvelopingAlgebra::letter(std::size_t i) const { return stride_[i]; }

void EnvelopingAlgebra::add_into(Element& acc, const Element& x, Residue c) const {
  if (c == 0) return;
  for (const auto& [m, v] : x) {
    Residue& slot = acc[m];
    slot = f_.add(slot, f_.mul(c, v));
    if (slot == 0) acc.erase(m);
  }
}

// mono * e_k. Write mono = M' e_j with j its last letter. When j <= k the
// letter is appended (with e_k^p replaced by e_k^[p]); otherwise
// M' e_j e_k = (M' e_k) e_j + M' [e_j, e_k].
const EnvelopingAlgebra::Element& EnvelopingAlgebra::mul_letter(std::size_t mono, std::size_t k) const {
  auto key = std::make_pair(mono, k);
  if (auto it = letter_memo_.find(key); it != letter_memo_.end()) return it->second;
  if (++steps_ > kMaxRewriteSteps || depth_ > kMaxRewriteDepth)
    throw Error(ErrorCode::RewriteDivergence, "PBW rewriting exceeded its step bound at monomial " + std::to_string(mono));
  ++depth_;
  std::vector<int> e = exponents(mono);
  std::size_t j = n_;
  for (std::size_t i = n_; i-- > 0;)
    if (e[i] > 0) {
      j = i;
      break;
    }
  Element out;
  if (j == n_ || j <= k) {
    if (static_cast<std::uint32_t>(e[k]) + 1 < lie_.p) {
      out[mono + stride_[k]] = 1;
    } else {
      std::size_t prefix = mono - static_cast<std::size_t>(e[k]) * stride_[k];
      const Vector& pk = lie_.pmap[k];
      for (std::size_t l = 0; l < n_; ++l)
        if (pk[l] != 0) add_into(out, mul_letter(prefix, l), pk[l]);
    }
  } else {
    std::size_t rest = mono - stride_[j];
    Element first = mul_letter(rest, k);
    for (const auto& [m, c] : first) add_into(out, mul_letter(m, j), c);
    const Vector& br = lie_.bracket[j][k];
    for (std::size_t l = 0; l < n_; ++l)
      if (br[l] != 0) add_into(out, mul_letter(rest, l), br[l]);
  }
  --depth_;
  return letter_memo_.emplace(key, std::move(out)).first->second;
}

const EnvelopingAlgebra::Element& EnvelopingAlgebra::mul_monomials(std::size_t a, std::size_t b) const {
  auto key = std::make_pair(a, b);
  if (auto it = mono_memo_.find(key); it != mono_memo_.end()) return it->second;
  Element x{{a, 1}};
  std::vector<int> e = exponents(b);
  for (std::size_t i = 0; i < n_; ++i)
    for (int r = 0; r < e[i]; ++r) {
      Element next;
      for (const auto& [m, c] : x) add_into(next, mul_letter(m, i), c);
      x = std::move(next);
    }
  return mono_memo_.emplace(key, std::move(x)).first->second;
}

EnvelopingAlgebra::Element EnvelopingAlgebra::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_into(out, mul_monomials(ma, mb), f_.mul(ca, cb));
  return out;
}

EnvelopingAlgebra::Element EnvelopingAlgebra::from_lie(std::span<const Residue> v) const {
  Element out;
  for (std::size_t i = 0; i < n_; ++i)
    if (v[i] % lie_.p != 0) out[stride_[i]] = v[i] % lie_.p;
  return out;
}

EnvelopingAlgebra::Element EnvelopingAlgebra::power(const Element& a, std::uint64_t k) const {
  Element out{{0, 1}};
  for (std::uint64_t i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

FDCategory restricted_enveloping(const RestrictedLie& l) {
  EnvelopingAlgebra env(l);
  if (env.dim() > kMaxCatalogDim)
    throw Error(ErrorCode::ResourceBound, "u(L) has dimension " + std::to_string(env.dim()) + " > " +
                                              std::to_string(kMaxCatalogDim));
  RawCategory raw;
  raw.p = l.p;
  raw.objects = {"*"};
  for (std::size_t m = 0; m < env.dim(); ++m) {
    std::vector<int> e = env.exponents(m);
    std::string name;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!name.empty()) name += "*";
      name += i < l.names.size() && !l.names[i].empty() ? l.names[i] : "e" + std::to_string(i + 1);
      if (e[i] > 1) name += "^" + std::to_string(e[i]);
    }
    raw.basis.push_back({name.empty() ? "1" : name, 0, 0});
  }
  for (std::size_t a = 0; a < env.dim(); ++a)
    for (std::size_t b = 0; b < env.dim(); ++b) {
      const auto& prod = env.mul_monomials(a, b);
      if (prod.empty()) continue;
      SparseVector v;
      for (const auto& [m, c] : prod) v.push_back({static_cast<int>(m), c});
      raw.products.push_back({static_cast<int>(a), static_cast<int>(b), std::move(v)});
    }
  raw.units = {{{0, 1}}};
  FDCategory c = validate_category(raw);
  c.set_label("u(L)");
  return c;
}

Vector p_eval(const RestrictedLie& l, std::span<const Residue> v) {
  PMap pm(l);
  return pm(v);
}

PMap::PMap(const RestrictedLie& l) : env_(l) {}

const Vector& PMap::operator()(std::span<const Residue> v) const {
  const RestrictedLie& l = env_.lie();
  if (v.size() != l.dim) throw Error(ErrorCode::DimensionMismatch, "element has wrong length");
  Vector key(v.begin(), v.end());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  EnvelopingAlgebra::Element pw = env_.power(env_.from_lie(v), l.p);
  Vector out(l.dim, 0);
  for (const auto& [m, c] : pw) {
    bool is_letter = false;
    for (std::size_t i = 0; i < l.dim; ++i)
      if (m == env_.letter(i)) {
        out[i] = c;
        is_letter = true;
      }
    if (!is_letter)
      throw Error(ErrorCode::IncoherentPMap, "v^p has a component on PBW monomial " + std::to_string(m) +
                                                 " outside the Lie part");
  }
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace rhh
