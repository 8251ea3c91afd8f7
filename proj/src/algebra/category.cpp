#include <algorithm>
#include <map>
#include <string>

#include "rhh/algebra.hpp"
#include "rhh/error.hpp"

namespace rhh {

SparseVector to_sparse(std::span<const Residue> dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) v.push_back({static_cast<int>(i), dense[i]});
  }
  return v;
}

Vector to_dense(const SparseVector& v, std::size_t dim) {
  Vector out(dim, 0);
  for (const auto& t : v) out[static_cast<std::size_t>(t.index)] = t.coeff;
  return out;
}

namespace {

SparseVector normalize(const PrimeField& f, const SparseVector& v) {
  std::map<int, Residue> acc;
  for (const auto& t : v) acc[t.index] = f.add(acc[t.index], t.coeff % f.p());
  SparseVector out;
  for (auto [i, c] : acc)
    if (c != 0) out.push_back({i, c});
  return out;
}

std::string describe(const RawCategory& raw, int u) {
  return std::to_string(u) + " (" + raw.basis[static_cast<std::size_t>(u)].name + ")";
}

}  // namespace

bool FDCategory::has_unit_basis() const {
  return std::all_of(unit_index_.begin(), unit_index_.end(), [](const auto& u) { return u.has_value(); });
}

Vector FDCategory::multiply(std::span<const Residue> x, std::span<const Residue> y) const {
  const std::size_t d = dim();
  Vector out(d, 0);
  for (std::size_t g = 0; g < d; ++g) {
    if (x[g] == 0) continue;
    for (std::size_t f = 0; f < d; ++f) {
      if (y[f] == 0 || basis_[g].source != basis_[f].target) continue;
      Residue c = field_.mul(x[g], y[f]);
      for (const auto& t : comp_[g * d + f]) {
        out[static_cast<std::size_t>(t.index)] = field_.add(out[static_cast<std::size_t>(t.index)], field_.mul(c, t.coeff));
      }
    }
  }
  return out;
}

RawCategory FDCategory::raw() const {
  RawCategory r;
  r.p = field_.p();
  r.objects = objects_;
  r.basis = basis_;
  const std::size_t d = dim();
  for (std::size_t g = 0; g < d; ++g)
    for (std::size_t f = 0; f < d; ++f)
      if (!comp_[g * d + f].empty()) r.products.push_back({static_cast<int>(g), static_cast<int>(f), comp_[g * d + f]});
  r.units = units_;
  return r;
}

FDCategory validate_category(const RawCategory& raw) {
  FDCategory c{PrimeField(raw.p)};
  const PrimeField& f = c.field_;
  if (raw.objects.empty()) throw Error(ErrorCode::DimensionMismatch, "category has no objects");
  if (raw.basis.empty()) throw Error(ErrorCode::DimensionMismatch, "category has total dimension 0");
  c.objects_ = raw.objects;
  c.basis_ = raw.basis;
  const int k = static_cast<int>(raw.objects.size());
  const std::size_t d = raw.basis.size();
  c.blocks_.assign(static_cast<std::size_t>(k * k), {});
  c.local_.assign(d, 0);
  for (std::size_t u = 0; u < d; ++u) {
    const auto& m = raw.basis[u];
    if (m.source < 0 || m.source >= k || m.target < 0 || m.target >= k) {
      throw Error(ErrorCode::DimensionMismatch, "basis element " + describe(raw, static_cast<int>(u)) + " has an unknown object");
    }
    auto& blk = c.blocks_[c.block_id(m.source, m.target)];
    c.local_[u] = static_cast<int>(blk.size());
    blk.push_back(static_cast<int>(u));
  }

  auto check_block = [&](const SparseVector& v, int a, int b, const std::string& what) {
    for (const auto& t : v) {
      if (t.index < 0 || static_cast<std::size_t>(t.index) >= d || c.basis_[static_cast<std::size_t>(t.index)].source != a ||
          c.basis_[static_cast<std::size_t>(t.index)].target != b) {
        throw Error(ErrorCode::DimensionMismatch, what + " has a term outside hom(" + raw.objects[static_cast<std::size_t>(a)] +
                                                      ", " + raw.objects[static_cast<std::size_t>(b)] + ")");
      }
    }
  };

  c.comp_.assign(d * d, {});
  std::vector<bool> seen(d * d, false);
  for (const auto& pr : raw.products) {
    if (pr.left < 0 || pr.right < 0 || static_cast<std::size_t>(pr.left) >= d || static_cast<std::size_t>(pr.right) >= d) {
      throw Error(ErrorCode::DimensionMismatch, "product refers to an unknown basis element");
    }
    const auto& g = c.basis_[static_cast<std::size_t>(pr.left)];
    const auto& h = c.basis_[static_cast<std::size_t>(pr.right)];
    std::string what = "product " + describe(raw, pr.left) + " * " + describe(raw, pr.right);
    if (g.source != h.target) throw Error(ErrorCode::DimensionMismatch, what + " is not composable");
    std::size_t idx = static_cast<std::size_t>(pr.left) * d + static_cast<std::size_t>(pr.right);
    if (seen[idx]) throw Error(ErrorCode::DimensionMismatch, what + " is given twice");
    seen[idx] = true;
    check_block(pr.value, h.source, g.target, what);
    c.comp_[idx] = normalize(f, pr.value);
  }

  if (raw.units.size() != static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::DimensionMismatch, "expected one unit per object");
  }
  c.units_.clear();
  c.unit_index_.clear();
  for (int a = 0; a < k; ++a) {
    check_block(raw.units[static_cast<std::size_t>(a)], a, a, "unit of " + raw.objects[static_cast<std::size_t>(a)]);
    SparseVector u = normalize(f, raw.units[static_cast<std::size_t>(a)]);
    c.unit_index_.push_back(u.size() == 1 && u[0].coeff == 1 ? std::optional<int>(u[0].index) : std::nullopt);
    c.units_.push_back(std::move(u));
  }

  // Unit laws.
  Vector acc(d, 0);
  auto add_into = [&](const SparseVector& v, Residue s) {
    for (const auto& t : v) acc[static_cast<std::size_t>(t.index)] = f.add(acc[static_cast<std::size_t>(t.index)], f.mul(s, t.coeff));
  };
  auto acc_is_basis = [&](std::size_t u) {
    for (std::size_t i = 0; i < d; ++i)
      if (acc[i] != (i == u ? 1u : 0u)) return false;
    return true;
  };
  for (std::size_t u = 0; u < d; ++u) {
    const auto& m = c.basis_[u];
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& t : c.units_[static_cast<std::size_t>(m.target)]) add_into(c.compose(t.index, static_cast<int>(u)), t.coeff);
    if (!acc_is_basis(u)) throw Error(ErrorCode::UnitViolation, "left unit law fails on basis element " + describe(raw, static_cast<int>(u)));
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& t : c.units_[static_cast<std::size_t>(m.source)]) add_into(c.compose(static_cast<int>(u), t.index), t.coeff);
    if (!acc_is_basis(u)) throw Error(ErrorCode::UnitViolation, "right unit law fails on basis element " + describe(raw, static_cast<int>(u)));
  }

  // Associativity on every composable triple (h, g, e): (hg)e = h(ge).
  Vector lhs(d, 0), rhs(d, 0);
  for (std::size_t h = 0; h < d; ++h) {
    for (std::size_t g = 0; g < d; ++g) {
      if (c.basis_[h].source != c.basis_[g].target) continue;
      const SparseVector& hg = c.comp_[h * d + g];
      for (std::size_t e = 0; e < d; ++e) {
        if (c.basis_[g].source != c.basis_[e].target) continue;
        const SparseVector& ge = c.comp_[g * d + e];
        if (hg.empty() && ge.empty()) continue;
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& t : hg)
          for (const auto& s : c.comp_[static_cast<std::size_t>(t.index) * d + e])
            lhs[static_cast<std::size_t>(s.index)] = f.add(lhs[static_cast<std::size_t>(s.index)], f.mul(t.coeff, s.coeff));
        for (const auto& t : ge)
          for (const auto& s : c.comp_[h * d + static_cast<std::size_t>(t.index)])
            rhs[static_cast<std::size_t>(s.index)] = f.add(rhs[static_cast<std::size_t>(s.index)], f.mul(t.coeff, s.coeff));
        if (lhs != rhs) {
          throw Error(ErrorCode::AssociativityViolation,
                      "triple (" + describe(raw, static_cast<int>(h)) + ", " + describe(raw, static_cast<int>(g)) + ", " +
                          describe(raw, static_cast<int>(e)) + ")");
        }
      }
    }
  }
  return c;
}

FDCategory with_unit_basis(const FDCategory& c) {
  if (c.has_unit_basis()) return c;
  const PrimeField& f = c.field();
  const std::size_t d = c.dim();
  RawCategory raw = c.raw();
  // new basis f_j = e_j except f_piv(a) = id_a.
  std::vector<int> pivot_of_object(c.num_objects(), -1);
  std::vector<int> object_of_pivot(d, -1);
  for (std::size_t a = 0; a < c.num_objects(); ++a) {
    if (c.unit_index(static_cast<int>(a))) continue;
    int piv = c.unit(static_cast<int>(a)).front().index;
    pivot_of_object[a] = piv;
    object_of_pivot[static_cast<std::size_t>(piv)] = static_cast<int>(a);
    raw.basis[static_cast<std::size_t>(piv)].name = "id_" + c.objects()[a];
  }
  auto new_to_old = [&](int j) {
    int a = object_of_pivot[static_cast<std::size_t>(j)];
    if (a < 0) return to_dense({{j, 1}}, d);
    return to_dense(c.unit(a), d);
  };
  auto old_to_new = [&](Vector v) {
    for (std::size_t a = 0; a < c.num_objects(); ++a) {
      int piv = pivot_of_object[a];
      if (piv < 0) continue;
      Residue vp = v[static_cast<std::size_t>(piv)];
      if (vp == 0) continue;
      const SparseVector& u = c.unit(static_cast<int>(a));
      Residue cp = u.front().coeff;
      Residue s = f.mul(vp, f.inv(cp));
      for (const auto& t : u) {
        if (t.index == piv) continue;
        v[static_cast<std::size_t>(t.index)] = f.sub(v[static_cast<std::size_t>(t.index)], f.mul(s, t.coeff));
      }
      v[static_cast<std::size_t>(piv)] = s;
    }
    return v;
  };
  raw.products.clear();
  for (std::size_t g = 0; g < d; ++g) {
    Vector vg = new_to_old(static_cast<int>(g));
    for (std::size_t e = 0; e < d; ++e) {
      if (c.source(static_cast<int>(g)) != c.target(static_cast<int>(e))) continue;
      Vector prod = old_to_new(c.multiply(vg, new_to_old(static_cast<int>(e))));
      SparseVector sv = to_sparse(prod);
      if (!sv.empty()) raw.products.push_back({static_cast<int>(g), static_cast<int>(e), std::move(sv)});
    }
  }
  for (std::size_t a = 0; a < c.num_objects(); ++a) {
    raw.units[a] = to_sparse(old_to_new(to_dense(c.unit(static_cast<int>(a)), d)));
  }
  FDCategory out = validate_category(raw);
  out.set_label(c.label());
  return out;
}

std::vector<int> subcategory_embedding(const FDCategory& c, std::span<const int> objects) {
  std::vector<int> pos(c.num_objects(), -1);
  for (std::size_t i = 0; i < objects.size(); ++i) pos[static_cast<std::size_t>(objects[i])] = static_cast<int>(i);
  std::vector<int> emb;
  for (std::size_t u = 0; u < c.dim(); ++u) {
    if (pos[static_cast<std::size_t>(c.source(static_cast<int>(u)))] >= 0 &&
        pos[static_cast<std::size_t>(c.target(static_cast<int>(u)))] >= 0)
      emb.push_back(static_cast<int>(u));
  }
  return emb;
}

FDCategory full_subcategory(const FDCategory& c, std::span<const int> objects) {
  if (objects.empty()) throw Error(ErrorCode::EmptySubset, "object subset is empty");
  std::vector<int> pos(c.num_objects(), -1);
  for (std::size_t i = 0; i < objects.size(); ++i) {
    int a = objects[i];
    if (a < 0 || static_cast<std::size_t>(a) >= c.num_objects() || pos[static_cast<std::size_t>(a)] >= 0) {
      throw Error(ErrorCode::BadParameter, "invalid or repeated object in subset");
    }
    pos[static_cast<std::size_t>(a)] = static_cast<int>(i);
  }
  std::vector<int> emb = subcategory_embedding(c, objects);
  std::vector<int> back(c.dim(), -1);
  for (std::size_t i = 0; i < emb.size(); ++i) back[static_cast<std::size_t>(emb[i])] = static_cast<int>(i);

  RawCategory raw;
  raw.p = c.field().p();
  for (int a : objects) raw.objects.push_back(c.objects()[static_cast<std::size_t>(a)]);
  for (int u : emb) {
    Morphism m = c.morphism(u);
    m.source = pos[static_cast<std::size_t>(m.source)];
    m.target = pos[static_cast<std::size_t>(m.target)];
    raw.basis.push_back(m);
  }
  auto remap = [&](const SparseVector& v) {
    SparseVector out;
    for (const auto& t : v) out.push_back({back[static_cast<std::size_t>(t.index)], t.coeff});
    return out;
  };
  for (int g : emb)
    for (int e : emb)
      if (c.source(g) == c.target(e) && !c.compose(g, e).empty())
        raw.products.push_back({back[static_cast<std::size_t>(g)], back[static_cast<std::size_t>(e)], remap(c.compose(g, e))});
  for (int a : objects) raw.units.push_back(remap(c.unit(a)));
  FDCategory out = validate_category(raw);
  out.set_label(c.label() + "|sub");
  return out;
}

}  // namespace rhh
