#include <algorithm>
#include <cctype>
#include <functional>
#include <string>

#include "rhh/algebra.hpp"
#include "rhh/error.hpp"

namespace rhh {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParameter, what);
}

void require_size(std::size_t dim, const std::string& what) {
  if (dim > kMaxCatalogDim) {
    throw Error(ErrorCode::ResourceBound,
                what + " would have dimension " + std::to_string(dim) + " > " + std::to_string(kMaxCatalogDim));
  }
}

FDCategory finish(const RawCategory& raw, std::string label) {
  FDCategory c = validate_category(raw);
  c.set_label(std::move(label));
  return c;
}

std::string monomial_name(const std::vector<int>& exps, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
  }
  return s.empty() ? "1" : s;
}

// Block matrices over a one-object algebra: object i owns sizes[i] consecutive
// matrix indices, and hom(a, b) = { E_rc (x) u : r in block b, c in block a }.
FDCategory matrix_blocks(const FDCategory& a, const std::vector<int>& sizes, const std::vector<std::string>& objects,
                         std::string label) {
  require(a.num_objects() == 1, "matrix constructions need a one-object algebra");
  int total = 0;
  std::vector<int> owner;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    require(sizes[i] >= 1, "matrix size must be >= 1");
    for (int k = 0; k < sizes[i]; ++k) owner.push_back(static_cast<int>(i));
    total += sizes[i];
  }
  const std::size_t da = a.dim();
  require_size(static_cast<std::size_t>(total * total) * da, label);
  RawCategory raw;
  raw.p = a.field().p();
  raw.objects = objects;
  // index of E_rc (x) u, ordered by (target object, source object, r, c, u)
  std::vector<int> idx(static_cast<std::size_t>(total * total) * da, -1);
  auto slot = [&](int r, int c, int u) { return (static_cast<std::size_t>(r) * total + c) * da + u; };
  for (std::size_t tb = 0; tb < sizes.size(); ++tb)
    for (std::size_t sa = 0; sa < sizes.size(); ++sa)
      for (int r = 0; r < total; ++r) {
        if (owner[static_cast<std::size_t>(r)] != static_cast<int>(tb)) continue;
        for (int c = 0; c < total; ++c) {
          if (owner[static_cast<std::size_t>(c)] != static_cast<int>(sa)) continue;
          for (std::size_t u = 0; u < da; ++u) {
            idx[slot(r, c, static_cast<int>(u))] = static_cast<int>(raw.basis.size());
            std::string name = "E" + std::to_string(r + 1) + std::to_string(c + 1) + "." + a.morphism(static_cast<int>(u)).name;
            raw.basis.push_back({name, static_cast<int>(sa), static_cast<int>(tb)});
          }
        }
      }
  for (int r = 0; r < total; ++r)
    for (int k = 0; k < total; ++k)
      for (int c = 0; c < total; ++c)
        for (std::size_t u = 0; u < da; ++u)
          for (std::size_t v = 0; v < da; ++v) {
            // (E_rk (x) u)(E_kc (x) v) = E_rc (x) uv
            const SparseVector& uv = a.compose(static_cast<int>(u), static_cast<int>(v));
            if (uv.empty()) continue;
            SparseVector val;
            for (const auto& t : uv) val.push_back({idx[slot(r, c, t.index)], t.coeff});
            raw.products.push_back({idx[slot(r, k, static_cast<int>(u))], idx[slot(k, c, static_cast<int>(v))], std::move(val)});
          }
  for (std::size_t ob = 0; ob < sizes.size(); ++ob) {
    SparseVector unit;
    for (int r = 0; r < total; ++r) {
      if (owner[static_cast<std::size_t>(r)] != static_cast<int>(ob)) continue;
      for (const auto& t : a.unit(0)) unit.push_back({idx[slot(r, r, t.index)], t.coeff});
    }
    std::sort(unit.begin(), unit.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
    raw.units.push_back(std::move(unit));
  }
  return finish(raw, std::move(label));
}

}  // namespace

FDCategory truncated_poly(std::uint32_t p, int n) {
  require(n >= 1, "truncated_poly needs n >= 1");
  require_size(static_cast<std::size_t>(n), "truncated_poly");
  RawCategory raw;
  raw.p = p;
  raw.objects = {"*"};
  for (int i = 0; i < n; ++i) raw.basis.push_back({monomial_name({i}, {"x"}), 0, 0});
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j) raw.products.push_back({i, j, {{i + j, 1}}});
  raw.units = {{{0, 1}}};
  return finish(raw, "truncated_poly(" + std::to_string(p) + "," + std::to_string(n) + ")");
}

FDCategory elem_abelian(std::uint32_t p, int r) {
  require(r >= 1, "elem_abelian needs r >= 1");
  std::size_t dim = 1;
  for (int i = 0; i < r; ++i) {
    dim *= p;
    require_size(dim, "elem_abelian");
  }
  std::vector<std::string> vars;
  for (int i = 0; i < r; ++i) vars.push_back("x" + std::to_string(i + 1));
  auto exps_of = [&](std::size_t m) {
    std::vector<int> e(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      e[static_cast<std::size_t>(i)] = static_cast<int>(m % p);
      m /= p;
    }
    return e;
  };
  RawCategory raw;
  raw.p = p;
  raw.objects = {"*"};
  for (std::size_t m = 0; m < dim; ++m) raw.basis.push_back({monomial_name(exps_of(m), vars), 0, 0});
  for (std::size_t m1 = 0; m1 < dim; ++m1)
    for (std::size_t m2 = 0; m2 < dim; ++m2) {
      auto e1 = exps_of(m1), e2 = exps_of(m2);
      std::size_t prod = 0, scale = 1;
      bool zero = false;
      for (int i = 0; i < r; ++i) {
        int e = e1[static_cast<std::size_t>(i)] + e2[static_cast<std::size_t>(i)];
        if (e >= static_cast<int>(p)) zero = true;
        prod += static_cast<std::size_t>(e) * scale;
        scale *= p;
      }
      if (!zero) raw.products.push_back({static_cast<int>(m1), static_cast<int>(m2), {{static_cast<int>(prod), 1}}});
    }
  raw.units = {{{0, 1}}};
  return finish(raw, "elem_abelian(" + std::to_string(p) + "," + std::to_string(r) + ")");
}

FDCategory qci(std::uint32_t p, int a, int b, long q) {
  PrimeField f(p);
  require(a >= 2 && b >= 2, "qci needs a, b >= 2");
  Residue qq = f.from_int(q);
  require(qq != 0, "qci needs q != 0 mod p");
  require_size(static_cast<std::size_t>(a * b), "qci");
  RawCategory raw;
  raw.p = p;
  raw.objects = {"*"};
  auto id = [&](int i, int j) { return i * b + j; };
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) raw.basis.push_back({monomial_name({i, j}, {"x", "y"}), 0, 0});
  // (x^i y^j)(x^k y^l) = q^{jk} x^{i+k} y^{j+l}, since y x = q x y.
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      for (int k = 0; k < a; ++k)
        for (int l = 0; l < b; ++l) {
          if (i + k >= a || j + l >= b) continue;
          raw.products.push_back({id(i, j), id(k, l), {{id(i + k, j + l), f.pow(qq, static_cast<std::uint64_t>(j * k))}}});
        }
  raw.units = {{{0, 1}}};
  return finish(raw, "qci(" + std::to_string(p) + "," + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(q) + ")");
}

FDCategory matrix_over(const FDCategory& a, int n) {
  require(n >= 1, "matrix_over needs n >= 1");
  return matrix_blocks(a, {n}, {"*"}, "matrix_over(" + a.label() + "," + std::to_string(n) + ")");
}

FDCategory full_two_object(const FDCategory& a) {
  return matrix_blocks(a, {1, 1}, {"a", "b"}, "full_two_object(" + a.label() + ")");
}

FDCategory morita_context(const FDCategory& a, int n) {
  require(n >= 1, "morita_context needs n >= 1");
  return matrix_blocks(a, {1, n}, {"P", "Q"}, "morita_context(" + a.label() + "," + std::to_string(n) + ")");
}

FDCategory opposite(const FDCategory& a) {
  RawCategory raw = a.raw();
  for (auto& m : raw.basis) std::swap(m.source, m.target);
  for (auto& pr : raw.products) std::swap(pr.left, pr.right);
  return finish(raw, "opposite(" + a.label() + ")");
}

// ---------------------------------------------------------------- expression parser

namespace {

struct CatalogParser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "catalog expression at column " + std::to_string(pos + 1) + ": " + what);
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  std::string ident() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (start == pos) fail("expected a name");
    return s.substr(start, pos - start);
  }
  long integer() {
    skip();
    std::size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos || (pos == start + 1 && s[start] == '-')) fail("expected an integer");
    return std::stol(s.substr(start, pos - start));
  }
  std::uint32_t prime() {
    long v = integer();
    if (v < 2) fail("expected a prime");
    return static_cast<std::uint32_t>(v);
  }

  FDCategory expr() {
    std::string name = ident();
    expect('(');
    FDCategory out = [&]() -> FDCategory {
      if (name == "truncated_poly") {
        auto p = prime();
        expect(',');
        int n = static_cast<int>(integer());
        return truncated_poly(p, n);
      }
      if (name == "elem_abelian") {
        auto p = prime();
        expect(',');
        int r = static_cast<int>(integer());
        return elem_abelian(p, r);
      }
      if (name == "qci") {
        auto p = prime();
        expect(',');
        int a = static_cast<int>(integer());
        expect(',');
        int b = static_cast<int>(integer());
        expect(',');
        long q = integer();
        return qci(p, a, b, q);
      }
      if (name == "matrix_over") {
        FDCategory a = expr();
        expect(',');
        int n = static_cast<int>(integer());
        return matrix_over(a, n);
      }
      if (name == "morita_context") {
        FDCategory a = expr();
        expect(',');
        int n = static_cast<int>(integer());
        return morita_context(a, n);
      }
      if (name == "opposite") return opposite(expr());
      if (name == "full_two_object") return full_two_object(expr());
      fail("unknown catalog entry '" + name + "'");
    }();
    expect(')');
    return out;
  }
};

}  // namespace

FDCategory catalog(const std::string& expr) {
  CatalogParser parser{expr};
  FDCategory c = parser.expr();
  parser.skip();
  if (parser.pos != expr.size()) parser.fail("trailing characters");
  return c;
}

const std::vector<std::string>& builtin_catalog() {
  static const std::vector<std::string> entries{
      "truncated_poly(2,2)", "truncated_poly(2,3)", "truncated_poly(3,2)", "truncated_poly(3,3)",
      "truncated_poly(5,2)", "truncated_poly(5,5)", "elem_abelian(2,2)", "elem_abelian(3,2)",
      "qci(3,2,2,2)", "opposite(qci(3,2,2,2))", "qci(5,2,2,2)", "matrix_over(truncated_poly(2,1),2)",
      "matrix_over(truncated_poly(2,2),2)", "full_two_object(truncated_poly(2,2))",
      "morita_context(truncated_poly(2,2),2)"};
  return entries;
}

}  // namespace rhh
