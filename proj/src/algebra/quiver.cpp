#include <algorithm>
#include <map>
#include <string>

#include "rhh/algebra.hpp"
#include "rhh/error.hpp"

namespace rhh {
namespace {

struct PathRec {
  int source;
  int target;
  std::vector<int> arrows;  // composition order; empty for the trivial path at `source`
};

bool path_less(const PathRec& a, const PathRec& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  if (a.arrows.empty()) return a.source < b.source;
  return a.arrows < b.arrows;
}

}  // namespace

FDCategory from_quiver(const QuiverPresentation& q) {
  PrimeField f(q.p);
  const int nv = static_cast<int>(q.vertices.size());
  if (nv == 0) throw Error(ErrorCode::BadParameter, "quiver has no vertices");
  if (q.truncation < 1) throw Error(ErrorCode::BadParameter, "truncation must be >= 1");
  for (const auto& a : q.arrows) {
    if (a.source < 0 || a.source >= nv || a.target < 0 || a.target >= nv) {
      throw Error(ErrorCode::BadParameter, "arrow " + a.name + " has an unknown vertex");
    }
  }
  const std::size_t L = static_cast<std::size_t>(q.truncation);

  // All paths of length < L.
  std::vector<PathRec> paths;
  for (int v = 0; v < nv; ++v) paths.push_back({v, v, {}});
  std::vector<PathRec> frontier = paths;
  for (std::size_t len = 1; len < L; ++len) {
    std::vector<PathRec> next;
    for (const auto& p : frontier) {
      for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
        const auto& arr = q.arrows[static_cast<std::size_t>(a)];
        if (arr.source != p.target) continue;
        PathRec np{p.source, arr.target, {a}};
        np.arrows.insert(np.arrows.end(), p.arrows.begin(), p.arrows.end());
        next.push_back(std::move(np));
      }
    }
    paths.insert(paths.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(paths.begin(), paths.end(), path_less);
  const std::size_t n = paths.size();
  std::map<std::vector<int>, std::size_t> index_of;  // nontrivial paths only
  for (std::size_t i = 0; i < n; ++i)
    if (!paths[i].arrows.empty()) index_of[paths[i].arrows] = i;

  // Coordinates are reversed so echelon pivots land on the largest path.
  auto col = [&](std::size_t i) { return n - 1 - i; };

  auto concat = [&](const std::vector<int>& left, const std::vector<int>& right) {
    std::vector<int> out(left);
    out.insert(out.end(), right.begin(), right.end());
    return out;
  };

  EchelonBasis ideal(f, n);
  for (std::size_t r = 0; r < q.relations.size(); ++r) {
    Vector v(n, 0);
    int src = -1, tgt = -1;
    for (const auto& term : q.relations[r]) {
      if (term.path.size() < 2) {
        throw Error(ErrorCode::BadParameter, "relation " + std::to_string(r) + " has a term of length < 2");
      }
      for (std::size_t k = 0; k < term.path.size(); ++k) {
        int a = term.path[k];
        if (a < 0 || static_cast<std::size_t>(a) >= q.arrows.size()) {
          throw Error(ErrorCode::BadParameter, "relation " + std::to_string(r) + " uses an unknown arrow");
        }
        if (k + 1 < term.path.size() &&
            q.arrows[static_cast<std::size_t>(a)].source != q.arrows[static_cast<std::size_t>(term.path[k + 1])].target) {
          throw Error(ErrorCode::BadParameter, "relation " + std::to_string(r) + " has a non-composable path");
        }
      }
      int ts = q.arrows[static_cast<std::size_t>(term.path.back())].source;
      int tt = q.arrows[static_cast<std::size_t>(term.path.front())].target;
      if (src < 0) {
        src = ts;
        tgt = tt;
      } else if (src != ts || tgt != tt) {
        throw Error(ErrorCode::BadParameter, "relation " + std::to_string(r) + " combines non-parallel paths");
      }
      if (term.path.size() > L) {
        throw Error(ErrorCode::TruncationTooSmall,
                    "relation " + std::to_string(r) + " has a term of length " + std::to_string(term.path.size()) +
                        " > truncation " + std::to_string(L));
      }
      if (term.path.size() == L) continue;  // already zero in the truncation
      std::size_t i = index_of.at(term.path);
      v[col(i)] = f.add(v[col(i)], f.from_int(term.coeff));
    }
    ideal.insert(v);
  }

  // Linear closure under left and right multiplication by arrows.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vector> current = ideal.rows();
    for (const auto& row : current) {
      for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
        Vector left(n, 0), right(n, 0);
        for (std::size_t c = 0; c < n; ++c) {
          if (row[c] == 0) continue;
          const PathRec& p = paths[n - 1 - c];
          const auto& arr = q.arrows[static_cast<std::size_t>(a)];
          if (p.arrows.size() + 1 >= L) continue;
          if (arr.source == p.target) {
            std::size_t i = index_of.at(concat({a}, p.arrows));
            left[col(i)] = f.add(left[col(i)], row[c]);
          }
          if (arr.target == p.source) {
            std::size_t i = index_of.at(concat(p.arrows, {a}));
            right[col(i)] = f.add(right[col(i)], row[c]);
          }
        }
        if (ideal.insert(left)) grew = true;
        if (ideal.insert(right)) grew = true;
      }
    }
  }

  std::vector<bool> is_pivot(n, false);
  for (auto c : ideal.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> basis_paths;
  std::vector<int> basis_pos(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_pivot[col(i)]) {
      basis_pos[i] = static_cast<int>(basis_paths.size());
      basis_paths.push_back(i);
    }
  }

  RawCategory raw;
  raw.p = q.p;
  raw.objects = q.vertices;
  for (std::size_t i : basis_paths) {
    const PathRec& p = paths[i];
    std::string name;
    if (p.arrows.empty()) {
      name = "e_" + q.vertices[static_cast<std::size_t>(p.source)];
    } else {
      for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        if (k) name += "*";
        name += q.arrows[static_cast<std::size_t>(p.arrows[k])].name;
      }
    }
    raw.basis.push_back({name, p.source, p.target});
  }
  auto normal_form = [&](std::size_t path_index) {
    Vector v(n, 0);
    v[col(path_index)] = 1;
    Vector r = ideal.reduce(v);
    SparseVector out;
    for (std::size_t c = n; c-- > 0;) {
      if (r[c] == 0) continue;
      std::size_t i = n - 1 - c;
      out.push_back({basis_pos[i], r[c]});
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    return out;
  };
  for (std::size_t gi = 0; gi < basis_paths.size(); ++gi) {
    const PathRec& g = paths[basis_paths[gi]];
    for (std::size_t fi = 0; fi < basis_paths.size(); ++fi) {
      const PathRec& h = paths[basis_paths[fi]];
      if (g.source != h.target) continue;
      std::vector<int> prod = concat(g.arrows, h.arrows);
      SparseVector value;
      if (prod.empty()) {
        value = {{basis_pos[basis_paths[gi]], 1}};
      } else if (prod.size() < L) {
        value = normal_form(index_of.at(prod));
      }
      if (!value.empty()) raw.products.push_back({static_cast<int>(gi), static_cast<int>(fi), std::move(value)});
    }
  }
  for (int v = 0; v < nv; ++v) {
    // trivial paths are the first nv entries in sorted order
    raw.units.push_back({{basis_pos[static_cast<std::size_t>(v)], 1}});
  }
  FDCategory out = validate_category(raw);
  out.set_label("quiver");
  return out;
}

}  // namespace rhh
