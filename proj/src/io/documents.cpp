#include <fstream>
#include <sstream>

#include "rhh/error.hpp"
#include "rhh/io.hpp"

namespace rhh::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string join(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

long as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

int as_index(const Json& j, const std::string& path, std::size_t bound) {
  long v = as_int(j, path);
  if (v < 0 || static_cast<std::size_t>(v) >= bound)
    fail(path, "index " + std::to_string(v) + " out of range [0," + std::to_string(bound) + ")");
  return static_cast<int>(v);
}

// Sparse coordinates: [[index, coeff], ...].
SparseVector parse_sparse(const Json& j, const std::string& path, std::size_t dim, const PrimeField& f) {
  std::map<int, Residue> acc;
  const Json& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string ip = join(path, i);
    const Json& t = as_array(arr[i], ip);
    if (t.size() != 2) fail(ip, "expected [index, coefficient]");
    int idx = as_index(t[0], join(ip, 0), dim);
    Residue c = f.from_int(as_int(t[1], join(ip, 1)));
    acc[idx] = f.add(acc[idx], c);
  }
  SparseVector v;
  for (auto [idx, c] : acc)
    if (c != 0) v.push_back({idx, c});
  return v;
}

Json sparse_json(const SparseVector& v) {
  Json a = Json::array();
  for (const Term& t : v) a.push_back({t.index, t.coeff});
  return a;
}

int object_index(const Json& j, const std::string& path, const std::vector<std::string>& names) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<int>(i);
    fail(path, "unknown name '" + s + "'");
  }
  return as_index(j, path, names.size());
}

std::vector<std::string> name_list(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  const Json& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_string(arr[i], join(path, i)));
  return out;
}

FDCategory parse_structure_constants(const Json& pl, std::uint32_t p) {
  const std::string P = "payload";
  RawCategory raw;
  raw.p = p;
  PrimeField f(p);
  raw.objects = name_list(member(pl, "objects", P), join(P, "objects"));
  if (raw.objects.empty()) fail(join(P, "objects"), "needs at least one object");
  const std::string bp = join(P, "basis");
  const Json& basis = as_array(member(pl, "basis", P), bp);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string ip = join(bp, i);
    Morphism m;
    m.name = as_string(member(basis[i], "name", ip), join(ip, "name"));
    m.source = object_index(member(basis[i], "source", ip), join(ip, "source"), raw.objects);
    m.target = object_index(member(basis[i], "target", ip), join(ip, "target"), raw.objects);
    raw.basis.push_back(std::move(m));
  }
  const std::size_t dim = raw.basis.size();
  const std::string up = join(P, "units");
  const Json& units = as_array(member(pl, "units", P), up);
  if (units.size() != raw.objects.size()) fail(up, "expected one unit per object");
  for (std::size_t i = 0; i < units.size(); ++i) raw.units.push_back(parse_sparse(units[i], join(up, i), dim, f));
  const std::string pp = join(P, "products");
  const Json& prods = as_array(member(pl, "products", P), pp);
  for (std::size_t i = 0; i < prods.size(); ++i) {
    const std::string ip = join(pp, i);
    const Json& t = as_array(prods[i], ip);
    if (t.size() != 3) fail(ip, "expected [g, f, value] meaning g∘f = value");
    RawCategory::Product pr;
    pr.left = as_index(t[0], join(ip, 0), dim);
    pr.right = as_index(t[1], join(ip, 1), dim);
    pr.value = parse_sparse(t[2], join(ip, 2), dim, f);
    raw.products.push_back(std::move(pr));
  }
  return validate_category(raw);
}

FDCategory parse_quiver(const Json& pl, std::uint32_t p) {
  const std::string P = "payload";
  QuiverPresentation q;
  q.p = p;
  q.vertices = name_list(member(pl, "vertices", P), join(P, "vertices"));
  const std::string ap = join(P, "arrows");
  const Json& arrows = as_array(member(pl, "arrows", P), ap);
  std::vector<std::string> arrow_names;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::string ip = join(ap, i);
    QuiverPresentation::Arrow a;
    a.name = as_string(member(arrows[i], "name", ip), join(ip, "name"));
    a.source = object_index(member(arrows[i], "source", ip), join(ip, "source"), q.vertices);
    a.target = object_index(member(arrows[i], "target", ip), join(ip, "target"), q.vertices);
    arrow_names.push_back(a.name);
    q.arrows.push_back(std::move(a));
  }
  const std::string rp = join(P, "relations");
  if (pl.contains("relations")) {
    const Json& rels = as_array(pl["relations"], rp);
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const std::string ip = join(rp, i);
      std::vector<QuiverPresentation::RelationTerm> rel;
      const Json& terms = as_array(rels[i], ip);
      for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string kp = join(ip, k);
        QuiverPresentation::RelationTerm t;
        t.coeff = as_int(member(terms[k], "coeff", kp), join(kp, "coeff"));
        const std::string pathp = join(kp, "path");
        const Json& path = as_array(member(terms[k], "path", kp), pathp);
        for (std::size_t m = 0; m < path.size(); ++m) t.path.push_back(object_index(path[m], join(pathp, m), arrow_names));
        rel.push_back(std::move(t));
      }
      q.relations.push_back(std::move(rel));
    }
  }
  q.truncation = static_cast<int>(as_int(member(pl, "truncation", P), join(P, "truncation")));
  return from_quiver(q);
}

RestrictedLie parse_lie(const Json& pl, std::uint32_t p) {
  const std::string P = "payload";
  PrimeField f(p);
  long dim = as_int(member(pl, "dim", P), join(P, "dim"));
  if (dim < 0 || dim > 64) fail(join(P, "dim"), "expected 0 <= dim <= 64");
  const auto n = static_cast<std::size_t>(dim);
  RestrictedLie l = zero_lie(p, n);
  auto vec = [&](const Json& j, const std::string& path) {
    const Json& arr = as_array(j, path);
    if (arr.size() != n) fail(path, "expected " + std::to_string(n) + " coordinates");
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = f.from_int(as_int(arr[i], join(path, i)));
    return v;
  };
  if (pl.contains("names")) {
    l.names = name_list(pl["names"], join(P, "names"));
    if (l.names.size() != n) fail(join(P, "names"), "expected " + std::to_string(n) + " names");
  }
  const std::string bp = join(P, "bracket");
  const Json& br = as_array(member(pl, "bracket", P), bp);
  for (std::size_t k = 0; k < br.size(); ++k) {
    const std::string ip = join(bp, k);
    const Json& t = as_array(br[k], ip);
    if (t.size() != 3) fail(ip, "expected [i, j, coordinates of [e_i, e_j]]");
    auto i = static_cast<std::size_t>(as_index(t[0], join(ip, 0), n));
    auto j = static_cast<std::size_t>(as_index(t[1], join(ip, 1), n));
    Vector v = vec(t[2], join(ip, 2));
    l.bracket[i][j] = v;
    for (auto& c : v) c = f.neg(c);
    if (i != j) l.bracket[j][i] = v;
  }
  const std::string mp = join(P, "pmap");
  const Json& pm = as_array(member(pl, "pmap", P), mp);
  if (pm.size() != n) fail(mp, "expected one row per basis element");
  for (std::size_t i = 0; i < n; ++i) l.pmap[i] = vec(pm[i], join(mp, i));
  RestrictedReport r = verify_restricted(l);
  if (!r.ok) {
    std::string what = "restricted_lie_fixture fails verification";
    if (!r.violations.empty()) what += ": " + r.violations.front();
    throw Error(ErrorCode::IncoherentPMap, what);
  }
  return l;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

std::string to_string(InputKind k) {
  switch (k) {
    case InputKind::StructureConstants: return "structure_constants";
    case InputKind::Quiver: return "quiver";
    case InputKind::Catalog: return "catalog";
    case InputKind::RestrictedLieFixture: return "restricted_lie_fixture";
  }
  return "?";
}

InputDocument parse_document(const Json& j) {
  InputDocument doc;
  if (!j.is_object()) fail("(document)", "expected an object");
  doc.format_version = static_cast<int>(as_int(member(j, "format_version", ""), "format_version"));
  if (doc.format_version != kFormatVersion)
    fail("format_version", "unsupported version " + std::to_string(doc.format_version));
  long p = as_int(member(j, "p", ""), "p");
  if (p < 2 || p > 65521) fail("p", "expected a prime below 2^16");
  doc.p = static_cast<std::uint32_t>(p);
  std::string kind = as_string(member(j, "kind", ""), "kind");
  const Json& pl = member(j, "payload", "");
  if (j.contains("id")) doc.id = as_string(j["id"], "id");
  if (kind == "structure_constants") {
    doc.kind = InputKind::StructureConstants;
    doc.category = parse_structure_constants(pl, doc.p);
  } else if (kind == "quiver") {
    doc.kind = InputKind::Quiver;
    doc.category = parse_quiver(pl, doc.p);
  } else if (kind == "catalog") {
    doc.kind = InputKind::Catalog;
    std::string expr = as_string(member(pl, "expr", "payload"), "payload.expr");
    doc.category = catalog(expr);
    if (doc.category->field().p() != doc.p)
      fail("p", "document says " + std::to_string(doc.p) + " but '" + expr + "' is over F_" +
                    std::to_string(doc.category->field().p()));
    if (doc.id.empty()) doc.id = expr;
  } else if (kind == "restricted_lie_fixture") {
    doc.kind = InputKind::RestrictedLieFixture;
    doc.lie = parse_lie(pl, doc.p);
  } else {
    fail("kind", "unknown kind '" + kind + "'");
  }
  if (doc.category) {
    if (doc.id.empty()) doc.id = doc.category->label();
    if (doc.category->label().empty()) doc.category->set_label(doc.id);
  }
  return doc;
}

InputDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + " line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  InputDocument doc = parse_document(j);
  if (doc.id.empty()) doc.id = path.filename().string();
  return doc;
}

Json category_document(const FDCategory& c) {
  RawCategory raw = c.raw();
  Json basis = Json::array();
  for (const Morphism& m : raw.basis) basis.push_back({{"name", m.name}, {"source", m.source}, {"target", m.target}});
  Json units = Json::array();
  for (const auto& u : raw.units) units.push_back(sparse_json(u));
  Json prods = Json::array();
  for (const auto& pr : raw.products) prods.push_back({pr.left, pr.right, sparse_json(pr.value)});
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["p"] = raw.p;
  doc["kind"] = "structure_constants";
  if (!c.label().empty()) doc["id"] = c.label();
  doc["payload"] = {{"objects", raw.objects}, {"basis", basis}, {"units", units}, {"products", prods}};
  return doc;
}

Json quiver_document(const QuiverPresentation& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows) arrows.push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
  Json rels = Json::array();
  for (const auto& rel : q.relations) {
    Json r = Json::array();
    for (const auto& t : rel) r.push_back({{"coeff", t.coeff}, {"path", t.path}});
    rels.push_back(r);
  }
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["p"] = q.p;
  doc["kind"] = "quiver";
  doc["payload"] = {{"vertices", q.vertices}, {"arrows", arrows}, {"relations", rels}, {"truncation", q.truncation}};
  return doc;
}

Json lie_document(const RestrictedLie& l) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["p"] = l.p;
  doc["kind"] = "restricted_lie_fixture";
  doc["payload"] = to_json(l);
  return doc;
}

Json to_json(const RestrictedLie& l) {
  Json br = Json::array();
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = i + 1; j < l.dim; ++j)
      if (!is_zero(l.bracket[i][j])) br.push_back({i, j, l.bracket[i][j]});
  Json out;
  out["dim"] = l.dim;
  if (!l.names.empty()) out["names"] = l.names;
  out["bracket"] = br;
  out["pmap"] = l.pmap;
  return out;
}

Json to_json(const Fingerprint& fp) {
  return {{"dim", fp.dim},
          {"center_dim", fp.center_dim},
          {"derived_series", fp.derived_series},
          {"lower_central_series", fp.lower_central_series},
          {"center_pmap_rank", fp.center_pmap_rank},
          {"center_p_nilradical", fp.center_p_nilradical},
          {"max_torus", fp.max_torus},
          {"torus_mode", to_string(fp.torus_mode)},
          {"torus_definition", "abelian restricted subalgebra with injective p-map, exact over F_p"}};
}

Json to_json(const PrimeMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_vector(r));
  return rows;
}

Json to_json(const Failure& f) {
  Json w = Json::object();
  for (const auto& [k, v] : f.witness) w[k] = v;
  return {{"check", f.check}, {"trial", f.trial}, {"witness", w}};
}

void write_atomic(const std::filesystem::path& path, const Json& doc) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::BadParameter, "cannot write " + tmp.string());
    out << doc.dump(2) << "\n";
    out.flush();
    if (!out) throw Error(ErrorCode::BadParameter, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace rhh::io
