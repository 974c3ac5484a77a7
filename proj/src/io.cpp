#include "fbal/io.hpp"

#include <fstream>
#include <set>

namespace fbal {

using nlohmann::json;

namespace {

const json& required(const json& j, const std::string& at, const char* key) {
  if (!j.is_object()) throw SpecError(at.empty() ? "/" : at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SpecError(at + "/" + key, "missing field");
  return *it;
}

std::string as_string(const json& j, const std::string& at) {
  if (!j.is_string()) throw SpecError(at, "expected a string");
  return j.get<std::string>();
}

std::int64_t as_int(const json& j, const std::string& at) {
  if (!j.is_number_integer()) throw SpecError(at, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t as_size(const json& j, const std::string& at) {
  std::int64_t v = as_int(j, at);
  if (v < 0) throw SpecError(at, "expected a non-negative integer");
  return std::size_t(v);
}

void check_schema(const json& j, const std::string& at, const char* expected) {
  auto it = j.find("schema");
  if (it == j.end()) return;
  std::string s = as_string(*it, at + "/schema");
  if (s != expected) throw SpecError(at + "/schema", "unsupported schema '" + s + "', expected '" + expected + "'");
}

std::size_t vertex_ref(const json& j, const std::string& at, const std::vector<std::string>& vertices) {
  if (j.is_number_integer()) {
    std::size_t v = as_size(j, at);
    if (v >= vertices.size()) throw SpecError(at, "vertex index out of range");
    return v;
  }
  std::string name = as_string(j, at);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  throw SpecError(at, "unknown vertex '" + name + "'");
}

Matrix matrix_from_json(const json& j, const std::string& at, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw SpecError(at, "expected an array of rows");
  if (j.size() != rows && !(rows == 0 && j.empty()))
    throw SpecError(at, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Matrix m(rows, cols);
  const std::int64_t p = field::prime();
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rat = at + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols)
      throw SpecError(rat, "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string cat = rat + "/" + std::to_string(c);
      std::int64_t v = as_int(j[r][c], cat);
      if (v < 0 || v >= p) throw SpecError(cat, "entry " + std::to_string(v) + " is not a residue mod " + std::to_string(p));
      m(r, c) = Scalar(v);
    }
  }
  return m;
}

}  // namespace

QuiverSpec quiver_spec_from_json(const json& j, const std::string& at) {
  check_schema(j, at, kQuiverSchema);
  QuiverSpec q;
  const json& vs = required(j, at, "vertices");
  if (!vs.is_array() || vs.empty()) throw SpecError(at + "/vertices", "expected a non-empty array of names");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string name = as_string(vs[i], at + "/vertices/" + std::to_string(i));
    if (!seen.insert(name).second) throw SpecError(at + "/vertices/" + std::to_string(i), "duplicate vertex '" + name + "'");
    q.vertices.push_back(name);
  }
  std::set<std::string> arrow_names;
  if (auto it = j.find("arrows"); it != j.end()) {
    if (!it->is_array()) throw SpecError(at + "/arrows", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string aat = at + "/arrows/" + std::to_string(i);
      const json& a = (*it)[i];
      Arrow arrow;
      arrow.name = as_string(required(a, aat, "name"), aat + "/name");
      if (!arrow_names.insert(arrow.name).second) throw SpecError(aat + "/name", "duplicate arrow '" + arrow.name + "'");
      arrow.source = vertex_ref(required(a, aat, "source"), aat + "/source", q.vertices);
      arrow.target = vertex_ref(required(a, aat, "target"), aat + "/target", q.vertices);
      q.arrows.push_back(arrow);
    }
  }
  if (auto it = j.find("relations"); it != j.end()) {
    if (!it->is_array()) throw SpecError(at + "/relations", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string rat = at + "/relations/" + std::to_string(i);
      const json& r = (*it)[i];
      if (!r.is_array() || r.empty()) throw SpecError(rat, "expected a non-empty array of terms");
      Relation rel;
      for (std::size_t t = 0; t < r.size(); ++t) {
        const std::string tat = rat + "/" + std::to_string(t);
        RelationTerm term;
        if (auto c = r[t].find("coeff"); r[t].is_object() && c != r[t].end()) term.coeff = as_int(*c, tat + "/coeff");
        const json& path = required(r[t], tat, "path");
        if (!path.is_array() || path.empty()) throw SpecError(tat + "/path", "expected a non-empty array of arrow names");
        for (std::size_t s = 0; s < path.size(); ++s) {
          std::string name = as_string(path[s], tat + "/path/" + std::to_string(s));
          if (!arrow_names.count(name)) throw SpecError(tat + "/path/" + std::to_string(s), "unknown arrow '" + name + "'");
          term.arrows.push_back(name);
        }
        rel.terms.push_back(std::move(term));
      }
      q.relations.push_back(std::move(rel));
    }
  }
  if (auto it = j.find("length_bound"); it != j.end()) {
    q.length_bound = as_size(*it, at + "/length_bound");
    if (q.length_bound == 0) throw SpecError(at + "/length_bound", "must be at least 1");
  } else if (!q.arrows.empty()) {
    throw SpecError(at + "/length_bound", "missing field (required when there are arrows)");
  }
  return q;
}

json to_json(const QuiverSpec& q) {
  json j;
  j["schema"] = kQuiverSchema;
  j["vertices"] = q.vertices;
  j["arrows"] = json::array();
  for (const auto& a : q.arrows)
    j["arrows"].push_back({{"name", a.name}, {"source", q.vertices[a.source]}, {"target", q.vertices[a.target]}});
  j["relations"] = json::array();
  for (const auto& r : q.relations) {
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back({{"coeff", t.coeff}, {"path", t.arrows}});
    j["relations"].push_back(terms);
  }
  j["length_bound"] = q.length_bound;
  return j;
}

Rep rep_from_json(const BoundQuiver& q, const json& j, const std::string& at) {
  check_schema(j, at, kRepSchema);
  Variance v = Variance::contravariant;
  if (auto it = j.find("variance"); j.is_object() && it != j.end()) {
    std::string s = as_string(*it, at + "/variance");
    if (s == "covariant") v = Variance::covariant;
    else if (s != "contravariant") throw SpecError(at + "/variance", "expected 'contravariant' or 'covariant'");
  }
  const auto& vertices = q.spec.vertices;
  const json& dj = required(j, at, "dims");
  std::vector<std::size_t> dims(vertices.size(), 0);
  if (dj.is_array()) {
    if (dj.size() != vertices.size())
      throw SpecError(at + "/dims", "expected " + std::to_string(vertices.size()) + " entries");
    for (std::size_t i = 0; i < dj.size(); ++i) dims[i] = as_size(dj[i], at + "/dims/" + std::to_string(i));
  } else if (dj.is_object()) {
    for (const auto& [k, val] : dj.items()) dims[vertex_ref(json(k), at + "/dims/" + k, vertices)] = as_size(val, at + "/dims/" + k);
  } else {
    throw SpecError(at + "/dims", "expected an array or an object keyed by vertex");
  }
  std::vector<Matrix> mats;
  const json* aj = nullptr;
  if (auto it = j.find("arrows"); it != j.end()) {
    if (!it->is_object()) throw SpecError(at + "/arrows", "expected an object keyed by arrow name");
    aj = &*it;
    for (const auto& [k, val] : it->items()) {
      bool known = false;
      for (const auto& a : q.spec.arrows) known = known || a.name == k;
      if (!known) throw SpecError(at + "/arrows/" + k, "unknown arrow");
    }
  }
  for (const auto& a : q.spec.arrows) {
    std::size_t from = v == Variance::contravariant ? a.target : a.source;
    std::size_t to = v == Variance::contravariant ? a.source : a.target;
    if (aj && aj->contains(a.name))
      mats.push_back(matrix_from_json((*aj)[a.name], at + "/arrows/" + a.name, dims[to], dims[from]));
    else
      mats.emplace_back(dims[to], dims[from]);
  }
  try {
    return rep_from_arrows(q, v, dims, mats);
  } catch (const QuiverError& e) {
    throw SpecError(at.empty() ? "/" : at, e.what());
  }
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

json rep_to_json(const BoundQuiver& q, const Rep& r) {
  json j;
  j["schema"] = kRepSchema;
  j["variance"] = to_string(r.variance());
  j["dims"] = r.dims();
  j["arrows"] = json::object();
  for (std::size_t k = 0; k < q.spec.arrows.size(); ++k) {
    const BasisMorphism& b = q.arrow_basis[k];
    j["arrows"][q.spec.arrows[k].name] = to_json(r.act(b.source, b.target, b.index));
  }
  return j;
}

json rep_actions_to_json(const Rep& r) {
  const FinCategory& c = r.category();
  json j;
  j["schema"] = kActionRepSchema;
  j["variance"] = to_string(r.variance());
  j["objects"] = c.names();
  j["dims"] = r.dims();
  j["actions"] = json::array();
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b)
      for (std::size_t i = 0; i < c.hom_dim(a, b); ++i)
        j["actions"].push_back({{"source", a}, {"target", b}, {"index", i}, {"matrix", to_json(r.act(a, b, i))}});
  return j;
}

json to_json(const RepMorphism& u) {
  json comps = json::array();
  for (const auto& c : u.components) comps.push_back(to_json(c));
  return {{"source_dims", u.source.dims()}, {"target_dims", u.target.dims()}, {"components", comps}};
}

CorpusInstance instance_from_json(const json& j, const std::string& name) {
  CorpusInstance c;
  c.name = name;
  QuiverSpec spec = quiver_spec_from_json(j);
  try {
    c.quiver = build_bound_quiver_category(spec);
  } catch (const QuiverError& e) {
    throw SpecError("/", e.what());
  }
  std::map<std::string, Rep> mods;
  if (auto it = j.find("modules"); it != j.end()) {
    if (!it->is_array()) throw SpecError("/modules", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = "/modules/" + std::to_string(i);
      std::string mname = as_string(required((*it)[i], at, "name"), at + "/name");
      if (mods.count(mname) || mname == "regular" || mname == "dual")
        throw SpecError(at + "/name", "duplicate or reserved module name '" + mname + "'");
      Rep r = rep_from_json(c.quiver, (*it)[i], at);
      if (r.variance() != Variance::contravariant) throw SpecError(at + "/variance", "modules of an instance must be contravariant");
      mods.emplace(mname, r);
    }
  }
  std::set<std::string> listed;
  if (auto it = j.find("indecomposables"); it != j.end()) {
    if (!it->is_array()) throw SpecError("/indecomposables", "expected an array of module names");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = "/indecomposables/" + std::to_string(i);
      std::string mname = as_string((*it)[i], at);
      auto m = mods.find(mname);
      if (m == mods.end()) throw SpecError(at, "unknown module '" + mname + "'");
      if (!listed.insert(mname).second) throw SpecError(at, "listed twice");
      c.indecomposables.push_back({mname, m->second});
    }
  }
  for (const auto& [k, r] : mods)
    if (!listed.count(k)) c.aliases[k] = r;
  add_standard_aliases(c);
  return c;
}

CorpusInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("", "cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError("", std::string("invalid JSON: ") + e.what());
  }
  return instance_from_json(j, path);
}

json to_json(const MembershipVerdict& v) {
  json j;
  j["kind"] = to_string(v.kind);
  j["method"] = to_string(v.method);
  j["k"] = v.k;
  j["member"] = v.member;
  j["convention"] = v.convention;
  if (v.method == MembershipMethod::definitional) {
    json terms = json::array(), maps = json::array();
    for (const auto& t : v.terms) terms.push_back(t.dims());
    for (const auto& m : v.maps) maps.push_back(to_json(m));
    j["certificate"] = {{"term_dims", terms}, {"maps", maps}};
    if (v.failed_step != MembershipVerdict::npos) j["failed_step"] = v.failed_step;
  } else {
    j["certificate"] = {{"unit_iso", v.unit_iso}, {"vanishing", v.vanishing}, {"mod_k_witnessed", v.mod_k_witnessed}};
  }
  return j;
}

}  // namespace fbal
