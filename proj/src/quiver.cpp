#include "fbal/quiver.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fbal {

namespace f = field;

std::size_t BoundQuiver::arrow_index(const std::string& name) const {
  for (std::size_t k = 0; k < spec.arrows.size(); ++k)
    if (spec.arrows[k].name == name) return k;
  throw QuiverError("unknown arrow '" + name + "'");
}

std::size_t BoundQuiver::vertex_index(const std::string& name) const {
  for (std::size_t k = 0; k < spec.vertices.size(); ++k)
    if (spec.vertices[k] == name) return k;
  throw QuiverError("unknown vertex '" + name + "'");
}

namespace {

struct PathTable {
  std::size_t n = 0;
  // Per (x,y): paths ordered by decreasing length (columns of the ideal span).
  std::vector<std::vector<Path>> paths;
  std::map<Path, std::size_t> column;

  std::vector<Path>& at(std::size_t x, std::size_t y) { return paths[x * n + y]; }
};

PathTable enumerate_paths(const QuiverSpec& spec, std::size_t max_len) {
  PathTable t;
  t.n = spec.vertices.size();
  t.paths.resize(t.n * t.n);
  std::vector<Path> frontier;
  for (std::size_t v = 0; v < t.n; ++v) frontier.push_back({v, v, {}});
  std::vector<Path> all = frontier;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (std::size_t k = 0; k < spec.arrows.size(); ++k)
        if (spec.arrows[k].source == p.target) {
          Path q = p;
          q.arrows.push_back(k);
          q.target = spec.arrows[k].target;
          next.push_back(std::move(q));
        }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(), [](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.arrows < b.arrows;
  });
  for (auto& p : all) {
    auto& bucket = t.at(p.source, p.target);
    t.column[p] = bucket.size();
    bucket.push_back(p);
  }
  return t;
}

Path concat(const Path& a, const Path& b) {
  Path out{a.source, b.target, a.arrows};
  out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
  return out;
}

struct ParsedRelation {
  std::size_t source = 0, target = 0;
  std::vector<std::pair<Scalar, Path>> terms;
  std::size_t min_len = 0;
};

ParsedRelation parse_relation(const QuiverSpec& spec, const Relation& r, std::size_t which) {
  auto where = [&] { return "relation " + std::to_string(which) + ": "; };
  if (r.terms.empty()) throw QuiverError(where() + "empty relation");
  ParsedRelation pr;
  pr.min_len = SIZE_MAX;
  for (std::size_t t = 0; t < r.terms.size(); ++t) {
    const auto& term = r.terms[t];
    if (term.arrows.size() < 2)
      throw QuiverError(where() + "term " + std::to_string(t) + " has length < 2; relations must lie in the square of the arrow ideal");
    Path p;
    for (std::size_t k = 0; k < term.arrows.size(); ++k) {
      std::size_t idx = SIZE_MAX;
      for (std::size_t a = 0; a < spec.arrows.size(); ++a)
        if (spec.arrows[a].name == term.arrows[k]) idx = a;
      if (idx == SIZE_MAX) throw QuiverError(where() + "unknown arrow '" + term.arrows[k] + "'");
      if (k == 0) {
        p.source = spec.arrows[idx].source;
      } else if (spec.arrows[p.arrows.back()].target != spec.arrows[idx].source) {
        throw QuiverError(where() + "arrows '" + term.arrows[k - 1] + "' and '" + term.arrows[k] + "' are not composable");
      }
      p.arrows.push_back(idx);
      p.target = spec.arrows[idx].target;
    }
    if (t == 0) {
      pr.source = p.source;
      pr.target = p.target;
    } else if (p.source != pr.source || p.target != pr.target) {
      throw QuiverError(where() + "terms do not share source and target");
    }
    pr.min_len = std::min(pr.min_len, p.length());
    pr.terms.emplace_back(f::from_int(term.coeff), std::move(p));
  }
  return pr;
}

void check_spec(const QuiverSpec& spec) {
  if (spec.vertices.empty()) throw QuiverError("quiver has no vertices");
  if (spec.length_bound < 1) throw QuiverError("length_bound must be at least 1");
  for (std::size_t k = 0; k < spec.arrows.size(); ++k) {
    const auto& a = spec.arrows[k];
    if (a.source >= spec.vertices.size() || a.target >= spec.vertices.size())
      throw QuiverError("arrow '" + a.name + "' has an endpoint outside the vertex list");
    for (std::size_t j = 0; j < k; ++j)
      if (spec.arrows[j].name == a.name) throw QuiverError("duplicate arrow name '" + a.name + "'");
  }
}

}  // namespace

BoundQuiver build_bound_quiver_category(const QuiverSpec& spec) {
  check_spec(spec);
  const std::size_t n = spec.vertices.size();
  const std::size_t L = spec.length_bound;
  PathTable table = enumerate_paths(spec, L);

  std::vector<ParsedRelation> rels;
  for (std::size_t r = 0; r < spec.relations.size(); ++r) rels.push_back(parse_relation(spec, spec.relations[r], r));

  std::vector<IncrementalSpan> ideal;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) ideal.emplace_back(table.at(x, y).size());

  // u * r * v, truncated modulo paths longer than L.
  std::vector<Path> short_paths;
  for (const auto& bucket : table.paths) short_paths.insert(short_paths.end(), bucket.begin(), bucket.end());
  for (const auto& r : rels) {
    if (r.min_len > L) continue;
    for (const auto& u : short_paths) {
      if (u.target != r.source || u.length() + r.min_len > L) continue;
      for (const auto& v : short_paths) {
        if (v.source != r.target || u.length() + v.length() + r.min_len > L) continue;
        const std::size_t x = u.source, y = v.target;
        Vector elem(table.at(x, y).size(), 0);
        for (const auto& [c, term] : r.terms) {
          Path full = concat(concat(u, term), v);
          if (full.length() > L) continue;
          std::size_t col = table.column.at(full);
          elem[col] = f::add(elem[col], c);
        }
        ideal[x * n + y].add(elem);
      }
    }
  }

  // Admissibility: every path of length L is in the ideal span.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& bucket = table.at(x, y);
      for (std::size_t c = 0; c < bucket.size(); ++c) {
        if (bucket[c].length() != L) continue;
        Vector e(bucket.size(), 0);
        e[c] = 1;
        if (!ideal[x * n + y].contains(e)) {
          std::ostringstream os;
          os << "length bound L=" << L << " is too small: a path of length " << L << " from " << spec.vertices[x]
             << " to " << spec.vertices[y] << " is not in the ideal";
          throw QuiverError(os.str());
        }
      }
    }

  BoundQuiver out;
  out.spec = spec;
  out.basis_paths.resize(n * n);
  // Column positions of basis paths inside each bucket.
  std::vector<std::vector<std::size_t>> basis_cols(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& bucket = table.at(x, y);
      for (std::size_t c = bucket.size(); c-- > 0;) {  // short paths first
        Vector e(bucket.size(), 0);
        e[c] = 1;
        if (ideal[x * n + y].reduce(e) == e) {
          basis_cols[x * n + y].push_back(c);
          out.basis_paths[x * n + y].push_back(bucket[c]);
        } else if (bucket[c].length() == 0) {
          throw QuiverError("relations are not admissible: the trivial path at " + spec.vertices[x] + " lies in the ideal");
        }
      }
    }

  auto normal_form = [&](const Path& p) {
    const std::size_t key = p.source * n + p.target;
    Vector coords(basis_cols[key].size(), 0);
    if (p.length() >= L) return coords;
    const auto& bucket = table.at(p.source, p.target);
    Vector e(bucket.size(), 0);
    e[table.column.at(p)] = 1;
    Vector red = ideal[key].reduce(e);
    for (std::size_t b = 0; b < basis_cols[key].size(); ++b) coords[b] = red[basis_cols[key][b]];
    return coords;
  };

  FinCategory::Data d;
  d.names = spec.vertices;
  d.hom_dims.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k) d.hom_dims[k] = out.basis_paths[k].size();
  d.comp.resize(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const auto& fs = out.basis_paths[i * n + j];
        const auto& gs = out.basis_paths[j * n + l];
        const std::size_t dil = d.hom_dims[i * n + l];
        auto& block = d.comp[(i * n + j) * n + l];
        block.assign(gs.size() * fs.size() * dil, 0);
        for (std::size_t b = 0; b < gs.size(); ++b)
          for (std::size_t a = 0; a < fs.size(); ++a) {
            Vector c = normal_form(concat(fs[a], gs[b]));  // g∘f traverses f first
            std::copy(c.begin(), c.end(), block.begin() + std::ptrdiff_t((b * fs.size() + a) * dil));
          }
      }
  d.identities.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.identities[i] = normal_form(Path{i, i, {}});
  for (std::size_t k = 0; k < spec.arrows.size(); ++k) {
    const auto& a = spec.arrows[k];
    const auto& bp = out.basis_paths[a.source * n + a.target];
    Path p{a.source, a.target, {k}};
    auto it = std::find(bp.begin(), bp.end(), p);
    if (it == bp.end()) {
      throw QuiverError("relations are not admissible: arrow '" + a.name + "' lies in the ideal");
    }
    BasisMorphism bm{a.source, a.target, std::size_t(it - bp.begin())};
    out.arrow_basis.push_back(bm);
    d.generators.push_back(bm);
  }
  if (d.generators.empty()) {
    // No arrows: identities generate; list them so naturality has something to check.
    for (std::size_t i = 0; i < n; ++i) d.generators.push_back({i, i, 0});
  }
  out.category = std::make_shared<const FinCategory>(std::move(d));
  return out;
}

Rep rep_from_arrows(const BoundQuiver& q, Variance v, const std::vector<std::size_t>& dims,
                    const std::vector<Matrix>& arrow_matrices) {
  const QuiverSpec& spec = q.spec;
  const std::size_t n = spec.vertices.size();
  if (dims.size() != n) throw QuiverError("representation needs one dimension per vertex");
  if (arrow_matrices.size() != spec.arrows.size()) throw QuiverError("representation needs one matrix per arrow");
  for (std::size_t k = 0; k < spec.arrows.size(); ++k) {
    const auto& a = spec.arrows[k];
    std::size_t rows = v == Variance::contravariant ? dims[a.source] : dims[a.target];
    std::size_t cols = v == Variance::contravariant ? dims[a.target] : dims[a.source];
    if (arrow_matrices[k].rows() != rows || arrow_matrices[k].cols() != cols) {
      std::ostringstream os;
      os << "matrix for arrow '" << a.name << "' must be " << rows << "x" << cols << ", got "
         << arrow_matrices[k].rows() << "x" << arrow_matrices[k].cols();
      throw QuiverError(os.str());
    }
  }
  auto path_action = [&](const Path& p) {
    // contravariant: X(a_m ∘ ... ∘ a_1) = X(a_1) ... X(a_m); covariant reverses
    Matrix m = Matrix::identity(dims[p.source]);
    for (std::size_t a : p.arrows) m = v == Variance::contravariant ? m * arrow_matrices[a] : arrow_matrices[a] * m;
    return m;
  };
  for (std::size_t r = 0; r < spec.relations.size(); ++r) {
    Matrix sum;
    bool first = true;
    for (const auto& term : spec.relations[r].terms) {
      Path p;
      for (const auto& name : term.arrows) {
        std::size_t idx = q.arrow_index(name);
        if (p.arrows.empty()) p.source = spec.arrows[idx].source;
        p.arrows.push_back(idx);
        p.target = spec.arrows[idx].target;
      }
      Matrix m = scale(path_action(p), f::from_int(term.coeff));
      sum = first ? m : sum + m;
      first = false;
    }
    if (!first && !sum.is_zero()) throw QuiverError("representation violates relation " + std::to_string(r));
  }
  Rep::Data d{q.category, v, dims, {}};
  d.action.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& p : q.basis_paths[x * n + y]) d.action[x * n + y].push_back(path_action(p));
  Rep rep(std::move(d));
  auto diags = validate_rep(rep);
  if (!diags.empty()) throw QuiverError("representation is not functorial: " + diags.front());
  return rep;
}

}  // namespace fbal
