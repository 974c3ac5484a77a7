#include "fbal/homalg.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace fbal {

namespace {

std::size_t proj_dim(const FinCategory& c, Variance v, std::size_t a, std::size_t q) {
  return v == Variance::contravariant ? c.hom_dim(q, a) : c.hom_dim(a, q);
}

// W applied to basis element k of proj_a(q): W(a) -> W(q) for either variance.
const Matrix& act_basis(const Rep& w, Variance v, std::size_t a, std::size_t q, std::size_t k) {
  return v == Variance::contravariant ? w.act(q, a, k) : w.act(a, q, k);
}

}  // namespace

std::size_t FreeModule::offset(std::size_t t, std::size_t q) const {
  std::size_t off = 0;
  for (std::size_t s = 0; s < t; ++s) off += proj_dim(*base, variance, generators[s], q);
  return off;
}

FreeModule free_module(const CategoryPtr& base, Variance v, std::vector<std::size_t> generators) {
  std::vector<Rep> parts;
  for (std::size_t a : generators) parts.push_back(representable(base, v, a));
  FreeModule f{base, v, std::move(generators), {}};
  f.rep = direct_sum_rep(parts, base, v);
  return f;
}

Matrix act_element(const Rep& w, Variance v, std::size_t s, std::size_t t, const Vector& coords) {
  return v == Variance::contravariant ? w.act(t, s, coords) : w.act(s, t, coords);
}

RepMorphism map_from_free(const FreeModule& f, const Rep& x, const std::vector<Vector>& images) {
  const FinCategory& c = *f.base;
  if (images.size() != f.rank()) throw std::invalid_argument("map_from_free: one image per generator required");
  RepMorphism m{f.rep, x, {}};
  for (std::size_t q = 0; q < c.size(); ++q) {
    Matrix comp(x.dim(q), f.rep.dim(q));
    std::size_t col = 0;
    for (std::size_t t = 0; t < f.rank(); ++t) {
      std::size_t a = f.generators[t];
      for (std::size_t k = 0; k < proj_dim(c, f.variance, a, q); ++k, ++col) {
        Vector v = act_basis(x, f.variance, a, q, k) * images[t];
        for (std::size_t r = 0; r < v.size(); ++r) comp(r, col) = v[r];
      }
    }
    m.components.push_back(std::move(comp));
  }
  return m;
}

namespace {

// Objectwise spanning vectors of the submodule generated by x ∈ F(a).
std::vector<std::vector<Vector>> generated(const Rep& f, std::size_t a, const Vector& x) {
  const FinCategory& c = f.category();
  std::vector<std::vector<Vector>> out(c.size());
  for (std::size_t q = 0; q < c.size(); ++q)
    for (std::size_t k = 0; k < proj_dim(c, f.variance(), a, q); ++k)
      out[q].push_back(act_basis(f, f.variance(), a, q, k) * x);
  return out;
}

struct Candidate {
  std::size_t object;
  Vector element;
  std::vector<std::vector<Vector>> span;
  std::size_t size;
};

bool generates_all(const Rep& f, const std::vector<const Candidate*>& gens) {
  const std::size_t n = f.category().size();
  std::vector<IncrementalSpan> spans;
  for (std::size_t q = 0; q < n; ++q) spans.emplace_back(f.dim(q));
  for (const Candidate* g : gens)
    for (std::size_t q = 0; q < n; ++q)
      for (const auto& v : g->span[q]) spans[q].add(v);
  for (std::size_t q = 0; q < n; ++q)
    if (spans[q].dim() != f.dim(q)) return false;
  return true;
}

std::vector<const Candidate*> pruned_generators(const Rep& f, const std::vector<Candidate>& cands) {
  const std::size_t n = f.category().size();
  std::vector<const Candidate*> order;
  for (const auto& c : cands) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(), [](const Candidate* a, const Candidate* b) { return a->size > b->size; });
  std::vector<IncrementalSpan> spans;
  for (std::size_t q = 0; q < n; ++q) spans.emplace_back(f.dim(q));
  std::vector<const Candidate*> chosen;
  std::size_t covered = 0;
  const std::size_t total = f.total_dim();
  for (const Candidate* c : order) {
    if (covered == total) break;
    if (spans[c->object].contains(c->element)) continue;
    chosen.push_back(c);
    for (std::size_t q = 0; q < n; ++q)
      for (const auto& v : c->span[q])
        if (spans[q].add(v)) ++covered;
  }
  for (std::size_t i = chosen.size(); i-- > 0;) {
    std::vector<const Candidate*> rest = chosen;
    rest.erase(rest.begin() + std::ptrdiff_t(i));
    if (generates_all(f, rest)) chosen = std::move(rest);
  }
  // keep the summands grouped by object for readability of the output
  std::stable_sort(chosen.begin(), chosen.end(), [](const Candidate* a, const Candidate* b) { return a->object < b->object; });
  return chosen;
}

}  // namespace

FreeCover free_cover(const Rep& f, CoverStrategy strategy) {
  const std::size_t n = f.category().size();
  std::vector<std::size_t> gens;
  std::vector<Vector> images;
  if (strategy == CoverStrategy::canonical) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < f.dim(i); ++k) {
        Vector e(f.dim(i), 0);
        e[k] = 1;
        gens.push_back(i);
        images.push_back(std::move(e));
      }
  } else {
    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < f.dim(i); ++k) {
        Vector e(f.dim(i), 0);
        e[k] = 1;
        auto span = generated(f, i, e);
        std::size_t size = 0;
        for (std::size_t q = 0; q < n; ++q) {
          Matrix m(f.dim(q), span[q].size());
          for (std::size_t j = 0; j < span[q].size(); ++j)
            for (std::size_t r = 0; r < f.dim(q); ++r) m(r, j) = span[q][j][r];
          size += rank(m);
        }
        cands.push_back({i, std::move(e), std::move(span), size});
      }
    for (const Candidate* c : pruned_generators(f, cands)) {
      gens.push_back(c->object);
      images.push_back(c->element);
    }
  }
  FreeModule free = free_module(f.base(), f.variance(), std::move(gens));
  RepMorphism proj = map_from_free(free, f, images);
  return {std::move(free), std::move(images), std::move(proj)};
}

FreeResolution free_resolution(const Rep& f, std::size_t length, CoverStrategy strategy) {
  FreeResolution r;
  r.target = f;
  FreeCover c0 = free_cover(f, strategy);
  r.terms.push_back(std::move(c0.free));
  r.images.push_back(std::move(c0.images));
  r.differentials.push_back(std::move(c0.projection));
  for (std::size_t n = 1; n <= length; ++n) {
    RepMorphism k = kernel_inclusion(r.differentials.back());
    FreeCover c = free_cover(k.source, strategy);
    std::vector<Vector> imgs;
    for (std::size_t t = 0; t < c.free.rank(); ++t) imgs.push_back(k.components[c.free.generators[t]] * c.images[t]);
    RepMorphism d = map_from_free(c.free, r.terms.back().rep, imgs);
    r.terms.push_back(std::move(c.free));
    r.images.push_back(std::move(imgs));
    r.differentials.push_back(std::move(d));
  }
  return r;
}

std::vector<std::string> check_resolution(const FreeResolution& r) {
  std::vector<std::string> out;
  const std::size_t n = r.target.category().size();
  for (std::size_t d = 0; d < r.differentials.size(); ++d)
    if (!r.differentials[d].is_natural()) out.push_back("differential " + std::to_string(d) + " is not natural");
  if (!r.differentials.empty() && !r.differentials[0].is_epi()) out.push_back("augmentation is not surjective");
  for (std::size_t d = 1; d < r.differentials.size(); ++d) {
    const RepMorphism& in = r.differentials[d];
    const RepMorphism& outm = r.differentials[d - 1];
    for (std::size_t q = 0; q < n; ++q) {
      if (!(outm.components[q] * in.components[q]).is_zero())
        out.push_back("d" + std::to_string(d - 1) + "∘d" + std::to_string(d) + " is nonzero at object " + std::to_string(q));
      std::size_t ker = outm.components[q].cols() - rank(outm.components[q]);
      if (ker != rank(in.components[q]))
        out.push_back("not exact at term " + std::to_string(d - 1) + ", object " + std::to_string(q));
    }
  }
  return out;
}

namespace {

// Coordinates of the summand-s part of an element of the free module at object q.
Vector summand_part(const FreeModule& p, std::size_t s, std::size_t q, const Vector& v) {
  std::size_t off = p.offset(s, q), len = proj_dim(*p.base, p.variance, p.generators[s], q);
  return Vector(v.begin() + std::ptrdiff_t(off), v.begin() + std::ptrdiff_t(off + len));
}

std::vector<std::size_t> block_offsets(const FreeModule& p, const Rep& w, std::size_t& total) {
  std::vector<std::size_t> off;
  total = 0;
  for (std::size_t a : p.generators) {
    off.push_back(total);
    total += w.dim(a);
  }
  return off;
}

}  // namespace

HomComplex hom_complex(const FreeResolution& r, const Rep& g) {
  if (!r.terms.empty() && (g.base() != r.target.base() || g.variance() != r.target.variance()))
    throw std::invalid_argument("hom_complex: module and resolution live over different bases or variances");
  HomComplex hc;
  std::vector<std::vector<std::size_t>> offs;
  for (const auto& p : r.terms) {
    std::size_t total = 0;
    offs.push_back(block_offsets(p, g, total));
    hc.dims.push_back(total);
  }
  for (std::size_t n = 0; n + 1 < r.terms.size(); ++n) {
    const FreeModule& src = r.terms[n];
    const FreeModule& nxt = r.terms[n + 1];
    Matrix delta(hc.dims[n + 1], hc.dims[n]);
    for (std::size_t t = 0; t < nxt.rank(); ++t) {
      std::size_t at = nxt.generators[t];
      for (std::size_t s = 0; s < src.rank(); ++s) {
        Vector coords = summand_part(src, s, at, r.images[n + 1][t]);
        if (std::all_of(coords.begin(), coords.end(), [](Scalar x) { return x == 0; })) continue;
        delta.set_block(offs[n + 1][t], offs[n][s], act_element(g, src.variance, src.generators[s], at, coords));
      }
    }
    hc.delta.push_back(std::move(delta));
  }
  return hc;
}

std::vector<std::size_t> ext_dims(const FreeResolution& r, const Rep& g, std::size_t count) {
  if (r.length() < count) throw std::invalid_argument("ext_dims: resolution too short");
  HomComplex hc = hom_complex(r, g);
  std::vector<std::size_t> ranks;
  for (const auto& d : hc.delta) ranks.push_back(rank(d));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(hc.dims[i] - ranks[i] - (i > 0 ? ranks[i - 1] : 0));
  return out;
}

std::size_t ext_dim(const FreeResolution& r, const Rep& g, std::size_t i) { return ext_dims(r, g, i + 1)[i]; }

std::size_t ext_dim(const Rep& f, const Rep& g, std::size_t i, CoverStrategy strategy) {
  return ext_dim(free_resolution(f, i + 1, strategy), g, i);
}

Vector BilinearPairingSpace::project(std::size_t m, const Vector& x, const Vector& y) const {
  Vector v(ambient_dim, 0);
  const std::size_t dg = right.dim(m);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) v[offsets[m] + i * dg + j] = field::mul(x[i], y[j]);
  }
  return quotient.projection * v;
}

Vector BilinearPairingSpace::project_basis(std::size_t m, std::size_t x, std::size_t y) const {
  return quotient.projection.col(offsets[m] + x * right.dim(m) + y);
}

BilinearPairingSpace tensor_over(const Rep& f, const Rep& g) {
  if (f.base() != g.base()) throw std::invalid_argument("tensor_over: different bases");
  if (f.variance() != Variance::contravariant || g.variance() != Variance::covariant)
    throw std::invalid_argument("tensor_over: expects a contravariant and a covariant module");
  const FinCategory& c = f.category();
  const std::size_t n = c.size();
  BilinearPairingSpace t;
  t.left = f;
  t.right = g;
  for (std::size_t m = 0; m < n; ++m) {
    t.offsets.push_back(t.ambient_dim);
    t.ambient_dim += f.dim(m) * g.dim(m);
  }
  std::vector<Vector> rels;
  for (const BasisMorphism& gen : c.generators()) {
    const std::size_t a = gen.source, b = gen.target;
    const Matrix& ff = f.act(a, b, gen.index);  // F(b) -> F(a)
    const Matrix& gf = g.act(a, b, gen.index);  // G(a) -> G(b)
    for (std::size_t x = 0; x < f.dim(b); ++x)
      for (std::size_t y = 0; y < g.dim(a); ++y) {
        Vector v(t.ambient_dim, 0);
        for (std::size_t i = 0; i < f.dim(a); ++i)
          if (ff(i, x) != 0) v[t.offsets[a] + i * g.dim(a) + y] = ff(i, x);
        for (std::size_t j = 0; j < g.dim(b); ++j)
          if (gf(j, y) != 0) {
            Scalar& e = v[t.offsets[b] + x * g.dim(b) + j];
            e = field::sub(e, gf(j, y));
          }
        rels.push_back(std::move(v));
      }
  }
  t.relations = Matrix(t.ambient_dim, rels.size());
  for (std::size_t j = 0; j < rels.size(); ++j)
    for (std::size_t i = 0; i < t.ambient_dim; ++i) t.relations(i, j) = rels[j][i];
  t.quotient = quotient(t.relations, t.ambient_dim);
  return t;
}

TensorComplex tensor_complex(const FreeResolution& r, const Rep& w) {
  if (!r.terms.empty() && (w.base() != r.target.base() || w.variance() == r.target.variance()))
    throw std::invalid_argument("tensor_complex: factor must be of opposite variance over the same base");
  TensorComplex tc;
  std::vector<std::vector<std::size_t>> offs;
  for (const auto& p : r.terms) {
    std::size_t total = 0;
    offs.push_back(block_offsets(p, w, total));
    tc.dims.push_back(total);
  }
  if (tc.dims.empty()) return tc;
  tc.boundary.emplace_back(0, tc.dims[0]);
  for (std::size_t n = 1; n < r.terms.size(); ++n) {
    const FreeModule& src = r.terms[n];
    const FreeModule& dst = r.terms[n - 1];
    Matrix bd(tc.dims[n - 1], tc.dims[n]);
    for (std::size_t t = 0; t < src.rank(); ++t) {
      std::size_t at = src.generators[t];
      for (std::size_t s = 0; s < dst.rank(); ++s) {
        Vector coords = summand_part(dst, s, at, r.images[n][t]);
        if (std::all_of(coords.begin(), coords.end(), [](Scalar x) { return x == 0; })) continue;
        bd.set_block(offs[n - 1][s], offs[n][t], act_element(w, dst.variance, dst.generators[s], at, coords));
      }
    }
    tc.boundary.push_back(std::move(bd));
  }
  return tc;
}

std::vector<std::size_t> tor_dims(const FreeResolution& r, const Rep& w, std::size_t count) {
  if (r.length() < count) throw std::invalid_argument("tor_dims: resolution too short");
  TensorComplex tc = tensor_complex(r, w);
  std::vector<std::size_t> ranks;
  for (const auto& b : tc.boundary) ranks.push_back(rank(b));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(tc.dims[i] - ranks[i] - ranks[i + 1]);
  return out;
}

std::size_t tor_dim(const FreeResolution& r, const Rep& w, std::size_t i) { return tor_dims(r, w, i + 1)[i]; }

std::size_t tor_dim(const Rep& f, const Rep& g, std::size_t i, TorSide side, CoverStrategy strategy) {
  if (f.variance() != Variance::contravariant || g.variance() != Variance::covariant)
    throw std::invalid_argument("tor_dim: expects a contravariant and a covariant module");
  if (side == TorSide::resolve_left) return tor_dim(free_resolution(f, i + 1, strategy), g, i);
  return tor_dim(free_resolution(g, i + 1, strategy), f, i);
}

ModKWitness mod_k_witness(const Rep& f, std::size_t k) { return {true, free_resolution(f, k)}; }

FreeResolution ResolutionCache::get(const Rep& f, std::size_t length) {
  const void* key = &f.data();
  {
    std::shared_lock lock(mu_);
    auto it = table_.find(key);
    if (it != table_.end() && it->second.length() >= length) return it->second;
  }
  FreeResolution r = free_resolution(f, length);
  std::unique_lock lock(mu_);
  auto& slot = table_[key];
  if (slot.terms.empty() || slot.length() < r.length()) slot = r;
  return slot;
}

std::size_t ResolutionCache::size() const {
  std::shared_lock lock(mu_);
  return table_.size();
}

}  // namespace fbal
