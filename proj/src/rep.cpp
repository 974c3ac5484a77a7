#include "fbal/rep.hpp"

#include <sstream>
#include <stdexcept>

namespace fbal {

namespace f = field;

const char* to_string(Variance v) { return v == Variance::contravariant ? "contravariant" : "covariant"; }

namespace {

Vector unit(std::size_t dim, std::size_t k) {
  Vector e(dim, 0);
  e[k] = 1;
  return e;
}

void require_compatible(const Rep& a, const Rep& b, const char* what) {
  if (a.base() != b.base() || a.variance() != b.variance())
    throw std::invalid_argument(std::string(what) + ": representations live over different bases or variances");
}

}  // namespace

Rep::Rep(Data data) : d_(std::make_shared<const Data>(std::move(data))) {
  const std::size_t n = category().size();
  if (d_->dims.size() != n) throw std::invalid_argument("Rep: one dimension per object required");
  if (d_->action.size() != n * n) throw std::invalid_argument("Rep: action must have n*n blocks");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& block = d_->action[a * n + b];
      if (block.size() != category().hom_dim(a, b))
        throw std::invalid_argument("Rep: one action matrix per Hom basis element required");
      for (const auto& m : block)
        if (m.rows() != dim(act_cod(a, b)) || m.cols() != dim(act_dom(a, b)))
          throw std::invalid_argument("Rep: action matrix has wrong shape");
    }
}

std::size_t Rep::total_dim() const {
  std::size_t s = 0;
  for (std::size_t d : d_->dims) s += d;
  return s;
}

Matrix Rep::act(std::size_t a, std::size_t b, const Vector& coords) const {
  Matrix out(dim(act_cod(a, b)), dim(act_dom(a, b)));
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] != 0) out = out + scale(act(a, b, k), coords[k]);
  return out;
}

bool Rep::same_shape(const Rep& other) const {
  return base() == other.base() && variance() == other.variance() && dims() == other.dims();
}

bool operator==(const Rep& x, const Rep& y) {
  if (!x.same_shape(y)) return false;
  return x.data().action == y.data().action;
}

std::vector<std::string> validate_rep(const Rep& r) {
  std::vector<std::string> diags;
  const FinCategory& c = r.category();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    Matrix id = r.act(i, i, c.identity(i));
    if (!id.is_identity()) diags.push_back("identity of " + c.name(i) + " does not act as the identity");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t a = 0; a < c.hom_dim(i, j); ++a)
          for (std::size_t b = 0; b < c.hom_dim(j, l); ++b) {
            Vector gf = c.compose(i, j, l, unit(c.hom_dim(j, l), b), unit(c.hom_dim(i, j), a));
            Matrix lhs = r.act(i, l, gf);
            Matrix rhs = r.variance() == Variance::contravariant ? r.act(i, j, a) * r.act(j, l, b)
                                                                  : r.act(j, l, b) * r.act(i, j, a);
            if (!(lhs == rhs)) {
              std::ostringstream os;
              os << "functoriality fails on " << c.name(i) << "->" << c.name(j) << "->" << c.name(l) << " basis ("
                 << b << "," << a << ")";
              diags.push_back(os.str());
            }
          }
  return diags;
}

// ---- morphisms -----------------------------------------------------------

RepMorphism RepMorphism::identity(const Rep& r) {
  RepMorphism m{r, r, {}};
  for (std::size_t d : r.dims()) m.components.push_back(Matrix::identity(d));
  return m;
}

RepMorphism RepMorphism::zero(const Rep& source, const Rep& target) {
  require_compatible(source, target, "zero morphism");
  RepMorphism m{source, target, {}};
  for (std::size_t i = 0; i < source.dims().size(); ++i) m.components.emplace_back(target.dim(i), source.dim(i));
  return m;
}

bool RepMorphism::is_natural() const {
  const FinCategory& c = source.category();
  for (const auto& g : c.generators()) {
    std::size_t dom = source.act_dom(g.source, g.target), cod = source.act_cod(g.source, g.target);
    if (!(components[cod] * source.act(g.source, g.target, g.index) ==
          target.act(g.source, g.target, g.index) * components[dom]))
      return false;
  }
  return true;
}

bool RepMorphism::is_zero() const {
  for (const auto& m : components)
    if (!m.is_zero()) return false;
  return true;
}

bool RepMorphism::is_iso() const {
  for (const auto& m : components)
    if (!is_invertible(m)) return false;
  return true;
}

bool RepMorphism::is_mono() const {
  for (const auto& m : components)
    if (rank(m) != m.cols()) return false;
  return true;
}

bool RepMorphism::is_epi() const {
  for (const auto& m : components)
    if (rank(m) != m.rows()) return false;
  return true;
}

Vector RepMorphism::flatten() const {
  Vector v;
  for (const auto& m : components) v.insert(v.end(), m.data().begin(), m.data().end());
  return v;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& fm) {
  if (!fm.target.same_shape(g.source)) throw std::invalid_argument("compose: morphisms are not composable");
  RepMorphism m{fm.source, g.target, {}};
  for (std::size_t i = 0; i < fm.components.size(); ++i) m.components.push_back(g.components[i] * fm.components[i]);
  return m;
}

RepMorphism operator+(const RepMorphism& a, const RepMorphism& b) {
  RepMorphism m{a.source, a.target, {}};
  for (std::size_t i = 0; i < a.components.size(); ++i) m.components.push_back(a.components[i] + b.components[i]);
  return m;
}

RepMorphism scale(const RepMorphism& a, Scalar s) {
  RepMorphism m{a.source, a.target, {}};
  for (const auto& c : a.components) m.components.push_back(scale(c, s));
  return m;
}

bool operator==(const RepMorphism& a, const RepMorphism& b) { return a.components == b.components; }

// ---- natural transformations ---------------------------------------------

NatSpace::NatSpace(Rep source, Rep target) : source_(std::move(source)), target_(std::move(target)) {
  require_compatible(source_, target_, "nat_transformations");
  const FinCategory& c = source_.category();
  const std::size_t n = c.size();
  offsets_.resize(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + target_.dim(i) * source_.dim(i);
  const std::size_t unknowns = offsets_[n];

  std::size_t eqs = 0;
  for (const auto& g : c.generators()) {
    std::size_t dom = source_.act_dom(g.source, g.target), cod = source_.act_cod(g.source, g.target);
    eqs += target_.dim(cod) * source_.dim(dom);
  }
  Matrix sys(eqs, unknowns);
  std::size_t row = 0;
  for (const auto& g : c.generators()) {
    const std::size_t dom = source_.act_dom(g.source, g.target), cod = source_.act_cod(g.source, g.target);
    const Matrix& fa = source_.act(g.source, g.target, g.index);  // F(dom) -> F(cod)
    const Matrix& ga = target_.act(g.source, g.target, g.index);  // G(dom) -> G(cod)
    const std::size_t fdom = source_.dim(dom), fcod = source_.dim(cod), gdom = target_.dim(dom);
    // eta_cod * F(f) - G(f) * eta_dom = 0, entry (r, col)
    for (std::size_t r = 0; r < target_.dim(cod); ++r)
      for (std::size_t col = 0; col < fdom; ++col, ++row) {
        for (std::size_t k = 0; k < fcod; ++k) {
          Scalar coef = fa(k, col);
          if (coef == 0) continue;
          std::size_t u = offsets_[cod] + r * fcod + k;
          sys(row, u) = f::add(sys(row, u), coef);
        }
        for (std::size_t k = 0; k < gdom; ++k) {
          Scalar coef = ga(r, k);
          if (coef == 0) continue;
          std::size_t u = offsets_[dom] + k * fdom + col;
          sys(row, u) = f::sub(sys(row, u), coef);
        }
      }
  }
  kernel_ = kernel(sys);
}

RepMorphism NatSpace::unflatten(const Vector& flat) const {
  RepMorphism m{source_, target_, {}};
  for (std::size_t i = 0; i + 1 < offsets_.size(); ++i) {
    Matrix comp(target_.dim(i), source_.dim(i));
    for (std::size_t r = 0; r < comp.rows(); ++r)
      for (std::size_t c = 0; c < comp.cols(); ++c) comp(r, c) = flat[offsets_[i] + r * comp.cols() + c];
    m.components.push_back(std::move(comp));
  }
  return m;
}

RepMorphism NatSpace::element(std::size_t i) const { return unflatten(kernel_.basis.col(i)); }

RepMorphism NatSpace::from_coordinates(const Vector& coords) const { return unflatten(kernel_.basis * coords); }

std::vector<RepMorphism> NatSpace::basis() const {
  std::vector<RepMorphism> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(element(i));
  return out;
}

Vector NatSpace::coordinates(const RepMorphism& m) const { return kernel_.coordinates(m.flatten()); }

Matrix NatSpace::component(std::size_t i, std::size_t obj) const {
  Matrix comp(target_.dim(obj), source_.dim(obj));
  for (std::size_t r = 0; r < comp.rows(); ++r)
    for (std::size_t c = 0; c < comp.cols(); ++c) comp(r, c) = kernel_.basis(offsets_[obj] + r * comp.cols() + c, i);
  return comp;
}

NatSpace nat_transformations(const Rep& source, const Rep& target) { return NatSpace(source, target); }

std::size_t hom_dim(const Rep& source, const Rep& target) { return NatSpace(source, target).dim(); }

Matrix precomposition_matrix(const RepMorphism& u, const NatSpace& from_target, const NatSpace& to_source) {
  Matrix m(to_source.dim(), from_target.dim());
  for (std::size_t j = 0; j < from_target.dim(); ++j) {
    Vector c = to_source.coordinates(compose(from_target.element(j), u));
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return m;
}

// ---- constructions -------------------------------------------------------

Rep zero_rep(const CategoryPtr& base, Variance v) {
  const std::size_t n = base->size();
  Rep::Data d{base, v, std::vector<std::size_t>(n, 0), {}};
  d.action.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d.action[a * n + b].assign(base->hom_dim(a, b), Matrix(0, 0));
  return Rep(std::move(d));
}

Rep representable(const CategoryPtr& base, Variance v, std::size_t i) {
  const FinCategory& c = *base;
  const std::size_t n = c.size();
  Rep::Data d{base, v, {}, {}};
  for (std::size_t q = 0; q < n; ++q) d.dims.push_back(v == Variance::contravariant ? c.hom_dim(q, i) : c.hom_dim(i, q));
  d.action.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < c.hom_dim(a, b); ++k) {
        Vector e = unit(c.hom_dim(a, b), k);
        // contravariant: Hom(b,i) -> Hom(a,i), g ↦ g∘f; covariant: Hom(i,a) -> Hom(i,b), g ↦ f∘g
        d.action[a * n + b].push_back(v == Variance::contravariant ? c.precompose(a, b, i, e) : c.postcompose(i, a, b, e));
      }
  return Rep(std::move(d));
}

Rep yoneda(const CategoryPtr& base, std::size_t p) { return representable(base, Variance::contravariant, p); }

Rep coyoneda_injective(const CategoryPtr& base, std::size_t p) {
  const FinCategory& c = *base;
  const std::size_t n = c.size();
  Rep::Data d{base, Variance::contravariant, {}, {}};
  for (std::size_t q = 0; q < n; ++q) d.dims.push_back(c.hom_dim(p, q));
  d.action.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < c.hom_dim(a, b); ++k)
        d.action[a * n + b].push_back(c.postcompose(p, a, b, unit(c.hom_dim(a, b), k)).transpose());
  return Rep(std::move(d));
}

DirectSum direct_sum(const std::vector<Rep>& parts, const CategoryPtr& base, Variance v) {
  const std::size_t n = base->size();
  for (const auto& r : parts)
    if (r.base() != base || r.variance() != v) throw std::invalid_argument("direct_sum: incompatible summand");
  Rep::Data d{base, v, std::vector<std::size_t>(n, 0), {}};
  for (const auto& r : parts)
    for (std::size_t i = 0; i < n; ++i) d.dims[i] += r.dim(i);
  d.action.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < base->hom_dim(a, b); ++k) {
        std::vector<Matrix> blocks;
        for (const auto& r : parts) blocks.push_back(r.act(a, b, k));
        d.action[a * n + b].push_back(block_diag(blocks));
      }
  DirectSum out{Rep(std::move(d)), {}, {}};
  std::vector<std::size_t> offset(n, 0);
  for (const auto& r : parts) {
    RepMorphism inj{r, out.sum, {}}, proj{out.sum, r, {}};
    for (std::size_t i = 0; i < n; ++i) {
      Matrix in(out.sum.dim(i), r.dim(i)), pr(r.dim(i), out.sum.dim(i));
      for (std::size_t t = 0; t < r.dim(i); ++t) {
        in(offset[i] + t, t) = 1;
        pr(t, offset[i] + t) = 1;
      }
      inj.components.push_back(std::move(in));
      proj.components.push_back(std::move(pr));
      offset[i] += r.dim(i);
    }
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

Rep direct_sum_rep(const std::vector<Rep>& parts, const CategoryPtr& base, Variance v) {
  return direct_sum(parts, base, v).sum;
}

namespace {

// Subrepresentation with given objectwise bases (full column rank), with
// action computed by coordinates.
RepMorphism sub_from_bases(const Rep& ambient, std::vector<ColumnCoordinates> bases) {
  const FinCategory& c = ambient.category();
  const std::size_t n = c.size();
  Rep::Data d{ambient.base(), ambient.variance(), {}, {}};
  for (const auto& b : bases) d.dims.push_back(b.dim());
  d.action.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < c.hom_dim(a, b); ++k) {
        std::size_t dom = ambient.act_dom(a, b), cod = ambient.act_cod(a, b);
        Matrix moved = ambient.act(a, b, k) * bases[dom].basis();
        Matrix coords = bases[cod].coordinates(moved);
        if (!(bases[cod].basis() * coords == moved))
          throw std::logic_error("subrepresentation is not closed under the action");
        d.action[a * n + b].push_back(std::move(coords));
      }
  RepMorphism incl{Rep(std::move(d)), ambient, {}};
  for (auto& b : bases) incl.components.push_back(b.basis());
  return incl;
}

}  // namespace

RepMorphism kernel_inclusion(const RepMorphism& u) {
  std::vector<ColumnCoordinates> bases;
  for (const auto& m : u.components) bases.emplace_back(kernel_basis(m));
  return sub_from_bases(u.source, std::move(bases));
}

RepMorphism subrep_inclusion(const Rep& ambient, const std::vector<Matrix>& spanning) {
  std::vector<ColumnCoordinates> bases;
  for (const auto& m : spanning) bases.emplace_back(image_basis(m));
  return sub_from_bases(ambient, std::move(bases));
}

ImageFactorization image(const RepMorphism& u) {
  RepMorphism into = subrep_inclusion(u.target, u.components);
  RepMorphism onto{u.source, into.source, {}};
  for (std::size_t i = 0; i < u.components.size(); ++i)
    onto.components.push_back(ColumnCoordinates(into.components[i]).coordinates(u.components[i]));
  return {std::move(onto), std::move(into)};
}

RepMorphism cokernel_projection(const RepMorphism& u) {
  const Rep& t = u.target;
  const FinCategory& c = t.category();
  const std::size_t n = c.size();
  std::vector<Quotient> qs;
  for (std::size_t i = 0; i < n; ++i) qs.push_back(quotient(u.components[i], t.dim(i)));
  Rep::Data d{t.base(), t.variance(), {}, {}};
  for (const auto& q : qs) d.dims.push_back(q.dim());
  d.action.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < c.hom_dim(a, b); ++k) {
        std::size_t dom = t.act_dom(a, b), cod = t.act_cod(a, b);
        d.action[a * n + b].push_back(qs[cod].projection * t.act(a, b, k) * qs[dom].section);
      }
  RepMorphism proj{t, Rep(std::move(d)), {}};
  for (auto& q : qs) proj.components.push_back(std::move(q.projection));
  return proj;
}

}  // namespace fbal
