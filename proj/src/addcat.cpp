#include "fbal/addcat.hpp"

#include <stdexcept>

namespace fbal {

ModuleCategory ModuleCategory::assemble(Data d) {
  const std::size_t n = d.objects.size();
  FinCategory::Data c;
  c.names = d.names;
  c.hom_dims.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c.hom_dims[i * n + j] = d.homs[i * n + j].dim();
  c.comp.resize(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const NatSpace& fs = d.homs[i * n + j];
      for (std::size_t l = 0; l < n; ++l) {
        const NatSpace& gs = d.homs[j * n + l];
        const NatSpace& out = d.homs[i * n + l];
        auto& block = c.comp[(i * n + j) * n + l];
        block.assign(gs.dim() * fs.dim() * out.dim(), 0);
        if (block.empty()) continue;
        std::vector<RepMorphism> fb = fs.basis();
        for (std::size_t b = 0; b < gs.dim(); ++b) {
          RepMorphism g = gs.element(b);
          for (std::size_t a = 0; a < fs.dim(); ++a) {
            Vector coords = out.coordinates(compose(g, fb[a]));
            std::copy(coords.begin(), coords.end(), block.begin() + std::ptrdiff_t((b * fs.dim() + a) * out.dim()));
          }
        }
      }
    }
  for (std::size_t i = 0; i < n; ++i) c.identities.push_back(d.homs[i * n + i].coordinates(RepMorphism::identity(d.objects[i])));
  d.category = std::make_shared<const FinCategory>(std::move(c));
  ModuleCategory m;
  m.d_ = std::make_shared<const Data>(std::move(d));
  return m;
}

ModuleCategory add_category(std::vector<Rep> mods, std::vector<std::string> names) {
  if (mods.empty()) throw std::invalid_argument("add_category: at least one object required");
  for (const auto& r : mods)
    if (r.base() != mods.front().base() || r.variance() != mods.front().variance())
      throw std::invalid_argument("add_category: objects live over different bases or variances");
  if (names.empty())
    for (std::size_t i = 0; i < mods.size(); ++i) names.push_back("M" + std::to_string(i + 1));
  if (names.size() != mods.size()) throw std::invalid_argument("add_category: one name per object required");
  ModuleCategory::Data d;
  d.ambient = mods.front().base();
  d.variance = mods.front().variance();
  d.names = std::move(names);
  const std::size_t n = mods.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.homs.emplace_back(mods[i], mods[j]);
  d.objects = std::move(mods);
  return ModuleCategory::assemble(std::move(d));
}

ModuleCategory ModuleCategory::full_subcategory(const std::vector<std::size_t>& indices) const {
  Data d;
  d.ambient = d_->ambient;
  d.variance = d_->variance;
  for (std::size_t i : indices) {
    d.objects.push_back(object(i));
    d.names.push_back(name(i));
  }
  for (std::size_t i : indices)
    for (std::size_t j : indices) d.homs.push_back(hom(i, j));
  return assemble(std::move(d));
}

RestrictedHom phi_full(const Rep& x, const ModuleCategory& m) {
  const FinCategory& c = *m.category();
  const std::size_t n = m.size();
  RestrictedHom out;
  for (std::size_t i = 0; i < n; ++i) out.spaces.emplace_back(m.object(i), x);
  Rep::Data d{m.category(), Variance::contravariant, {}, {}};
  for (const auto& s : out.spaces) d.dims.push_back(s.dim());
  d.action.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < c.hom_dim(i, j); ++k) {
        // f: M_i -> M_j acts Hom(M_j, X) -> Hom(M_i, X), g ↦ g∘f
        RepMorphism fk = m.hom(i, j).element(k);
        Matrix a(out.spaces[i].dim(), out.spaces[j].dim());
        for (std::size_t col = 0; col < out.spaces[j].dim(); ++col) {
          Vector v = out.spaces[i].coordinates(compose(out.spaces[j].element(col), fk));
          for (std::size_t r = 0; r < v.size(); ++r) a(r, col) = v[r];
        }
        d.action[i * n + j].push_back(std::move(a));
      }
  out.rep = Rep(std::move(d));
  return out;
}

Rep phi(const Rep& x, const ModuleCategory& m) { return phi_full(x, m).rep; }

RestrictedHom psi_full(const Rep& x, const ModuleCategory& m) {
  const FinCategory& c = *m.category();
  const std::size_t n = m.size();
  RestrictedHom out;
  for (std::size_t i = 0; i < n; ++i) out.spaces.emplace_back(x, m.object(i));
  Rep::Data d{m.category(), Variance::covariant, {}, {}};
  for (const auto& s : out.spaces) d.dims.push_back(s.dim());
  d.action.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < c.hom_dim(i, j); ++k) {
        // f: M_i -> M_j acts Hom(X, M_i) -> Hom(X, M_j), g ↦ f∘g
        RepMorphism fk = m.hom(i, j).element(k);
        Matrix a(out.spaces[j].dim(), out.spaces[i].dim());
        for (std::size_t col = 0; col < out.spaces[i].dim(); ++col) {
          Vector v = out.spaces[j].coordinates(compose(fk, out.spaces[i].element(col)));
          for (std::size_t r = 0; r < v.size(); ++r) a(r, col) = v[r];
        }
        d.action[i * n + j].push_back(std::move(a));
      }
  out.rep = Rep(std::move(d));
  return out;
}

Rep psi(const Rep& x, const ModuleCategory& m) { return psi_full(x, m).rep; }

RepMorphism phi_map(const RepMorphism& u, const RestrictedHom& phi_x, const RestrictedHom& phi_y) {
  RepMorphism out{phi_x.rep, phi_y.rep, {}};
  for (std::size_t i = 0; i < phi_x.spaces.size(); ++i) {
    Matrix a(phi_y.spaces[i].dim(), phi_x.spaces[i].dim());
    for (std::size_t col = 0; col < phi_x.spaces[i].dim(); ++col) {
      Vector v = phi_y.spaces[i].coordinates(compose(u, phi_x.spaces[i].element(col)));
      for (std::size_t r = 0; r < v.size(); ++r) a(r, col) = v[r];
    }
    out.components.push_back(std::move(a));
  }
  return out;
}

RepMorphism psi_map(const RepMorphism& u, const RestrictedHom& psi_x, const RestrictedHom& psi_y) {
  RepMorphism out{psi_y.rep, psi_x.rep, {}};
  for (std::size_t i = 0; i < psi_x.spaces.size(); ++i) {
    Matrix a(psi_x.spaces[i].dim(), psi_y.spaces[i].dim());
    for (std::size_t col = 0; col < psi_y.spaces[i].dim(); ++col) {
      Vector v = psi_x.spaces[i].coordinates(compose(psi_y.spaces[i].element(col), u));
      for (std::size_t r = 0; r < v.size(); ++r) a(r, col) = v[r];
    }
    out.components.push_back(std::move(a));
  }
  return out;
}

Rep evaluation_functor(const ModuleCategory& m, std::size_t p) {
  const FinCategory& c = *m.category();
  const std::size_t n = m.size();
  Rep::Data d{m.category(), Variance::covariant, {}, {}};
  for (std::size_t i = 0; i < n; ++i) d.dims.push_back(m.object(i).dim(p));
  d.action.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < c.hom_dim(i, j); ++k) d.action[i * n + j].push_back(m.hom(i, j).component(k, p));
  return Rep(std::move(d));
}

RepMorphism evaluation_transport(const ModuleCategory& m, std::size_t a, std::size_t b, const Vector& coords) {
  const bool contra = m.ambient_variance() == Variance::contravariant;
  const std::size_t from = contra ? b : a, to = contra ? a : b;
  RepMorphism out{evaluation_functor(m, from), evaluation_functor(m, to), {}};
  for (std::size_t i = 0; i < m.size(); ++i) out.components.push_back(m.object(i).act(a, b, coords));
  return out;
}

}  // namespace fbal
