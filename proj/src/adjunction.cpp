#include "fbal/adjunction.hpp"

#include <stdexcept>

namespace fbal {

namespace {

void set_column(Matrix& m, std::size_t col, const Vector& v) {
  for (std::size_t r = 0; r < v.size(); ++r) m(r, col) = v[r];
}

Vector unit_vector(std::size_t dim, std::size_t k) {
  Vector e(dim, 0);
  e[k] = 1;
  return e;
}

// Objects the action of the ambient basis morphism a -> b starts from / lands in.
std::pair<std::size_t, std::size_t> action_ends(const ModuleCategory& m, std::size_t a, std::size_t b) {
  return m.ambient_variance() == Variance::contravariant ? std::pair{b, a} : std::pair{a, b};
}

}  // namespace

PsiPrime psi_prime_full(const Rep& z, const ModuleCategory& m) {
  if (z.base() != m.category() || z.variance() != Variance::covariant)
    throw std::invalid_argument("psi_prime: expects a covariant module over the add-category");
  const FinCategory& p = *m.ambient();
  const std::size_t n = p.size();
  PsiPrime out;
  for (std::size_t q = 0; q < n; ++q) out.spaces.emplace_back(z, evaluation_functor(m, q));
  Rep::Data d{m.ambient(), m.ambient_variance(), {}, {}};
  for (const auto& s : out.spaces) d.dims.push_back(s.dim());
  d.action.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < p.hom_dim(a, b); ++k) {
        RepMorphism t = evaluation_transport(m, a, b, unit_vector(p.hom_dim(a, b), k));
        auto [from, to] = action_ends(m, a, b);
        Matrix act(out.spaces[to].dim(), out.spaces[from].dim());
        for (std::size_t c = 0; c < out.spaces[from].dim(); ++c)
          set_column(act, c, out.spaces[to].coordinates(compose(t, out.spaces[from].element(c))));
        d.action[a * n + b].push_back(std::move(act));
      }
  out.rep = Rep(std::move(d));
  return out;
}

Rep psi_prime(const Rep& z, const ModuleCategory& m) { return psi_prime_full(z, m).rep; }

RepMorphism psi_prime_map(const RepMorphism& w, const PsiPrime& of_source, const PsiPrime& of_target) {
  RepMorphism out{of_target.rep, of_source.rep, {}};
  for (std::size_t q = 0; q < of_source.spaces.size(); ++q) {
    Matrix c(of_source.spaces[q].dim(), of_target.spaces[q].dim());
    for (std::size_t j = 0; j < of_target.spaces[q].dim(); ++j)
      set_column(c, j, of_source.spaces[q].coordinates(compose(of_target.spaces[q].element(j), w)));
    out.components.push_back(std::move(c));
  }
  return out;
}

PhiPrime phi_prime_full(const Rep& z, const ModuleCategory& m) {
  if (z.base() != m.category() || z.variance() != Variance::contravariant)
    throw std::invalid_argument("phi_prime: expects a contravariant module over the add-category");
  const FinCategory& p = *m.ambient();
  const std::size_t n = p.size();
  PhiPrime out;
  for (std::size_t q = 0; q < n; ++q) out.spaces.push_back(tensor_over(z, evaluation_functor(m, q)));
  Rep::Data d{m.ambient(), m.ambient_variance(), {}, {}};
  for (const auto& s : out.spaces) d.dims.push_back(s.dim());
  d.action.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < p.hom_dim(a, b); ++k) {
        RepMorphism t = evaluation_transport(m, a, b, unit_vector(p.hom_dim(a, b), k));
        auto [from, to] = action_ends(m, a, b);
        const BilinearPairingSpace& sf = out.spaces[from];
        const BilinearPairingSpace& st = out.spaces[to];
        // id ⊗ ev(u) on the ambient sums
        Matrix lift(st.ambient_dim, sf.ambient_dim);
        for (std::size_t i = 0; i < m.size(); ++i) {
          const Matrix& ti = t.components[i];
          for (std::size_t x = 0; x < z.dim(i); ++x)
            for (std::size_t y = 0; y < ti.cols(); ++y)
              for (std::size_t y2 = 0; y2 < ti.rows(); ++y2)
                lift(st.offsets[i] + x * ti.rows() + y2, sf.offsets[i] + x * ti.cols() + y) = ti(y2, y);
        }
        d.action[a * n + b].push_back(st.quotient.projection * lift * sf.quotient.section);
      }
  out.rep = Rep(std::move(d));
  return out;
}

Rep phi_prime(const Rep& z, const ModuleCategory& m) { return phi_prime_full(z, m).rep; }

RepMorphism phi_prime_map(const RepMorphism& v, const PhiPrime& of_source, const PhiPrime& of_target) {
  RepMorphism out{of_source.rep, of_target.rep, {}};
  for (std::size_t q = 0; q < of_source.spaces.size(); ++q) {
    const BilinearPairingSpace& sf = of_source.spaces[q];
    const BilinearPairingSpace& st = of_target.spaces[q];
    Matrix lift(st.ambient_dim, sf.ambient_dim);
    for (std::size_t i = 0; i < v.components.size(); ++i) {
      const Matrix& vi = v.components[i];
      const std::size_t dm = sf.right.dim(i);
      for (std::size_t x = 0; x < vi.cols(); ++x)
        for (std::size_t x2 = 0; x2 < vi.rows(); ++x2)
          if (vi(x2, x) != 0)
            for (std::size_t y = 0; y < dm; ++y) lift(st.offsets[i] + x2 * dm + y, sf.offsets[i] + x * dm + y) = vi(x2, x);
    }
    out.components.push_back(st.quotient.projection * lift * sf.quotient.section);
  }
  return out;
}

bool AdjunctionWitness::mutually_inverse() const {
  return (chi * chi_prime).is_identity() && (chi_prime * chi).is_identity();
}

AdjunctionWitness chi_witness(const Rep& x, const Rep& z, const ModuleCategory& m) {
  const std::size_t np = m.ambient()->size(), nm = m.size();
  RestrictedHom px = psi_full(x, m);
  PsiPrime pz = psi_prime_full(z, m);
  AdjunctionWitness w{NatSpace(x, pz.rep), NatSpace(z, px.rep), {}, {}};
  w.chi = Matrix(w.right.dim(), w.left.dim());
  w.chi_prime = Matrix(w.left.dim(), w.right.dim());

  // χ(θ)_i(z) = (P ↦ (x ↦ θ_P(x)_i(z)))
  for (std::size_t l = 0; l < w.left.dim(); ++l) {
    RepMorphism theta = w.left.element(l);
    std::vector<std::vector<RepMorphism>> vals(np);  // θ_P(e_d) ∈ Hom(Z, ev_P)
    for (std::size_t q = 0; q < np; ++q)
      for (std::size_t d = 0; d < x.dim(q); ++d) vals[q].push_back(pz.spaces[q].from_coordinates(theta.components[q].col(d)));
    RepMorphism sigma{z, px.rep, {}};
    for (std::size_t i = 0; i < nm; ++i) {
      Matrix comp(px.rep.dim(i), z.dim(i));
      for (std::size_t c = 0; c < z.dim(i); ++c) {
        RepMorphism g{x, m.object(i), {}};
        for (std::size_t q = 0; q < np; ++q) {
          Matrix gq(m.object(i).dim(q), x.dim(q));
          for (std::size_t d = 0; d < x.dim(q); ++d) set_column(gq, d, vals[q][d].components[i].col(c));
          g.components.push_back(std::move(gq));
        }
        set_column(comp, c, px.spaces[i].coordinates(g));
      }
      sigma.components.push_back(std::move(comp));
    }
    set_column(w.chi, l, w.right.coordinates(sigma));
  }

  // χ′(σ)_P(x) = (i ↦ (z ↦ σ_i(z)_P(x)))
  for (std::size_t r = 0; r < w.right.dim(); ++r) {
    RepMorphism sigma = w.right.element(r);
    std::vector<std::vector<RepMorphism>> vals(nm);  // σ_i(e_c) ∈ Hom(X, M_i)
    for (std::size_t i = 0; i < nm; ++i)
      for (std::size_t c = 0; c < z.dim(i); ++c) vals[i].push_back(px.spaces[i].from_coordinates(sigma.components[i].col(c)));
    RepMorphism theta{x, pz.rep, {}};
    for (std::size_t q = 0; q < np; ++q) {
      Matrix comp(pz.rep.dim(q), x.dim(q));
      for (std::size_t d = 0; d < x.dim(q); ++d) {
        RepMorphism eta{z, pz.spaces[q].target(), {}};
        for (std::size_t i = 0; i < nm; ++i) {
          Matrix ei(m.object(i).dim(q), z.dim(i));
          for (std::size_t c = 0; c < z.dim(i); ++c) set_column(ei, c, vals[i][c].components[q].col(d));
          eta.components.push_back(std::move(ei));
        }
        set_column(comp, d, pz.spaces[q].coordinates(eta));
      }
      theta.components.push_back(std::move(comp));
    }
    set_column(w.chi_prime, r, w.left.coordinates(theta));
  }
  return w;
}

UnitData unit_alpha_full(const Rep& x, const ModuleCategory& m) {
  UnitData u;
  u.psi_x = psi_full(x, m);
  u.psi_prime_psi_x = psi_prime_full(u.psi_x.rep, m);
  const PsiPrime& pp = u.psi_prime_psi_x;
  u.map = RepMorphism{x, pp.rep, {}};
  for (std::size_t q = 0; q < m.ambient()->size(); ++q) {
    Matrix comp(pp.rep.dim(q), x.dim(q));
    for (std::size_t d = 0; d < x.dim(q); ++d) {
      RepMorphism eta{u.psi_x.rep, pp.spaces[q].target(), {}};
      for (std::size_t i = 0; i < m.size(); ++i) {
        Matrix ei(m.object(i).dim(q), u.psi_x.rep.dim(i));
        for (std::size_t g = 0; g < u.psi_x.rep.dim(i); ++g) set_column(ei, g, u.psi_x.spaces[i].component(g, q).col(d));
        eta.components.push_back(std::move(ei));
      }
      set_column(comp, d, pp.spaces[q].coordinates(eta));
    }
    u.map.components.push_back(std::move(comp));
  }
  return u;
}

RepMorphism unit_alpha(const Rep& x, const ModuleCategory& m) { return unit_alpha_full(x, m).map; }

CounitPrimeData alpha_prime_full(const Rep& z, const ModuleCategory& m) {
  CounitPrimeData a;
  a.psi_prime_z = psi_prime_full(z, m);
  a.psi_psi_prime_z = psi_full(a.psi_prime_z.rep, m);
  const PsiPrime& pz = a.psi_prime_z;
  const RestrictedHom& ppz = a.psi_psi_prime_z;
  const std::size_t np = m.ambient()->size();
  a.map = RepMorphism{z, ppz.rep, {}};
  for (std::size_t i = 0; i < m.size(); ++i) {
    Matrix comp(ppz.rep.dim(i), z.dim(i));
    for (std::size_t c = 0; c < z.dim(i); ++c) {
      RepMorphism theta{pz.rep, m.object(i), {}};
      for (std::size_t q = 0; q < np; ++q) {
        Matrix tq(m.object(i).dim(q), pz.rep.dim(q));
        for (std::size_t e = 0; e < pz.rep.dim(q); ++e) set_column(tq, e, pz.spaces[q].component(e, i).col(c));
        theta.components.push_back(std::move(tq));
      }
      set_column(comp, c, ppz.spaces[i].coordinates(theta));
    }
    a.map.components.push_back(std::move(comp));
  }
  return a;
}

RepMorphism alpha_prime(const Rep& z, const ModuleCategory& m) { return alpha_prime_full(z, m).map; }

CounitData counit_varphi_full(const Rep& x, const ModuleCategory& m) {
  CounitData c;
  c.phi_x = phi_full(x, m);
  c.epsilon = phi_prime_full(c.phi_x.rep, m);
  c.map = RepMorphism{c.epsilon.rep, x, {}};
  for (std::size_t q = 0; q < m.ambient()->size(); ++q) {
    const BilinearPairingSpace& t = c.epsilon.spaces[q];
    Matrix lift(x.dim(q), t.ambient_dim);
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::size_t dm = m.object(i).dim(q);
      for (std::size_t g = 0; g < c.phi_x.rep.dim(i); ++g) {
        Matrix gq = c.phi_x.spaces[i].component(g, q);
        for (std::size_t y = 0; y < dm; ++y) set_column(lift, t.offsets[i] + g * dm + y, gq.col(y));
      }
    }
    if (!(lift * t.relations).is_zero()) c.well_defined = false;
    c.map.components.push_back(lift * t.quotient.section);
  }
  return c;
}

RepMorphism counit_varphi(const Rep& x, const ModuleCategory& m) { return counit_varphi_full(x, m).map; }

bool triangle_identity_x(const Rep& x, const ModuleCategory& m) {
  UnitData u = unit_alpha_full(x, m);
  CounitPrimeData a = alpha_prime_full(u.psi_x.rep, m);
  RepMorphism psi_alpha = psi_map(u.map, u.psi_x, a.psi_psi_prime_z);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!(psi_alpha.components[i] * a.map.components[i]).is_identity()) return false;
  return true;
}

bool triangle_identity_z(const Rep& z, const ModuleCategory& m) {
  CounitPrimeData a = alpha_prime_full(z, m);
  UnitData u = unit_alpha_full(a.psi_prime_z.rep, m);
  RepMorphism psi_prime_alpha = psi_prime_map(a.map, a.psi_prime_z, u.psi_prime_psi_x);
  for (std::size_t q = 0; q < m.ambient()->size(); ++q)
    if (!(psi_prime_alpha.components[q] * u.map.components[q]).is_identity()) return false;
  return true;
}

bool triangle_check(const Rep& x, const Rep& z, const ModuleCategory& m) {
  return triangle_identity_x(x, m) && triangle_identity_z(z, m);
}

}  // namespace fbal
