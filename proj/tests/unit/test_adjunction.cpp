#include <doctest.h>

#include "fbal/adjunction.hpp"
#include "fbal/corpus.hpp"

using namespace fbal;

namespace {

ModuleCategory add_of(const CorpusInstance& inst, const std::vector<std::string>& names) {
  std::vector<Rep> mods;
  for (const auto& n : names) mods.push_back(inst.module(n));
  return add_category(mods, names);
}

ModuleCategory add_all(const CorpusInstance& inst) {
  std::vector<Rep> mods;
  for (const auto& m : inst.indecomposables) mods.push_back(m.rep);
  return add_category(mods);
}

Vector identity_coords(const NatSpace& s, const Rep& r) { return s.coordinates(RepMorphism::identity(r)); }

}  // namespace

TEST_CASE("psi_prime on evaluation functors, zero and the simple") {
  CorpusInstance a3 = linear_quiver(3);
  ModuleCategory m = add_of(a3, {"P3", "S2", "[2,3]"});
  for (std::size_t p = 0; p < 3; ++p) {
    Rep z = psi(yoneda(a3.category(), p), m);
    PsiPrime pp = psi_prime_full(z, m);
    CHECK(validate_rep(pp.rep).empty());
    for (std::size_t q = 0; q < 3; ++q) CHECK(pp.rep.dim(q) == hom_dim(z, psi(yoneda(a3.category(), q), m)));
  }
  CHECK(psi_prime(zero_rep(m.category(), Variance::covariant), m).is_zero());
  CorpusInstance t2 = truncated_polynomial(2);
  ModuleCategory ml = add_of(t2, {"M2"});
  CHECK(psi_prime(psi(t2.module("M1"), ml), ml).dims() == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(psi_prime(t2.module("M1"), ml), std::invalid_argument);
}

TEST_CASE("phi_prime recovers the objects of M") {
  CorpusInstance a3 = linear_quiver(3);
  ModuleCategory m = add_of(a3, {"P2", "S3", "I1"});
  for (std::size_t i = 0; i < m.size(); ++i) {
    Rep a = phi_prime(phi(m.object(i), m), m);
    Rep b = phi_prime(representable(m.category(), Variance::contravariant, i), m);
    CHECK(validate_rep(a).empty());
    CHECK(a.dims() == m.object(i).dims());
    CHECK(b.dims() == m.object(i).dims());
    CHECK(counit_varphi(m.object(i), m).is_iso());
  }
  CHECK(phi_prime(zero_rep(m.category(), Variance::contravariant), m).is_zero());
}

TEST_CASE("chi and chi_prime are mutually inverse") {
  CorpusInstance t2 = truncated_polynomial(2);
  ModuleCategory ml = add_of(t2, {"M2"});
  Rep s = t2.module("M1");
  AdjunctionWitness w = chi_witness(s, psi(s, ml), ml);
  CHECK(w.left.dim() == w.right.dim());
  CHECK(w.left.dim() > 0);
  CHECK(w.mutually_inverse());

  CorpusInstance a3 = linear_quiver(3);
  ModuleCategory m = add_of(a3, {"P3", "S2"});
  for (std::size_t p = 0; p < 3; ++p) {
    Rep h = yoneda(a3.category(), p);
    AdjunctionWitness wp = chi_witness(h, psi(h, m), m);
    CHECK(wp.left.dim() == wp.right.dim());
    CHECK(wp.mutually_inverse());
  }
  AdjunctionWitness z = chi_witness(zero_rep(a3.category(), Variance::contravariant), zero_rep(m.category(), Variance::covariant), m);
  CHECK(z.left.dim() == 0);
  CHECK(z.right.dim() == 0);
  CHECK(z.mutually_inverse());

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Rep x = random_module(a3, seed, 3);
    Rep zz = random_module(m.category(), Variance::covariant, seed + 99, 3);
    AdjunctionWitness r = chi_witness(x, zz, m);
    CHECK(r.mutually_inverse());
  }
}

TEST_CASE("alpha and alpha_prime come from chi applied to identities") {
  CorpusInstance a3 = linear_quiver(3);
  ModuleCategory m = add_of(a3, {"P3", "S2", "I2"});
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Rep x = random_module(a3, seed, 3);
    UnitData u = unit_alpha_full(x, m);
    AdjunctionWitness w = chi_witness(x, u.psi_x.rep, m);
    Vector id = identity_coords(w.right, u.psi_x.rep);
    CHECK(w.left.coordinates(u.map) == w.chi_prime * id);

    Rep z = random_module(m.category(), Variance::covariant, seed + 5, 3);
    CounitPrimeData a = alpha_prime_full(z, m);
    AdjunctionWitness w2 = chi_witness(a.psi_prime_z.rep, z, m);
    Vector id2 = identity_coords(w2.left, a.psi_prime_z.rep);
    CHECK(w2.right.coordinates(a.map) == w2.chi * id2);
  }
}

TEST_CASE("unit alpha examples") {
  CorpusInstance a3 = linear_quiver(3);
  ModuleCategory m = add_of(a3, {"P2", "S3", "[2,3]"});
  for (std::size_t i = 0; i < m.size(); ++i) {
    RepMorphism a = unit_alpha(m.object(i), m);
    CHECK(a.is_natural());
    CHECK(a.is_iso());
  }
  CorpusInstance kk = points(2);
  ModuleCategory s1 = add_of(kk, {"S1"});
  Rep s2 = kk.module("S2");
  CHECK(psi(s2, s1).is_zero());
  RepMorphism a = unit_alpha(s2, s1);
  CHECK(a.target.is_zero());
  CHECK_FALSE(a.is_mono());

  CorpusInstance t2 = truncated_polynomial(2);
  ModuleCategory ml = add_of(t2, {"M2"});
  RepMorphism as = unit_alpha(t2.module("M1"), ml);
  CHECK(as.source.dims() == std::vector<std::size_t>{1});
  CHECK(as.is_iso());
}

TEST_CASE("counit varphi examples") {
  CorpusInstance kk = points(2);
  ModuleCategory s1 = add_of(kk, {"S1"});
  CounitData c = counit_varphi_full(kk.module("S2"), s1);
  CHECK(c.phi_x.rep.is_zero());
  CHECK(c.epsilon.rep.is_zero());
  CHECK(c.map.is_mono());
  CHECK_FALSE(c.map.is_epi());

  CorpusInstance t2 = truncated_polynomial(2);
  ModuleCategory ml = add_of(t2, {"M2"});
  CounitData cs = counit_varphi_full(t2.module("M1"), ml);
  CHECK(cs.well_defined);
  CHECK(cs.map.is_natural());
  CHECK(cs.map.is_iso());
}

TEST_CASE("triangle identities") {
  for (auto inst : {truncated_polynomial(2), truncated_polynomial(3), linear_quiver(3)}) {
    std::vector<ModuleCategory> ms{add_all(inst), add_of(inst, {inst.indecomposables.front().name})};
    for (const auto& m : ms) {
      CHECK(triangle_check(zero_rep(inst.category(), Variance::contravariant), zero_rep(m.category(), Variance::covariant), m));
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Rep x = random_module(inst, seed, 3);
        Rep z = random_module(m.category(), Variance::covariant, seed + 17, 2);
        CHECK(triangle_check(x, z, m));
      }
    }
  }
}

TEST_CASE("naturality of alpha and varphi") {
  CorpusInstance a3 = linear_quiver(3);
  ModuleCategory m = add_of(a3, {"P3", "S2"});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rep x = random_module(a3, seed, 3), y = random_module(a3, seed + 40, 3);
    UnitData ux = unit_alpha_full(x, m), uy = unit_alpha_full(y, m);
    CounitData cx = counit_varphi_full(x, m), cy = counit_varphi_full(y, m);
    CHECK(cx.well_defined);
    CHECK(cx.map.is_natural());
    for (const auto& u : NatSpace(x, y).basis()) {
      // Ψ′Ψ(u) ∘ α_X = α_Y ∘ u
      RepMorphism psi_u = psi_map(u, ux.psi_x, uy.psi_x);
      RepMorphism pp_u = psi_prime_map(psi_u, uy.psi_prime_psi_x, ux.psi_prime_psi_x);
      CHECK(compose(pp_u, ux.map) == compose(uy.map, u));
      // u ∘ φ_X = φ_Y ∘ Φ′Φ(u)
      RepMorphism phi_u = phi_map(u, cx.phi_x, cy.phi_x);
      RepMorphism eps_u = phi_prime_map(phi_u, cx.epsilon, cy.epsilon);
      CHECK(compose(u, cx.map) == compose(cy.map, eps_u));
    }
  }
}

TEST_CASE("isomorphic units propagate through the triangle identities") {
  for (auto inst : {truncated_polynomial(3), linear_quiver(3)}) {
    ModuleCategory m = add_of(inst, {inst.indecomposables.back().name, inst.indecomposables.front().name});
    for (const auto& xm : inst.indecomposables) {
      UnitData u = unit_alpha_full(xm.rep, m);
      if (u.map.is_iso()) CHECK(alpha_prime(u.psi_x.rep, m).is_iso());
    }
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      Rep z = random_module(m.category(), Variance::covariant, seed, 2);
      CounitPrimeData a = alpha_prime_full(z, m);
      if (a.map.is_iso()) CHECK(unit_alpha(a.psi_prime_z.rep, m).is_iso());
    }
  }
}

TEST_CASE("counit restricts to an equivalence where it is invertible") {
  for (auto inst : {truncated_polynomial(3), linear_quiver(3)}) {
    ModuleCategory m = add_of(inst, {inst.indecomposables.back().name, inst.indecomposables.front().name});
    std::vector<Rep> xs;
    for (const auto& x : inst.indecomposables) xs.push_back(x.rep);
    for (std::uint64_t seed = 0; seed < 5; ++seed) xs.push_back(random_module(inst, seed, 3));
    for (const auto& x : xs) {
      CounitData c = counit_varphi_full(x, m);
      if (!c.map.is_iso()) continue;
      // Φ(φ_X): ΦΦ′Φ(X) -> Φ(X) is invertible, so ΦΦ′ is the identity on Φ(X) up to iso
      RestrictedHom pe = phi_full(c.epsilon.rep, m);
      RepMorphism back = phi_map(c.map, pe, c.phi_x);
      CHECK(back.is_iso());
      RepMorphism inv{x, c.epsilon.rep, {}};
      for (const auto& comp : c.map.components) inv.components.push_back(*inverse(comp));
      CHECK(inv.is_natural());
      CHECK(compose(c.map, inv) == RepMorphism::identity(x));
    }
  }
}
