#pragma once

#include <vector>

#include "fbal/addcat.hpp"
#include "fbal/homalg.hpp"

namespace fbal {

/// Ψ′(Z)(P) = Hom(Z, Ψ(h_P)) for a covariant 𝓜-module Z, with Ψ(h_P)
/// modelled by the evaluation functor ev_P. Contravariant over the ambient
/// category; u acts by η ↦ ev(u)∘η.
struct PsiPrime {
  Rep rep;
  std::vector<NatSpace> spaces;  // one per ambient object P: Hom(Z, ev_P)
};
PsiPrime psi_prime_full(const Rep& z, const ModuleCategory& m);
Rep psi_prime(const Rep& z, const ModuleCategory& m);

/// Ψ′(w): Ψ′(Z′) -> Ψ′(Z), η ↦ η∘w for w: Z -> Z′.
RepMorphism psi_prime_map(const RepMorphism& w, const PsiPrime& of_source, const PsiPrime& of_target);

/// Φ′(Z)(P) = Z ⊗_𝓜 ev_P for a contravariant 𝓜-module Z.
struct PhiPrime {
  Rep rep;
  std::vector<BilinearPairingSpace> spaces;  // one per ambient object
};
PhiPrime phi_prime_full(const Rep& z, const ModuleCategory& m);
Rep phi_prime(const Rep& z, const ModuleCategory& m);

/// Φ′(v): Φ′(Z) -> Φ′(Z′), z ⊗ m ↦ v(z) ⊗ m for v: Z -> Z′.
RepMorphism phi_prime_map(const RepMorphism& v, const PhiPrime& of_source, const PhiPrime& of_target);

/// χ : Hom(X, Ψ′Z) -> Hom(Z, ΨX) and χ′ in the other direction, as matrices
/// on the NatSpace bases.
struct AdjunctionWitness {
  NatSpace left;   // Hom(X, Ψ′Z)
  NatSpace right;  // Hom(Z, ΨX)
  Matrix chi;        // right.dim() x left.dim()
  Matrix chi_prime;  // left.dim() x right.dim()

  bool mutually_inverse() const;
};

AdjunctionWitness chi_witness(const Rep& x, const Rep& z, const ModuleCategory& m);

/// α_X : X -> Ψ′Ψ(X); at P, x ↦ (g ↦ g_P(x)).
struct UnitData {
  RepMorphism map;
  RestrictedHom psi_x;  // Ψ(X)
  PsiPrime psi_prime_psi_x;  // Ψ′Ψ(X)
};
UnitData unit_alpha_full(const Rep& x, const ModuleCategory& m);
RepMorphism unit_alpha(const Rep& x, const ModuleCategory& m);

/// α′_Z : Z -> ΨΨ′(Z); at M_i, z ↦ (η ↦ η_{M_i}(z)).
struct CounitPrimeData {
  RepMorphism map;
  PsiPrime psi_prime_z;       // Ψ′(Z)
  RestrictedHom psi_psi_prime_z;  // ΨΨ′(Z)
};
CounitPrimeData alpha_prime_full(const Rep& z, const ModuleCategory& m);
RepMorphism alpha_prime(const Rep& z, const ModuleCategory& m);

/// φ_X : ε_X = Φ′Φ(X) -> X; at P, g ⊗ m ↦ g_P(m).
struct CounitData {
  RepMorphism map;
  RestrictedHom phi_x;
  PhiPrime epsilon;
  bool well_defined = true;  // kills every coend relation
};
CounitData counit_varphi_full(const Rep& x, const ModuleCategory& m);
RepMorphism counit_varphi(const Rep& x, const ModuleCategory& m);

/// Ψ(α_X)∘α′_{ΨX} = id and Ψ′(α′_Z)∘α_{Ψ′Z} = id, as matrices.
bool triangle_check(const Rep& x, const Rep& z, const ModuleCategory& m);
bool triangle_identity_x(const Rep& x, const ModuleCategory& m);
bool triangle_identity_z(const Rep& z, const ModuleCategory& m);

}  // namespace fbal
