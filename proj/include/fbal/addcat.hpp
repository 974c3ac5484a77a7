#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "fbal/category.hpp"
#include "fbal/rep.hpp"

namespace fbal {

/// The additive category add(M_1, ..., M_n) presented as a FinCategory:
/// objects are the given representations, Hom spaces are spaces of natural
/// transformations, composition is composition of natural transformations.
///
/// Modules over it ("𝓜-modules") are Reps whose base is `category()`.
class ModuleCategory {
 public:
  ModuleCategory() = default;

  const CategoryPtr& category() const { return d_->category; }
  /// The category the objects are representations of.
  const CategoryPtr& ambient() const { return d_->ambient; }
  Variance ambient_variance() const { return d_->variance; }

  std::size_t size() const { return d_->objects.size(); }
  const Rep& object(std::size_t i) const { return d_->objects.at(i); }
  const std::vector<Rep>& objects() const { return d_->objects; }
  const std::string& name(std::size_t i) const { return d_->names.at(i); }
  const NatSpace& hom(std::size_t i, std::size_t j) const { return d_->homs[i * size() + j]; }

  /// Full subcategory on the given objects; Hom bases are shared with this one.
  ModuleCategory full_subcategory(const std::vector<std::size_t>& indices) const;

  friend ModuleCategory add_category(std::vector<Rep> mods, std::vector<std::string> names);

 private:
  struct Data {
    CategoryPtr ambient;
    Variance variance = Variance::contravariant;
    std::vector<Rep> objects;
    std::vector<std::string> names;
    std::vector<NatSpace> homs;  // i*n+j
    CategoryPtr category;
  };
  static ModuleCategory assemble(Data d);

  std::shared_ptr<const Data> d_;
};

/// Throws std::invalid_argument if the mods are not over one base and variance.
ModuleCategory add_category(std::vector<Rep> mods, std::vector<std::string> names = {});

/// Φ(X) or Ψ(X) together with the Hom spaces that form its values.
struct RestrictedHom {
  Rep rep;
  std::vector<NatSpace> spaces;  // one per object of 𝓜
};

/// Φ(X) = Hom(-, X)|_𝓜, contravariant over 𝓜; Φ(X)(M_i) = Hom(M_i, X).
RestrictedHom phi_full(const Rep& x, const ModuleCategory& m);
Rep phi(const Rep& x, const ModuleCategory& m);

/// Ψ(X) = Hom(X, -)|_𝓜, covariant over 𝓜; Ψ(X)(M_i) = Hom(X, M_i).
RestrictedHom psi_full(const Rep& x, const ModuleCategory& m);
Rep psi(const Rep& x, const ModuleCategory& m);

/// Φ(u): Φ(X) -> Φ(Y), g ↦ u∘g.
RepMorphism phi_map(const RepMorphism& u, const RestrictedHom& phi_x, const RestrictedHom& phi_y);
/// Ψ(u): Ψ(Y) -> Ψ(X), g ↦ g∘u.
RepMorphism psi_map(const RepMorphism& u, const RestrictedHom& psi_x, const RestrictedHom& psi_y);

/// The evaluation functor ev_P: M_i ↦ M_i(P), covariant over 𝓜. It is the
/// Yoneda model of Ψ(h_P) when the objects of 𝓜 are contravariant.
Rep evaluation_functor(const ModuleCategory& m, std::size_t p);

/// ev(u) for u ∈ Hom(a,b) of the ambient category: ev_b -> ev_a when the
/// objects of 𝓜 are contravariant, ev_a -> ev_b when covariant.
RepMorphism evaluation_transport(const ModuleCategory& m, std::size_t a, std::size_t b, const Vector& coords);

}  // namespace fbal
