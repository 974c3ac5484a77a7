#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "fbal/rep.hpp"

namespace fbal {

/// A finite sum of representables ⊕_t proj_{a_t}, where proj_a = Hom(-, a)
/// when contravariant and Hom(a, -) when covariant. Generator t is the
/// identity of a_t in summand t.
struct FreeModule {
  CategoryPtr base;
  Variance variance = Variance::contravariant;
  std::vector<std::size_t> generators;  // a_t
  Rep rep;

  std::size_t rank() const { return generators.size(); }
  /// Offset of summand t inside rep(q).
  std::size_t offset(std::size_t t, std::size_t q) const;
};

FreeModule free_module(const CategoryPtr& base, Variance v, std::vector<std::size_t> generators);

/// Matrix of W(f): W(a_t) -> W(a_s) or W(a_s) -> W(a_t) (as W's variance
/// dictates) for the element f of proj_{s}(t) with the given coordinates,
/// where proj is taken with variance `v`.
Matrix act_element(const Rep& w, Variance v, std::size_t s, std::size_t t, const Vector& coords);

/// The morphism from a free module to X sending generator t to images[t] ∈ X(a_t).
RepMorphism map_from_free(const FreeModule& f, const Rep& x, const std::vector<Vector>& images);

enum class CoverStrategy {
  canonical,  // one generator per basis vector of every F(i)
  pruned,     // an irredundant generating set
};

struct FreeCover {
  FreeModule free;
  std::vector<Vector> images;  // image of generator t in F(a_t)
  RepMorphism projection;      // objectwise surjective
};

FreeCover free_cover(const Rep& f, CoverStrategy strategy = CoverStrategy::canonical);

/// P_len -> ... -> P_0 -> F -> 0. differentials[0] is the augmentation
/// P_0 -> F; differentials[n] : P_n -> P_{n-1}. images[n][t] is the image of
/// generator t of P_n (an element of F(a_t) for n = 0, of P_{n-1}(a_t) else).
struct FreeResolution {
  Rep target;
  std::vector<FreeModule> terms;
  std::vector<std::vector<Vector>> images;
  std::vector<RepMorphism> differentials;

  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
};

FreeResolution free_resolution(const Rep& f, std::size_t length, CoverStrategy strategy = CoverStrategy::pruned);

/// Empty iff every differential is natural, consecutive composites vanish,
/// the augmentation is surjective and every term is exact (by ranks).
std::vector<std::string> check_resolution(const FreeResolution& r);

/// Cochain complex Hom(P_•, G) ≅ ⊕_t G(a_t) with coboundaries
/// delta[n] : C^n -> C^{n+1}.
struct HomComplex {
  std::vector<std::size_t> dims;
  std::vector<Matrix> delta;
};
HomComplex hom_complex(const FreeResolution& r, const Rep& g);

/// dim Ext^i(F, G) from a resolution of F of length at least i + 1.
std::size_t ext_dim(const FreeResolution& r, const Rep& g, std::size_t i);
std::size_t ext_dim(const Rep& f, const Rep& g, std::size_t i, CoverStrategy strategy = CoverStrategy::pruned);
/// Ext^0..Ext^{count-1} from a single resolution.
std::vector<std::size_t> ext_dims(const FreeResolution& r, const Rep& g, std::size_t count);

/// The coend F ⊗_𝓜 G (F contravariant, G covariant over one base): the
/// quotient of ⊕_M F(M) ⊗ G(M) (index offset(M) + x * dim G(M) + y) by the
/// relations F(f)x ⊗ y - x ⊗ G(f)y.
struct BilinearPairingSpace {
  Rep left;
  Rep right;
  std::vector<std::size_t> offsets;
  std::size_t ambient_dim = 0;
  Matrix relations;  // ambient_dim x #relations
  Quotient quotient;

  std::size_t dim() const { return quotient.dim(); }
  /// Class of x ⊗ y for x ∈ F(m), y ∈ G(m).
  Vector project(std::size_t m, const Vector& x, const Vector& y) const;
  /// Class of the simple tensor e_x ⊗ e_y at object m.
  Vector project_basis(std::size_t m, std::size_t x, std::size_t y) const;
};

BilinearPairingSpace tensor_over(const Rep& f, const Rep& g);

/// Chain complex P_• ⊗ W ≅ ⊕_t W(a_t) for a resolution of one tensor factor;
/// boundary[n] : C_n -> C_{n-1} for n ≥ 1 (boundary[0] is the zero map).
struct TensorComplex {
  std::vector<std::size_t> dims;
  std::vector<Matrix> boundary;
};
TensorComplex tensor_complex(const FreeResolution& r, const Rep& w);

/// dim Tor_i(F, G) from a resolution of either factor (the other factor is `w`).
std::size_t tor_dim(const FreeResolution& r, const Rep& w, std::size_t i);
std::vector<std::size_t> tor_dims(const FreeResolution& r, const Rep& w, std::size_t count);

enum class TorSide { resolve_left, resolve_right };
std::size_t tor_dim(const Rep& f, const Rep& g, std::size_t i, TorSide side = TorSide::resolve_left,
                    CoverStrategy strategy = CoverStrategy::pruned);

/// Witness that a module is finitely presented to degree k: a resolution
/// of length k whose terms are finite free modules. Always exists here.
struct ModKWitness {
  bool member = true;
  FreeResolution resolution;
};
ModKWitness mod_k_witness(const Rep& f, std::size_t k);

/// Resolutions memoized per Rep (by storage identity). Lookups take a shared
/// lock, inserts an exclusive one; a shorter cached resolution is replaced
/// by a longer one.
class ResolutionCache {
 public:
  FreeResolution get(const Rep& f, std::size_t length);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mu_;
  std::map<const void*, FreeResolution> table_;
};

}  // namespace fbal
