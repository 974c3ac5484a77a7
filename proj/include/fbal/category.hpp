#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "fbal/matrix.hpp"

namespace fbal {

/// Basis element `index` of Hom(source, target).
struct BasisMorphism {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t index = 0;
};

/// A finite k-linear category presented by based Hom spaces and the
/// structure constants of composition.
///
/// For g = basis b of Hom(j,l) and f = basis a of Hom(i,j), the composite
/// g∘f has coordinates comp(i,j,l)[(b * dim Hom(i,j) + a) * dim Hom(i,l) + c].
class FinCategory {
 public:
  struct Data {
    std::vector<std::string> names;
    std::vector<std::size_t> hom_dims;        // n*n, entry i*n+j = dim Hom(i,j)
    std::vector<std::vector<Scalar>> comp;    // n*n*n, index (i*n+j)*n+l
    std::vector<Vector> identities;           // coordinates of id_i in Hom(i,i)
    std::vector<BasisMorphism> generators;    // empty: every basis element
  };

  explicit FinCategory(Data data);

  std::size_t size() const { return d_.names.size(); }
  const std::string& name(std::size_t i) const { return d_.names.at(i); }
  const std::vector<std::string>& names() const { return d_.names; }
  std::size_t hom_dim(std::size_t i, std::size_t j) const { return d_.hom_dims[i * size() + j]; }
  std::size_t total_hom_dim() const;

  Scalar comp_coeff(std::size_t i, std::size_t j, std::size_t l, std::size_t b, std::size_t a,
                    std::size_t c) const {
    return d_.comp[(i * size() + j) * size() + l][(b * hom_dim(i, j) + a) * hom_dim(i, l) + c];
  }
  const Vector& identity(std::size_t i) const { return d_.identities.at(i); }

  /// g∘f for g ∈ Hom(j,l), f ∈ Hom(i,j) given in coordinates.
  Vector compose(std::size_t i, std::size_t j, std::size_t l, const Vector& g, const Vector& f) const;

  /// Matrix of Hom(i,j) -> Hom(i,l), f ↦ g∘f.
  Matrix postcompose(std::size_t i, std::size_t j, std::size_t l, const Vector& g) const;
  /// Matrix of Hom(j,l) -> Hom(i,l), g ↦ g∘f.
  Matrix precompose(std::size_t i, std::size_t j, std::size_t l, const Vector& f) const;

  /// Basis morphisms that generate every Hom space under composition and
  /// linear combination. Naturality only needs checking on these.
  const std::vector<BasisMorphism>& generators() const { return generators_; }
  bool has_explicit_generators() const { return !d_.generators.empty(); }

  const Data& data() const { return d_; }

  /// Same objects with Hom_op(i,j) = Hom(j,i).
  FinCategory opposite() const;

 private:
  Data d_;
  std::vector<BasisMorphism> generators_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

/// Empty iff composition is associative and identities are neutral on all
/// basis triples. Also reports malformed tensor sizes.
std::vector<std::string> validate_category(const FinCategory& c);

}  // namespace fbal
