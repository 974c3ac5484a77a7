#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "fbal/category.hpp"
#include "fbal/matrix.hpp"

namespace fbal {

enum class Variance { contravariant, covariant };

inline Variance flip(Variance v) {
  return v == Variance::contravariant ? Variance::covariant : Variance::contravariant;
}
const char* to_string(Variance v);

/// A representation of a FinCategory in finite-dimensional F_p spaces.
///
/// For a basis element f of Hom(a,b) the action matrix is F(f): F(b) -> F(a)
/// when contravariant and F(f): F(a) -> F(b) when covariant. Reps are
/// immutable and share their storage on copy.
class Rep {
 public:
  struct Data {
    CategoryPtr base;
    Variance variance = Variance::contravariant;
    std::vector<std::size_t> dims;
    std::vector<std::vector<Matrix>> action;  // index a*n+b, one matrix per basis element of Hom(a,b)
  };

  Rep() = default;
  explicit Rep(Data data);

  const CategoryPtr& base() const { return d_->base; }
  const FinCategory& category() const { return *d_->base; }
  Variance variance() const { return d_->variance; }
  std::size_t dim(std::size_t obj) const { return d_->dims.at(obj); }
  const std::vector<std::size_t>& dims() const { return d_->dims; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const Matrix& act(std::size_t a, std::size_t b, std::size_t idx) const {
    return d_->action[a * category().size() + b][idx];
  }
  /// Action of a linear combination of basis elements of Hom(a,b).
  Matrix act(std::size_t a, std::size_t b, const Vector& coords) const;

  /// Object the action of a morphism a -> b starts from / lands in.
  std::size_t act_dom(std::size_t a, std::size_t b) const { return variance() == Variance::contravariant ? b : a; }
  std::size_t act_cod(std::size_t a, std::size_t b) const { return variance() == Variance::contravariant ? a : b; }

  const Data& data() const { return *d_; }
  bool same_shape(const Rep& other) const;

  friend bool operator==(const Rep& x, const Rep& y);

 private:
  std::shared_ptr<const Data> d_;
};

/// Empty iff every action matrix has the right shape, identities act as
/// identities and composition is respected (contravariantly when flagged).
std::vector<std::string> validate_rep(const Rep& r);

/// A natural transformation, one matrix per object.
struct RepMorphism {
  Rep source;
  Rep target;
  std::vector<Matrix> components;

  static RepMorphism identity(const Rep& r);
  static RepMorphism zero(const Rep& source, const Rep& target);

  bool is_natural() const;
  bool is_zero() const;
  bool is_iso() const;
  bool is_mono() const;
  bool is_epi() const;
  /// Concatenation of the row-major components in object order.
  Vector flatten() const;
};

RepMorphism compose(const RepMorphism& g, const RepMorphism& f);  // g∘f
RepMorphism operator+(const RepMorphism& a, const RepMorphism& b);
RepMorphism scale(const RepMorphism& a, Scalar s);
bool operator==(const RepMorphism& a, const RepMorphism& b);

/// Hom(F, G) in the representation category: the solution space of all
/// naturality constraints.
class NatSpace {
 public:
  NatSpace() = default;
  NatSpace(Rep source, Rep target);

  const Rep& source() const { return source_; }
  const Rep& target() const { return target_; }
  std::size_t dim() const { return kernel_.dim(); }

  RepMorphism element(std::size_t i) const;
  RepMorphism from_coordinates(const Vector& coords) const;
  std::vector<RepMorphism> basis() const;
  /// Coordinates of a natural transformation F -> G in this basis.
  Vector coordinates(const RepMorphism& m) const;
  Vector coordinates_flat(const Vector& flat) const { return kernel_.coordinates(flat); }
  RepMorphism unflatten(const Vector& flat) const;
  /// Component at `obj` of the i-th basis element.
  Matrix component(std::size_t i, std::size_t obj) const;

  /// Matrix (columns = basis elements) of all flattened basis morphisms.
  const Matrix& basis_matrix() const { return kernel_.basis; }
  std::size_t offset(std::size_t obj) const { return offsets_[obj]; }

 private:
  Rep source_;
  Rep target_;
  std::vector<std::size_t> offsets_;
  KernelSpace kernel_;
};

NatSpace nat_transformations(const Rep& source, const Rep& target);

/// Matrix of Hom(B, E) -> Hom(A, E), v ↦ v∘u, on NatSpace bases.
Matrix precomposition_matrix(const RepMorphism& u, const NatSpace& from_target, const NatSpace& to_source);

// ---- constructions -------------------------------------------------------

Rep zero_rep(const CategoryPtr& base, Variance v);

/// Representable functor at object i: Hom(-, i) when contravariant,
/// Hom(i, -) when covariant.
Rep representable(const CategoryPtr& base, Variance v, std::size_t i);

/// h_P = Hom(-, P) with action by precomposition.
Rep yoneda(const CategoryPtr& base, std::size_t p);

/// E_P(Q) = Hom(P, Q)^*, the contravariant injective at P.
Rep coyoneda_injective(const CategoryPtr& base, std::size_t p);

struct DirectSum {
  Rep sum;
  std::vector<RepMorphism> injections;
  std::vector<RepMorphism> projections;
};
DirectSum direct_sum(const std::vector<Rep>& parts, const CategoryPtr& base, Variance v);
Rep direct_sum_rep(const std::vector<Rep>& parts, const CategoryPtr& base, Variance v);

/// Kernel of u as a subrepresentation, with its inclusion.
RepMorphism kernel_inclusion(const RepMorphism& u);
/// Cokernel of u with the projection target -> coker.
RepMorphism cokernel_projection(const RepMorphism& u);
/// Image of u with the factorization source -> image -> target.
struct ImageFactorization {
  RepMorphism onto;
  RepMorphism into;
};
ImageFactorization image(const RepMorphism& u);

/// Subrepresentation given objectwise by spanning columns (closed under the
/// action; checked), returned as its inclusion.
RepMorphism subrep_inclusion(const Rep& ambient, const std::vector<Matrix>& spanning);

/// Dimension of Hom(source, target) without returning the basis.
std::size_t hom_dim(const Rep& source, const Rep& target);

}  // namespace fbal
