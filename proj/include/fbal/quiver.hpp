#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fbal/category.hpp"
#include "fbal/rep.hpp"

namespace fbal {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// A path traversed left to right: arrows[0] first. Length-0 paths are the
/// trivial paths at `source`.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  friend auto operator<=>(const Path&, const Path&) = default;
};

struct RelationTerm {
  std::int64_t coeff = 1;
  std::vector<std::string> arrows;  // traversal order
};

struct Relation {
  std::vector<RelationTerm> terms;
};

/// Vertices, arrows, relations and a length bound L: every path of length
/// at least L must lie in the ideal generated by the relations.
struct QuiverSpec {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  std::size_t length_bound = 1;
};

class QuiverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The k-linear category of a bound quiver, plus the path chosen for each
/// Hom basis element so that representations can be given on arrows.
struct BoundQuiver {
  QuiverSpec spec;
  CategoryPtr category;
  std::vector<std::vector<Path>> basis_paths;  // index x*n+y
  std::vector<BasisMorphism> arrow_basis;      // arrow k as a basis element

  std::size_t arrow_index(const std::string& name) const;
  std::size_t vertex_index(const std::string& name) const;
};

/// Hom spaces are path spaces modulo the ideal of the relations, computed by
/// closing the relations under left/right path multiplication up to length
/// L and taking the complement of the ideal span. Throws QuiverError on
/// malformed specs, non-admissible relations, or when some path of length L
/// is not in the ideal (L too small).
BoundQuiver build_bound_quiver_category(const QuiverSpec& spec);

/// A representation given by one matrix per arrow: for an arrow a: i -> j the
/// matrix is X(j) -> X(i) when contravariant and X(i) -> X(j) when covariant.
/// Throws QuiverError when shapes are wrong or the relations are violated.
Rep rep_from_arrows(const BoundQuiver& q, Variance v, const std::vector<std::size_t>& dims,
                    const std::vector<Matrix>& arrow_matrices);

}  // namespace fbal
