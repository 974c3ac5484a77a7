#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "fbal/field.hpp"

namespace fbal {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the session field F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Builds from signed integer rows, reducing each entry mod p.
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols_if_empty = 0);
  static Matrix identity(std::size_t n);
  static Matrix column(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  const std::vector<Scalar>& data() const { return data_; }
  Vector col(std::size_t c) const;
  Vector row(std::size_t r) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  /// Columns [c0, c0 + n).
  Matrix col_range(std::size_t c0, std::size_t n) const;
  Matrix row_range(std::size_t r0, std::size_t n) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& block);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, Scalar s);
Vector operator*(const Matrix& a, const Vector& v);

Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows_if_empty = 0);
Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols_if_empty = 0);
Matrix block_diag(const std::vector<Matrix>& parts);

std::string to_string(const Matrix& m);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(Matrix a);
std::size_t rank(const Matrix& a);

/// Null space of A with the positions of its free variables. Each basis
/// vector has a 1 in its own free position and 0 in the other free
/// positions, so coordinates of any kernel element are read off directly.
struct KernelSpace {
  Matrix basis;  // cols(A) x dim, columns are basis vectors
  std::vector<std::size_t> free_positions;

  std::size_t dim() const { return basis.cols(); }
  Vector coordinates(const Vector& v) const;
};

KernelSpace kernel(const Matrix& a);

/// Kernel basis as columns; count is cols(A) - rank(A).
Matrix kernel_basis(const Matrix& a);

/// Some x with A x = b, or nullopt. Throws std::invalid_argument on a
/// length mismatch.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Some X with A X = B, or nullopt.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

bool is_invertible(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);

/// Basis of the column space (a subset of the columns of A).
Matrix image_basis(const Matrix& a);

/// Quotient of F^n by the column space of `sub`: `projection` (q x n) kills
/// every column of `sub`, and projection * section = identity.
struct Quotient {
  Matrix projection;
  Matrix section;
  std::size_t dim() const { return projection.rows(); }
};

Quotient quotient(const Matrix& sub, std::size_t ambient_dim);

/// Coordinates with respect to a basis of a subspace, via an invertible
/// square row selection of the basis matrix.
class ColumnCoordinates {
 public:
  ColumnCoordinates() = default;
  /// `basis` must have full column rank.
  explicit ColumnCoordinates(Matrix basis);

  const Matrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.cols(); }
  /// Coordinates of vectors assumed to lie in the span (columns of m).
  Matrix coordinates(const Matrix& m) const;
  Vector coordinates(const Vector& v) const;

 private:
  Matrix basis_;
  std::vector<std::size_t> rows_;
  Matrix inv_;
};

/// Incrementally maintained span of vectors in F^n, kept in reduced
/// echelon form.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t ambient_dim) : n_(ambient_dim) {}

  std::size_t dim() const { return rows_.size(); }
  bool contains(const Vector& v) const;
  /// Returns true when v enlarged the span.
  bool add(const Vector& v);
  /// Representative of v modulo the span, zero at every pivot position.
  Vector reduce(Vector v) const;

 private:
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace fbal
