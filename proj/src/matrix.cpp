#include "fbal/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace fbal {

namespace f = field;

namespace {
constexpr std::uint64_t kReduceAt = std::uint64_t(1) << 63;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f::from_int(rows[r][c]);
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const Vector& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + std::ptrdiff_t(r * cols_), data_.begin() + std::ptrdiff_t((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (Scalar s : data_)
    if (s != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

Matrix Matrix::col_range(std::size_t c0, std::size_t n) const {
  require(c0 + n <= cols_, "column range out of bounds");
  Matrix m(rows_, n);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = (*this)(r, c0 + c);
  return m;
}

Matrix Matrix::row_range(std::size_t r0, std::size_t n) const {
  require(r0 + n <= rows_, "row range out of bounds");
  Matrix m(n, cols_);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r0 + r, c);
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& block) {
  require(r0 + block.rows() <= rows_ && c0 + block.cols() <= cols_, "block out of bounds");
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) (*this)(r0 + r, c0 + c) = block(r, c);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matrix product shape mismatch");
  const std::uint64_t p = f::prime();
  Matrix out(a.rows(), b.cols());
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::uint64_t x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        acc[c] += x * b(k, c);
        if (acc[c] >= kReduceAt) acc[c] %= p;
      }
    }
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = Scalar(acc[c] % p);
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  require(a.cols() == v.size(), "matrix-vector shape mismatch");
  const std::uint64_t p = f::prime();
  Vector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      acc += std::uint64_t(a(r, k)) * v[k];
      if (acc >= kReduceAt) acc %= p;
    }
    out[r] = Scalar(acc % p);
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f::add(a(r, c), b(r, c));
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f::sub(a(r, c), b(r, c));
  return out;
}

Matrix scale(const Matrix& a, Scalar s) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f::mul(a(r, c), s);
  return out;
}

Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows_if_empty) {
  std::size_t rows = parts.empty() ? rows_if_empty : parts.front().rows();
  std::size_t cols = 0;
  for (const auto& m : parts) {
    require(m.rows() == rows, "hstack row mismatch");
    cols += m.cols();
  }
  Matrix out(rows, cols);
  std::size_t c0 = 0;
  for (const auto& m : parts) {
    out.set_block(0, c0, m);
    c0 += m.cols();
  }
  return out;
}

Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols_if_empty) {
  std::size_t cols = parts.empty() ? cols_if_empty : parts.front().cols();
  std::size_t rows = 0;
  for (const auto& m : parts) {
    require(m.cols() == cols, "vstack column mismatch");
    rows += m.rows();
  }
  Matrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& m : parts) {
    out.set_block(r0, 0, m);
    r0 += m.rows();
  }
  return out;
}

Matrix block_diag(const std::vector<Matrix>& parts) {
  std::size_t rows = 0, cols = 0;
  for (const auto& m : parts) {
    rows += m.rows();
    cols += m.cols();
  }
  Matrix out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& m : parts) {
    out.set_block(r0, c0, m);
    r0 += m.rows();
    c0 += m.cols();
  }
  return out;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

RrefResult rref(Matrix a) {
  RrefResult res;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t sel = pr;
    while (sel < rows && a(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pr)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(sel, k), a(pr, k));
    Scalar iv = f::inv(a(pr, c));
    for (std::size_t k = c; k < cols; ++k) a(pr, k) = f::mul(a(pr, k), iv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr) continue;
      Scalar factor = a(r, c);
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        if (a(pr, k) != 0) a(r, k) = f::sub(a(r, k), f::mul(factor, a(pr, k)));
      }
    }
    res.pivots.push_back(c);
    ++pr;
  }
  res.rank = pr;
  res.reduced = std::move(a);
  return res;
}

std::size_t rank(const Matrix& a) {
  if (a.empty()) return 0;
  // Eliminate along the shorter side.
  return a.rows() <= a.cols() ? rref(a).rank : rref(a.transpose()).rank;
}

Vector KernelSpace::coordinates(const Vector& v) const {
  Vector out(free_positions.size());
  for (std::size_t i = 0; i < free_positions.size(); ++i) out[i] = v[free_positions[i]];
  return out;
}

KernelSpace kernel(const Matrix& a) {
  const std::size_t n = a.cols();
  KernelSpace ks;
  if (a.rows() == 0) {
    ks.basis = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) ks.free_positions.push_back(i);
    return ks;
  }
  RrefResult rr = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) ks.free_positions.push_back(c);
  ks.basis = Matrix(n, ks.free_positions.size());
  for (std::size_t j = 0; j < ks.free_positions.size(); ++j) {
    std::size_t fc = ks.free_positions[j];
    ks.basis(fc, j) = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) ks.basis(rr.pivots[r], j) = f::neg(rr.reduced(r, fc));
  }
  return ks;
}

Matrix kernel_basis(const Matrix& a) { return kernel(a).basis; }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), "solve: right-hand side has wrong length");
  const std::size_t n = a.cols();
  Matrix aug = hstack({a, b}, a.rows());
  RrefResult rr = rref(std::move(aug));
  Matrix x(n, b.cols());
  for (std::size_t r = 0; r < rr.rank; ++r) {
    std::size_t pc = rr.pivots[r];
    if (pc >= n) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(pc, c) = rr.reduced(r, n + c);
  }
  return x;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  auto x = solve(a, Matrix::column(b));
  if (!x) return std::nullopt;
  return x->col(0);
}

bool is_invertible(const Matrix& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto x = solve(a, Matrix::identity(a.rows()));
  if (!x || !(a * *x).is_identity()) return std::nullopt;
  return x;
}

Matrix image_basis(const Matrix& a) {
  RrefResult rr = rref(a);
  Matrix out(a.rows(), rr.rank);
  for (std::size_t j = 0; j < rr.rank; ++j)
    for (std::size_t r = 0; r < a.rows(); ++r) out(r, j) = a(r, rr.pivots[j]);
  return out;
}

Quotient quotient(const Matrix& sub, std::size_t ambient_dim) {
  require(sub.rows() == ambient_dim, "quotient: subspace generators have wrong length");
  RrefResult rr = rref(sub.transpose());
  std::vector<bool> is_pivot(ambient_dim, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) rest.push_back(c);
  Quotient q{Matrix(rest.size(), ambient_dim), Matrix(ambient_dim, rest.size())};
  for (std::size_t i = 0; i < rest.size(); ++i) {
    q.section(rest[i], i) = 1;
    q.projection(i, rest[i]) = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) q.projection(i, rr.pivots[r]) = f::neg(rr.reduced(r, rest[i]));
  }
  return q;
}

Vector IncrementalSpan::reduce(Vector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar factor = v[pivots_[i]];
    if (factor == 0) continue;
    const Vector& row = rows_[i];
    for (std::size_t k = 0; k < n_; ++k)
      if (row[k] != 0) v[k] = f::sub(v[k], f::mul(factor, row[k]));
  }
  return v;
}

bool IncrementalSpan::contains(const Vector& v) const {
  Vector r = reduce(v);
  for (Scalar s : r)
    if (s != 0) return false;
  return true;
}

bool IncrementalSpan::add(const Vector& v) {
  require(v.size() == n_, "span vector has wrong length");
  Vector r = reduce(v);
  std::size_t piv = n_;
  for (std::size_t k = 0; k < n_; ++k)
    if (r[k] != 0) {
      piv = k;
      break;
    }
  if (piv == n_) return false;
  Scalar iv = f::inv(r[piv]);
  for (Scalar& s : r) s = f::mul(s, iv);
  for (auto& row : rows_) {
    Scalar factor = row[piv];
    if (factor == 0) continue;
    for (std::size_t k = 0; k < n_; ++k)
      if (r[k] != 0) row[k] = f::sub(row[k], f::mul(factor, r[k]));
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

}  // namespace fbal

namespace fbal {

ColumnCoordinates::ColumnCoordinates(Matrix basis) : basis_(std::move(basis)) {
  RrefResult rr = rref(basis_.transpose());
  if (rr.rank != basis_.cols()) throw std::invalid_argument("ColumnCoordinates: basis is not independent");
  rows_ = rr.pivots;
  Matrix square(rows_.size(), rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_.size(); ++j) square(i, j) = basis_(rows_[i], j);
  inv_ = *inverse(square);
}

Matrix ColumnCoordinates::coordinates(const Matrix& m) const {
  Matrix sel(rows_.size(), m.cols());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) sel(i, c) = m(rows_[i], c);
  return inv_ * sel;
}

Vector ColumnCoordinates::coordinates(const Vector& v) const {
  Vector sel(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) sel[i] = v[rows_[i]];
  return inv_ * sel;
}

}  // namespace fbal
