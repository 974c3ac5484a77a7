#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fbal/matrix.hpp"

using namespace fbal;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, std::uint32_t p, int density = 100) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (int(rng() % 100) < density) m(i, j) = Scalar(rng() % p);
  return m;
}

}  // namespace

TEST_CASE("rref of the identity and zero matrices") {
  auto r = rref(Matrix::identity(3));
  CHECK(r.rank == 3);
  CHECK(r.reduced == Matrix::identity(3));
  auto z = rref(Matrix(2, 4));
  CHECK(z.rank == 0);
  CHECK(z.reduced.is_zero());
}

TEST_CASE("rank-one matrix over F_5") {
  field::PrimeGuard g(5);
  Matrix a = Matrix::from_rows({{1, 2}, {2, 4}});
  auto r = rref(a);
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  Matrix k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  // multiples of (3,1)
  CHECK(field::mul(k(0, 0), 1) == field::mul(3, k(1, 0)));
  CHECK((a * k).is_zero());
}

TEST_CASE("kernel of identity is empty, kernel of zero is everything") {
  CHECK(kernel_basis(Matrix::identity(4)).cols() == 0);
  Matrix k = kernel_basis(Matrix(2, 3));
  CHECK(k.cols() == 3);
  CHECK(rank(k) == 3);
}

TEST_CASE("solve") {
  Vector b{7, 0, 99};
  auto x = solve(Matrix::identity(3), b);
  REQUIRE(x);
  CHECK(*x == b);
  CHECK_FALSE(solve(Matrix(2, 2), Vector{1, 0}));
  CHECK_THROWS_AS(solve(Matrix(2, 2), Vector{1}), std::invalid_argument);
  field::PrimeGuard g(5);
  auto y = solve(Matrix::from_rows({{2}}), Vector{3});
  REQUIRE(y);
  CHECK((*y)[0] == 4);
}

TEST_CASE("field arithmetic and prime validation") {
  CHECK(field::prime() == 101);
  CHECK_THROWS_AS(field::set_prime(100), std::invalid_argument);
  CHECK(field::from_int(-1) == 100);
  for (Scalar a = 1; a < 101; ++a) CHECK(field::mul(a, field::inv(a)) == 1);
}

TEST_CASE("random properties: rank of transpose, rank-nullity, solve round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
    Matrix a = random_matrix(rng, r, c, field::prime(), int(20 + rng() % 80));
    if (trial % 3 == 0 && r > 1) {
      // force dependent rows
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = field::add(a(0, j), a(0, j));
    }
    CHECK(rank(a) == rank(a.transpose()));
    Matrix k = kernel_basis(a);
    CHECK(k.cols() + rank(a) == c);
    CHECK((a * k).is_zero());
    CHECK(rank(k) == k.cols());
    Vector x0(c);
    for (auto& v : x0) v = Scalar(rng() % field::prime());
    Vector b = a * x0;
    auto x = solve(a, b);
    REQUIRE(x);
    CHECK(a * *x == b);
  }
}

TEST_CASE("inverse, quotient and column coordinates") {
  std::mt19937_64 rng(3);
  Matrix a = random_matrix(rng, 5, 5, field::prime());
  if (auto inv = inverse(a)) CHECK((a * *inv).is_identity());
  Matrix sub = random_matrix(rng, 6, 2, field::prime());
  Quotient q = quotient(sub, 6);
  CHECK(q.dim() == 6 - rank(sub));
  CHECK((q.projection * sub).is_zero());
  CHECK((q.projection * q.section).is_identity());
  ColumnCoordinates cc(image_basis(sub));
  Matrix combo = sub * Matrix::from_rows({{2}, {5}});
  CHECK(cc.basis() * cc.coordinates(combo) == combo);
}

TEST_CASE("incremental span") {
  IncrementalSpan s(3);
  CHECK(s.add({1, 2, 3}));
  CHECK_FALSE(s.add({2, 4, 6}));
  CHECK(s.add({0, 1, 0}));
  CHECK(s.contains({1, 0, 3}));
  CHECK_FALSE(s.contains({0, 0, 1}));
  CHECK(s.dim() == 2);
}
