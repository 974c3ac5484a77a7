#include <doctest.h>

#include "../support/oracles.hpp"
#include "fbal/corpus.hpp"
#include "fbal/field.hpp"
#include "fbal/homalg.hpp"

using namespace fbal;

namespace {

// dim Hom(X, Y) over F_2 by counting every family of objectwise matrices
// that commutes with all basis actions.
std::size_t brute_force_hom_dim(const Rep& x, const Rep& y) {
  const FinCategory& c = x.category();
  std::vector<std::size_t> sizes;
  std::size_t entries = 0;
  for (std::size_t q = 0; q < c.size(); ++q) {
    sizes.push_back(x.dim(q) * y.dim(q));
    entries += sizes.back();
  }
  REQUIRE(entries <= 16);
  std::size_t solutions = 0;
  for (std::size_t mask = 0; mask < (std::size_t(1) << entries); ++mask) {
    std::vector<Matrix> f;
    std::size_t bit = 0;
    for (std::size_t q = 0; q < c.size(); ++q) {
      Matrix m(y.dim(q), x.dim(q));
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t s = 0; s < m.cols(); ++s) m(r, s) = Scalar(mask >> bit++ & 1);
      f.push_back(m);
    }
    bool natural = true;
    for (std::size_t a = 0; a < c.size() && natural; ++a)
      for (std::size_t b = 0; b < c.size() && natural; ++b)
        for (std::size_t i = 0; i < c.hom_dim(a, b) && natural; ++i) {
          const std::size_t dom = x.act_dom(a, b), cod = x.act_cod(a, b);
          natural = y.act(a, b, i) * f[dom] == f[cod] * x.act(a, b, i);
        }
    if (natural) ++solutions;
  }
  std::size_t d = 0;
  while ((std::size_t(1) << d) < solutions) ++d;
  REQUIRE((std::size_t(1) << d) == solutions);
  return d;
}

}  // namespace

TEST_CASE("basic subcategory counts") {
  CHECK(enumerate_basic_subcategories(truncated_polynomial(2)).size() == 3);
  CHECK(enumerate_basic_subcategories(truncated_polynomial(3)).size() == 7);
  CHECK(enumerate_basic_subcategories(linear_quiver(2)).size() == 7);
  CHECK(enumerate_basic_subcategories(linear_quiver(3)).size() == 63);
  auto subs = enumerate_basic_subcategories(points(2));
  REQUIRE(subs.size() == 3);
  CHECK(subs[0].key == "{S1}");
  CHECK(subs[2].key == "{S1,S2}");
  CHECK(subs[2].category.size() == 2);
}

TEST_CASE("corpus selectors") {
  CHECK(corpus_instance("truncpoly:3").indecomposables.size() == 3);
  CHECK(corpus_instance("a_n:4").indecomposables.size() == 10);
  CHECK(corpus_instance("points:2").indecomposables.size() == 2);
  CHECK_THROWS_AS(corpus_instance("truncpoly"), std::invalid_argument);
  CHECK_THROWS_AS(corpus_instance("wild:3"), std::invalid_argument);
  CHECK(truncated_polynomial(3).self_injective);
  CHECK_FALSE(linear_quiver(3).self_injective);
}

TEST_CASE("random modules are deterministic and functorial") {
  for (auto inst : {truncated_polynomial(2), truncated_polynomial(4), linear_quiver(3)})
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      Rep a = random_module(inst, seed, 3), b = random_module(inst, seed, 3);
      CHECK(a == b);
      CHECK(validate_rep(a).empty());
      Rep z = random_module(inst.category(), Variance::covariant, seed, 3);
      CHECK(validate_rep(z).empty());
    }
  CorpusInstance t2 = truncated_polynomial(2);
  Rep r = random_module(t2, 7, 3);
  CHECK(validate_rep(r).empty());
  CHECK_THROWS_AS(random_module(t2, 0, 0), std::invalid_argument);
  std::size_t nonzero = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) nonzero += !random_module(t2, seed, 3).is_zero();
  CHECK(nonzero == 20);
}

TEST_CASE("projectives and injectives against the simples") {
  for (auto inst : {truncated_polynomial(3), linear_quiver(3), linear_quiver(4)}) {
    std::vector<Rep> simples;
    for (const auto& m : inst.indecomposables)
      if (m.rep.total_dim() == 1) simples.push_back(m.rep);
    REQUIRE(simples.size() == inst.category()->size());
    for (const Rep& p : inst.projectives())
      for (const Rep& s : simples) CHECK(ext_dim(p, s, 1) == 0);
    for (const Rep& e : inst.injectives())
      for (const Rep& s : simples) CHECK(ext_dim(s, e, 1) == 0);
  }
}

TEST_CASE("interval Hom and Ext tables over A_n") {
  field::PrimeGuard guard(2);
  for (std::size_t n = 2; n <= 4; ++n) {
    CorpusInstance a = linear_quiver(n);
    REQUIRE(a.indecomposables.size() == n * (n + 1) / 2);
    for (const auto& x : a.indecomposables)
      for (const auto& y : a.indecomposables) {
        const std::size_t h = hom_dim(x.rep, y.rep);
        CHECK_MESSAGE(h == brute_force_hom_dim(x.rep, y.rep), x.name, " -> ", y.name);
        CHECK(h <= 1);
        auto oracle = oracle::ext_by_injectives(x.rep, y.rep, 3);
        for (std::size_t i = 0; i < 3; ++i) CHECK(ext_dim(x.rep, y.rep, i) == oracle[i]);
        CHECK(oracle[2] == 0);  // hereditary
      }
  }
}

TEST_CASE("uniserial Hom table over k[x]/(x^n)") {
  field::PrimeGuard guard(2);
  CorpusInstance t = truncated_polynomial(3);
  for (const auto& x : t.indecomposables)
    for (const auto& y : t.indecomposables) {
      // Hom(k[x]/x^a, k[x]/x^b) has dimension min(a, b)
      const std::size_t expected = std::min(x.rep.total_dim(), y.rep.total_dim());
      CHECK(hom_dim(x.rep, y.rep) == expected);
      CHECK(brute_force_hom_dim(x.rep, y.rep) == expected);
    }
}
