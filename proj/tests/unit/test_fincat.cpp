#include <doctest.h>

#include "fbal/addcat.hpp"
#include "fbal/corpus.hpp"
#include "fbal/quiver.hpp"

using namespace fbal;

namespace {

QuiverSpec dual_numbers_spec() {
  QuiverSpec s;
  s.vertices = {"v"};
  s.arrows = {{"x", 0, 0}};
  s.relations.push_back(Relation{{RelationTerm{1, {"x", "x"}}}});
  s.length_bound = 2;
  return s;
}

QuiverSpec a2_spec() {
  QuiverSpec s;
  s.vertices = {"1", "2"};
  s.arrows = {{"a", 0, 1}};
  s.length_bound = 2;
  return s;
}

// u ↦ (g ↦ u∘g) lands in natural maps, is injective, and Hom dimensions match.
bool yoneda_faithful(const CategoryPtr& c, std::size_t q, std::size_t p) {
  NatSpace nat(yoneda(c, q), yoneda(c, p));
  if (nat.dim() != c->hom_dim(q, p)) return false;
  // u ∈ Hom(q,p) induces h_q -> h_p, g ↦ u∘g; its image at q sends id_q to u.
  for (std::size_t k = 0; k < c->hom_dim(q, p); ++k) {
    Vector e(c->hom_dim(q, p), 0);
    e[k] = 1;
    RepMorphism m{yoneda(c, q), yoneda(c, p), {}};
    for (std::size_t r = 0; r < c->size(); ++r) m.components.push_back(c->postcompose(r, q, p, e));
    if (!m.is_natural()) return false;
    if (m.components[q] * c->identity(q) != e) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("dual numbers as a bound quiver") {
  BoundQuiver q = build_bound_quiver_category(dual_numbers_spec());
  CHECK(q.category->hom_dim(0, 0) == 2);
  CHECK(validate_category(*q.category).empty());
  Rep h = yoneda(q.category, 0);
  CHECK(h.dim(0) == 2);
  const Matrix& x = h.act(0, 0, q.arrow_basis[0].index);
  CHECK(rank(x) == 1);
  CHECK((x * x).is_zero());
  CHECK(validate_rep(h).empty());
}

TEST_CASE("A2 and the one-vertex quiver") {
  BoundQuiver q = build_bound_quiver_category(a2_spec());
  const FinCategory& c = *q.category;
  CHECK(c.hom_dim(0, 0) == 1);
  CHECK(c.hom_dim(1, 1) == 1);
  CHECK(c.hom_dim(1, 0) == 0);
  CHECK(c.hom_dim(0, 1) == 1);
  CHECK(yoneda(q.category, 0).dims() == std::vector<std::size_t>{1, 0});
  CHECK(coyoneda_injective(q.category, 0).dims() == std::vector<std::size_t>{1, 1});

  QuiverSpec pt;
  pt.vertices = {"*"};
  BoundQuiver f = build_bound_quiver_category(pt);
  CHECK(f.category->size() == 1);
  CHECK(f.category->hom_dim(0, 0) == 1);
  CHECK(yoneda(f.category, 0).dims() == std::vector<std::size_t>{1});
  CHECK(coyoneda_injective(f.category, 0).dims() == std::vector<std::size_t>{1});
}

TEST_CASE("bound quiver input errors") {
  QuiverSpec s = dual_numbers_spec();
  s.length_bound = 1;  // x itself would have to vanish
  CHECK_THROWS_AS(build_bound_quiver_category(s), QuiverError);
  QuiverSpec t;
  t.vertices = {"v"};
  t.arrows = {{"x", 0, 0}};
  t.length_bound = 3;  // x^3 not in the (empty) ideal
  CHECK_THROWS_AS(build_bound_quiver_category(t), QuiverError);
  QuiverSpec u = dual_numbers_spec();
  u.relations[0].terms[0].arrows = {"y", "x"};
  CHECK_THROWS_AS(build_bound_quiver_category(u), QuiverError);
  QuiverSpec w = a2_spec();
  w.arrows.push_back({"b", 0, 5});
  CHECK_THROWS_AS(build_bound_quiver_category(w), QuiverError);
}

TEST_CASE("commutative square with a relation") {
  QuiverSpec s;
  s.vertices = {"1", "2", "3", "4"};
  s.arrows = {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}};
  s.relations.push_back(Relation{{RelationTerm{1, {"a", "b"}}, RelationTerm{-1, {"c", "d"}}}});
  s.length_bound = 3;
  BoundQuiver q = build_bound_quiver_category(s);
  CHECK(q.category->hom_dim(0, 3) == 1);
  CHECK(validate_category(*q.category).empty());
  // a representation violating commutativity is rejected
  Matrix one = Matrix::identity(1);
  CHECK_NOTHROW(rep_from_arrows(q, Variance::covariant, {1, 1, 1, 1}, {one, one, one, one}));
  CHECK_THROWS_AS(rep_from_arrows(q, Variance::covariant, {1, 1, 1, 1}, {one, one, one, Matrix(1, 1)}), QuiverError);
}

TEST_CASE("validate_category reports corruption") {
  BoundQuiver q = build_bound_quiver_category(dual_numbers_spec());
  FinCategory::Data d = q.category->data();
  d.identities[0] = Vector(2, 0);
  CHECK_FALSE(validate_category(FinCategory(d)).empty());
  // over k[x]/(x^3) declare x∘x^2 = 1 while x^2∘x stays 0
  CorpusInstance t3 = truncated_polynomial(3);
  const BoundQuiver& q3 = t3.quiver;
  std::size_t ix = 0, ix2 = 0, id = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t len = q3.basis_paths[0][k].length();
    (len == 0 ? id : len == 1 ? ix : ix2) = k;
  }
  FinCategory::Data e = q3.category->data();
  e.comp[0][(ix * 3 + ix2) * 3 + id] = 1;
  CHECK_FALSE(validate_category(FinCategory(e)).empty());
}

TEST_CASE("Yoneda full faithfulness on every corpus category") {
  for (auto inst : {truncated_polynomial(3), linear_quiver(3), points(2)}) {
    const CategoryPtr& c = inst.category();
    for (std::size_t q = 0; q < c->size(); ++q)
      for (std::size_t p = 0; p < c->size(); ++p) CHECK(yoneda_faithful(c, q, p));
  }
}

TEST_CASE("Hom(h_P, F) has dimension dim F(P)") {
  CorpusInstance a3 = linear_quiver(3);
  for (const auto& m : a3.indecomposables)
    for (std::size_t p = 0; p < 3; ++p) CHECK(hom_dim(yoneda(a3.category(), p), m.rep) == m.rep.dim(p));
  CorpusInstance t2 = truncated_polynomial(2);
  Rep h = yoneda(t2.category(), 0);
  CHECK(hom_dim(h, h) == 2);
  CorpusInstance a2 = linear_quiver(2);
  CHECK(hom_dim(a2.module("S1"), a2.module("S2")) == 0);
  CHECK(hom_dim(a2.module("S2"), a2.module("S1")) == 0);
}

TEST_CASE("functoriality of every corpus module") {
  for (auto inst : {truncated_polynomial(4), linear_quiver(4), points(3)}) {
    for (const auto& m : inst.indecomposables) CHECK(validate_rep(m.rep).empty());
    for (const auto& p : inst.projectives()) CHECK(validate_rep(p).empty());
    for (const auto& e : inst.injectives()) CHECK(validate_rep(e).empty());
  }
}

TEST_CASE("injective lifting test") {
  // For a mono u: A -> B and any A -> E, a lift B -> E exists.
  for (auto inst : {truncated_polynomial(3), linear_quiver(3)}) {
    const CategoryPtr& c = inst.category();
    for (std::size_t p = 0; p < c->size(); ++p) {
      Rep e = coyoneda_injective(c, p);
      for (const auto& a : inst.indecomposables)
        for (const auto& b : inst.indecomposables) {
          NatSpace ab(a.rep, b.rep);
          NatSpace be(b.rep, e);
          NatSpace ae(a.rep, e);
          for (const auto& u : ab.basis()) {
            if (!u.is_mono()) continue;
            Matrix pre = precomposition_matrix(u, be, ae);
            CHECK(rank(pre) == ae.dim());
          }
        }
    }
  }
}

TEST_CASE("dual numbers: E is isomorphic to h") {
  CorpusInstance t2 = truncated_polynomial(2);
  Rep h = yoneda(t2.category(), 0), e = coyoneda_injective(t2.category(), 0);
  NatSpace he(h, e);
  bool found = false;
  for (const auto& m : he.basis()) found = found || m.is_iso();
  CHECK(found);
}

TEST_CASE("add_category Hom dimensions") {
  CorpusInstance t2 = truncated_polynomial(2);
  Rep lam = t2.module("M2"), s = t2.module("M1");
  ModuleCategory m = add_category({lam, s}, {"L", "S"});
  const FinCategory& c = *m.category();
  CHECK(c.hom_dim(0, 0) == 2);
  CHECK(c.hom_dim(0, 1) == 1);
  CHECK(c.hom_dim(1, 0) == 1);
  CHECK(c.hom_dim(1, 1) == 1);
  CHECK(validate_category(c).empty());

  CorpusInstance f = truncated_polynomial(1);
  ModuleCategory mf = add_category({f.module("M1")});
  CHECK(mf.category()->hom_dim(0, 0) == 1);

  CorpusInstance a3 = linear_quiver(3);
  ModuleCategory mp = add_category(a3.projectives());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(mp.category()->hom_dim(i, j) == a3.category()->hom_dim(i, j));
  CHECK(validate_category(*mp.category()).empty());

  CHECK_THROWS_AS(add_category({lam, a3.module("S1")}), std::invalid_argument);
}

TEST_CASE("full subcategories agree with direct construction") {
  CorpusInstance a3 = linear_quiver(3);
  std::vector<Rep> mods;
  for (const auto& m : a3.indecomposables) mods.push_back(m.rep);
  ModuleCategory all = add_category(mods);
  ModuleCategory sub = all.full_subcategory({1, 3, 5});
  ModuleCategory direct = add_category({mods[1], mods[3], mods[5]});
  CHECK(sub.category()->data().hom_dims == direct.category()->data().hom_dims);
  CHECK(sub.category()->data().comp == direct.category()->data().comp);
  CHECK(validate_category(*sub.category()).empty());
}

TEST_CASE("phi and psi") {
  CorpusInstance t2 = truncated_polynomial(2);
  ModuleCategory m = add_category({t2.module("M2")});
  Rep s = t2.module("M1");
  CHECK(phi(s, m).dims() == std::vector<std::size_t>{1});
  CHECK(psi(s, m).dims() == std::vector<std::size_t>{1});
  CHECK(phi(zero_rep(t2.category(), Variance::contravariant), m).is_zero());
  CHECK(psi(zero_rep(t2.category(), Variance::contravariant), m).is_zero());

  CorpusInstance a3 = linear_quiver(3);
  ModuleCategory ma = add_category({a3.module("P2"), a3.module("S2"), a3.module("I1")});
  for (std::size_t i = 0; i < ma.size(); ++i) {
    Rep ph = phi(ma.object(i), ma);
    CHECK(validate_rep(ph).empty());
    // Φ(M_i) is the representable at i
    Rep y = representable(ma.category(), Variance::contravariant, i);
    CHECK(ph.dims() == y.dims());
    bool iso = false;
    for (const auto& u : NatSpace(y, ph).basis()) iso = iso || u.is_iso();
    CHECK(iso);
    CHECK(validate_rep(psi(ma.object(i), ma)).empty());
  }
}

TEST_CASE("evaluation functor is the Yoneda model of psi(h_P)") {
  for (auto inst : {truncated_polynomial(3), linear_quiver(3)}) {
    std::vector<Rep> mods;
    for (const auto& x : inst.indecomposables) mods.push_back(x.rep);
    ModuleCategory m = add_category(mods);
    for (std::size_t p = 0; p < inst.category()->size(); ++p) {
      Rep ev = evaluation_functor(m, p);
      CHECK(validate_rep(ev).empty());
      RestrictedHom ph = psi_full(yoneda(inst.category(), p), m);
      // η ↦ η_P(id_P) is a natural isomorphism Ψ(h_P) -> ev_P
      RepMorphism iso{ph.rep, ev, {}};
      for (std::size_t i = 0; i < m.size(); ++i) {
        Matrix comp(ev.dim(i), ph.rep.dim(i));
        for (std::size_t c = 0; c < ph.rep.dim(i); ++c) {
          Vector v = ph.spaces[i].component(c, p) * inst.category()->identity(p);
          for (std::size_t r = 0; r < v.size(); ++r) comp(r, c) = v[r];
        }
        iso.components.push_back(comp);
      }
      CHECK(iso.is_natural());
      CHECK(iso.is_iso());
    }
  }
}

TEST_CASE("phi_map and psi_map are functorial") {
  CorpusInstance a3 = linear_quiver(3);
  ModuleCategory m = add_category({a3.module("P3"), a3.module("S2")});
  Rep x = a3.module("[1,2]"), y = a3.module("[2,3]"), z = a3.module("S2");
  NatSpace xy(x, y), yz(y, z);
  auto px = phi_full(x, m), py = phi_full(y, m), pz = phi_full(z, m);
  auto sx = psi_full(x, m), sy = psi_full(y, m), sz = psi_full(z, m);
  for (const auto& u : xy.basis())
    for (const auto& v : yz.basis()) {
      RepMorphism a = phi_map(compose(v, u), px, pz);
      RepMorphism b = compose(phi_map(v, py, pz), phi_map(u, px, py));
      CHECK(a == b);
      CHECK(a.is_natural());
      RepMorphism c = psi_map(compose(v, u), sx, sz);
      RepMorphism d = compose(psi_map(u, sx, sy), psi_map(v, sy, sz));
      CHECK(c == d);
      CHECK(c.is_natural());
    }
}
