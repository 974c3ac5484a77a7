#include "fbal/gencogen.hpp"

#include <stdexcept>

#include "fbal/adjunction.hpp"

namespace fbal {

namespace {

void set_column(Matrix& m, std::size_t col, const Vector& v) {
  for (std::size_t r = 0; r < v.size(); ++r) m(r, col) = v[r];
}

void require_ambient(const Rep& x, const ModuleCategory& m, const char* who) {
  if (x.base() != m.ambient() || x.variance() != m.ambient_variance())
    throw std::invalid_argument(std::string(who) + ": module is not over the ambient category of the add-category");
}

// Matrix of Hom(M, A) -> Hom(M, B), b ↦ u∘b, on NatSpace bases.
Matrix postcomposition_matrix(const RepMorphism& u, const NatSpace& from, const NatSpace& to) {
  Matrix out(to.dim(), from.dim());
  for (std::size_t c = 0; c < from.dim(); ++c) set_column(out, c, to.coordinates(compose(u, from.element(c))));
  return out;
}

// Objectwise: g∘f = 0 and rank f + rank g = dim of the middle term, i.e. im f = ker g.
bool exact_at(const RepMorphism& f, const RepMorphism& g) {
  if (!compose(g, f).is_zero()) return false;
  for (std::size_t q = 0; q < f.target.dims().size(); ++q)
    if (rank(f.components[q]) + rank(g.components[q]) != f.target.dim(q)) return false;
  return true;
}

bool exact_at(const Matrix& f, const Matrix& g) {
  if (f.rows() != g.cols()) return false;
  return (g * f).is_zero() && rank(f) + rank(g) == g.cols();
}

std::string step_label(const char* what, std::size_t j, const std::string& obj = {}) {
  std::string s = std::string(what) + " at step " + std::to_string(j);
  if (!obj.empty()) s += " for " + obj;
  return s;
}

}  // namespace

const char* to_string(MembershipKind k) { return k == MembershipKind::cogen ? "cogen" : "gen"; }

const char* to_string(MembershipMethod m) {
  return m == MembershipMethod::definitional ? "definitional" : "characterized";
}

namespace {

// Which basis elements c of Hom(X, M_i) (left) or Hom(M_i, X) (right) to
// keep: greedily those that enlarge some span {g∘c} ⊂ Hom(X, M_j) (resp.
// {c∘g} ⊂ Hom(M_j, X)), then drop any whose removal keeps every span full.
std::vector<std::vector<std::size_t>> select_components(const std::vector<NatSpace>& homs, const ModuleCategory& m,
                                                        bool left, bool pruned) {
  const std::size_t n = m.size();
  std::vector<std::vector<std::size_t>> keep(n);
  if (!pruned) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < homs[i].dim(); ++r) keep[i].push_back(r);
    return keep;
  }
  // images[(i, r)][j]: columns spanning the composites with c = homs[i][r]
  struct Part {
    std::size_t i, r;
    std::vector<Matrix> images;
  };
  std::vector<Part> parts;
  std::vector<std::vector<NatSpace>> between(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      between[i].push_back(left ? NatSpace(m.object(i), m.object(j)) : NatSpace(m.object(j), m.object(i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < homs[i].dim(); ++r) {
      Part p{i, r, {}};
      RepMorphism c = homs[i].element(r);
      for (std::size_t j = 0; j < n; ++j)
        p.images.push_back(left ? precomposition_matrix(c, between[i][j], homs[j])
                                : postcomposition_matrix(c, between[i][j], homs[j]));
      parts.push_back(std::move(p));
    }
  auto spans_all = [&](const std::vector<bool>& use) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Matrix> cols;
      for (std::size_t s = 0; s < parts.size(); ++s)
        if (use[s]) cols.push_back(parts[s].images[j]);
      if (rank(hstack(cols, homs[j].dim())) != homs[j].dim()) return false;
    }
    return true;
  };
  std::vector<bool> use(parts.size(), false);
  std::vector<Matrix> acc(n);
  std::vector<std::size_t> acc_rank(n, 0);
  for (std::size_t j = 0; j < n; ++j) acc[j] = Matrix(homs[j].dim(), 0);
  for (std::size_t s = 0; s < parts.size(); ++s) {
    bool grows = false;
    std::vector<Matrix> next(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (acc_rank[j] == homs[j].dim()) continue;
      next[j] = hstack({acc[j], parts[s].images[j]}, homs[j].dim());
      if (rank(next[j]) > acc_rank[j]) grows = true;
    }
    if (!grows) continue;
    use[s] = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (acc_rank[j] == homs[j].dim()) continue;
      acc[j] = std::move(next[j]);
      acc_rank[j] = rank(acc[j]);
    }
  }
  for (std::size_t s = parts.size(); s-- > 0;) {
    if (!use[s]) continue;
    use[s] = false;
    if (!spans_all(use)) use[s] = true;
  }
  for (std::size_t s = 0; s < parts.size(); ++s)
    if (use[s]) keep[parts[s].i].push_back(parts[s].r);
  return keep;
}

}  // namespace

LeftApproximation left_approximation(const Rep& x, const ModuleCategory& m, bool pruned) {
  require_ambient(x, m, "left_approximation");
  LeftApproximation a;
  std::vector<NatSpace> homs;
  for (std::size_t i = 0; i < m.size(); ++i) homs.emplace_back(x, m.object(i));
  auto keep = select_components(homs, m, true, pruned);
  std::vector<Rep> parts;
  for (std::size_t i = 0; i < m.size(); ++i) {
    a.multiplicities.push_back(keep[i].size());
    for (std::size_t r = 0; r < keep[i].size(); ++r) parts.push_back(m.object(i));
  }
  a.object = direct_sum_rep(parts, m.ambient(), m.ambient_variance());
  a.map = RepMorphism{x, a.object, {}};
  for (std::size_t q = 0; q < x.dims().size(); ++q) {
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t r : keep[i]) blocks.push_back(homs[i].component(r, q));
    a.map.components.push_back(vstack(blocks, x.dim(q)));
  }
  return a;
}

RightApproximation right_approximation(const Rep& x, const ModuleCategory& m, bool pruned) {
  require_ambient(x, m, "right_approximation");
  RightApproximation a;
  std::vector<NatSpace> homs;
  for (std::size_t i = 0; i < m.size(); ++i) homs.emplace_back(m.object(i), x);
  auto keep = select_components(homs, m, false, pruned);
  std::vector<Rep> parts;
  for (std::size_t i = 0; i < m.size(); ++i) {
    a.multiplicities.push_back(keep[i].size());
    for (std::size_t r = 0; r < keep[i].size(); ++r) parts.push_back(m.object(i));
  }
  a.object = direct_sum_rep(parts, m.ambient(), m.ambient_variance());
  a.map = RepMorphism{a.object, x, {}};
  for (std::size_t q = 0; q < x.dims().size(); ++q) {
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t r : keep[i]) blocks.push_back(homs[i].component(r, q));
    a.map.components.push_back(hstack(blocks, x.dim(q)));
  }
  return a;
}

bool factors_through_left(const LeftApproximation& a, const Rep& x, const ModuleCategory& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    NatSpace from_m0(a.object, m.object(i)), from_x(x, m.object(i));
    Matrix pre = precomposition_matrix(a.map, from_m0, from_x);
    for (std::size_t r = 0; r < from_x.dim(); ++r) {
      Vector e(from_x.dim(), 0);
      e[r] = 1;
      if (!solve(pre, e)) return false;
    }
  }
  return true;
}

bool factors_through_right(const RightApproximation& a, const Rep& x, const ModuleCategory& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    NatSpace into_m0(m.object(i), a.object), into_x(m.object(i), x);
    Matrix post = postcomposition_matrix(a.map, into_m0, into_x);
    for (std::size_t r = 0; r < into_x.dim(); ++r) {
      Vector e(into_x.dim(), 0);
      e[r] = 1;
      if (!solve(post, e)) return false;
    }
  }
  return true;
}

ApproximationChain cogen_chain(const Rep& x, const ModuleCategory& m, std::size_t steps) {
  ApproximationChain c;
  c.kind = MembershipKind::cogen;
  c.x = x;
  Rep cur = x;
  RepMorphism to_cur = RepMorphism::identity(x);  // M_{j-1} -> C_{j-1}
  for (std::size_t j = 0; j < steps; ++j) {
    LeftApproximation a = left_approximation(cur, m);
    c.terms.push_back(a.object);
    c.maps.push_back(j == 0 ? a.map : compose(a.map, to_cur));
    if (!a.map.is_mono()) return c;
    ++c.good_steps;
    to_cur = cokernel_projection(a.map);
    cur = to_cur.target;
  }
  c.complete = true;
  return c;
}

ApproximationChain gen_chain(const Rep& x, const ModuleCategory& m, std::size_t steps) {
  ApproximationChain c;
  c.kind = MembershipKind::gen;
  c.x = x;
  Rep cur = x;
  RepMorphism from_cur = RepMorphism::identity(x);  // K_{j-1} -> M_{j-1}
  for (std::size_t j = 0; j < steps; ++j) {
    RightApproximation a = right_approximation(cur, m);
    c.terms.push_back(a.object);
    c.maps.push_back(j == 0 ? a.map : compose(from_cur, a.map));
    if (!a.map.is_epi()) return c;
    ++c.good_steps;
    from_cur = kernel_inclusion(a.map);
    cur = from_cur.source;
  }
  c.complete = true;
  return c;
}

CharacterizationProfile cogen_profile(const Rep& x, const ModuleCategory& m, std::size_t max_degree) {
  require_ambient(x, m, "cogen_profile");
  CharacterizationProfile p;
  p.kind = MembershipKind::cogen;
  UnitData u = unit_alpha_full(x, m);
  p.unit_iso = u.map.is_iso();
  p.resolution = free_resolution(u.psi_x.rep, max_degree + 1);
  for (std::size_t q = 0; q < m.ambient()->size(); ++q) {
    std::vector<std::size_t> d = ext_dims(p.resolution, evaluation_functor(m, q), max_degree + 1);
    p.vanishing.emplace_back(d.begin() + 1, d.end());
  }
  return p;
}

CharacterizationProfile gen_profile(const Rep& x, const ModuleCategory& m, std::size_t max_degree) {
  require_ambient(x, m, "gen_profile");
  CharacterizationProfile p;
  p.kind = MembershipKind::gen;
  CounitData c = counit_varphi_full(x, m);
  p.unit_iso = c.well_defined && c.map.is_iso();
  p.resolution = free_resolution(c.phi_x.rep, max_degree + 1);
  for (std::size_t q = 0; q < m.ambient()->size(); ++q) {
    std::vector<std::size_t> d = tor_dims(p.resolution, evaluation_functor(m, q), max_degree + 1);
    p.vanishing.emplace_back(d.begin() + 1, d.end());
  }
  return p;
}

MembershipVerdict verdict_from_chain(const ApproximationChain& c, std::size_t k) {
  if (c.complete && c.good_steps < k + 1) throw std::invalid_argument("verdict_from_chain: chain too short for k");
  MembershipVerdict v;
  v.kind = c.kind;
  v.method = MembershipMethod::definitional;
  v.k = k;
  v.member = c.good_steps >= k + 1;
  std::size_t keep = v.member ? k + 1 : c.good_steps + 1;
  if (!v.member) v.failed_step = c.good_steps;
  v.terms.assign(c.terms.begin(), c.terms.begin() + keep);
  v.maps.assign(c.maps.begin(), c.maps.begin() + keep);
  return v;
}

MembershipVerdict verdict_from_profile(const CharacterizationProfile& p, std::size_t k) {
  if (k == 0) throw std::invalid_argument("characterized membership needs k >= 1");
  MembershipVerdict v;
  v.kind = p.kind;
  v.method = MembershipMethod::characterized;
  v.k = k;
  v.unit_iso = p.unit_iso;
  v.mod_k_witnessed = p.resolution.length() >= k && check_resolution(p.resolution).empty();
  v.member = v.unit_iso && v.mod_k_witnessed;
  for (const auto& row : p.vanishing) {
    if (row.size() + 1 < k) throw std::invalid_argument("verdict_from_profile: profile computed to too low a degree");
    v.vanishing.emplace_back(row.begin(), row.begin() + (k - 1));
    for (std::size_t d : v.vanishing.back())
      if (d != 0) v.member = false;
  }
  return v;
}

MembershipVerdict cogen_definitional(const Rep& x, const ModuleCategory& m, std::size_t k) {
  return verdict_from_chain(cogen_chain(x, m, k + 1), k);
}

MembershipVerdict gen_definitional(const Rep& x, const ModuleCategory& m, std::size_t k) {
  return verdict_from_chain(gen_chain(x, m, k + 1), k);
}

MembershipVerdict cogen_characterized(const Rep& x, const ModuleCategory& m, std::size_t k) {
  if (k == 0) throw std::invalid_argument("characterized membership needs k >= 1");
  return verdict_from_profile(cogen_profile(x, m, k - 1), k);
}

MembershipVerdict gen_characterized(const Rep& x, const ModuleCategory& m, std::size_t k) {
  if (k == 0) throw std::invalid_argument("characterized membership needs k >= 1");
  return verdict_from_profile(gen_profile(x, m, k - 1), k);
}

std::vector<std::string> recheck_certificate(const MembershipVerdict& v, const Rep& x, const ModuleCategory& m) {
  std::vector<std::string> errs;
  if (v.method != MembershipMethod::definitional || !v.member) {
    errs.push_back("not a definitional membership certificate");
    return errs;
  }
  const std::size_t n = v.k + 1;
  if (v.terms.size() != n || v.maps.size() != n) {
    errs.push_back("certificate must have k+1 terms and maps");
    return errs;
  }
  const bool cogen = v.kind == MembershipKind::cogen;
  // sequence objects: X, M_0, ..., M_k; maps[j] joins X/M_{j-1} and M_j
  for (std::size_t j = 0; j < n; ++j) {
    const RepMorphism& f = v.maps[j];
    const Rep& mj = v.terms[j];
    const Rep& prev = j == 0 ? x : v.terms[j - 1];
    bool shape = cogen ? (f.source == prev && f.target == mj) : (f.source == mj && f.target == prev);
    if (!shape || !f.is_natural()) errs.push_back(step_label("malformed map", j));
  }
  if (!errs.empty()) return errs;

  if (cogen) {
    if (!v.maps[0].is_mono()) errs.push_back(step_label("not injective", 0));
    for (std::size_t j = 1; j < n; ++j)
      if (!exact_at(v.maps[j - 1], v.maps[j])) errs.push_back(step_label("not exact", j));
  } else {
    if (!v.maps[0].is_epi()) errs.push_back(step_label("not surjective", 0));
    for (std::size_t j = 1; j < n; ++j)
      if (!exact_at(v.maps[j], v.maps[j - 1])) errs.push_back(step_label("not exact", j));
  }

  // Hom(M_k, M) -> ... -> Hom(M_0, M) -> Hom(X, M) -> 0, or Hom(M, -) dually:
  // h[j] is the induced map between the Hom spaces of the ends of maps[j]
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Rep& obj = m.object(i);
    std::vector<NatSpace> spaces;  // at X, M_0, ..., M_k
    spaces.push_back(cogen ? NatSpace(x, obj) : NatSpace(obj, x));
    for (const auto& t : v.terms) spaces.push_back(cogen ? NatSpace(t, obj) : NatSpace(obj, t));
    std::vector<Matrix> h;
    for (std::size_t j = 0; j < n; ++j)
      h.push_back(cogen ? precomposition_matrix(v.maps[j], spaces[j + 1], spaces[j])
                        : postcomposition_matrix(v.maps[j], spaces[j + 1], spaces[j]));
    if (rank(h[0]) != spaces[0].dim()) errs.push_back(step_label("Hom sequence not surjective", 0, m.name(i)));
    for (std::size_t j = 1; j < n; ++j)
      if (!exact_at(h[j], h[j - 1])) errs.push_back(step_label("Hom sequence not exact", j, m.name(i)));
  }
  return errs;
}

EvaluationMap evaluation_map(const Rep& i, std::size_t p, const ModuleCategory& m) {
  require_ambient(i, m, "evaluation_map");
  Rep hp = representable(m.ambient(), m.ambient_variance(), p);
  RestrictedHom phi_i = phi_full(i, m);
  RestrictedHom psi_p = psi_full(hp, m);
  NatSpace target(hp, i);
  BilinearPairingSpace t = tensor_over(phi_i.rep, psi_p.rep);
  Matrix lift(target.dim(), t.ambient_dim);
  for (std::size_t j = 0; j < m.size(); ++j) {
    const std::size_t dy = psi_p.rep.dim(j);
    for (std::size_t g = 0; g < phi_i.rep.dim(j); ++g) {
      RepMorphism gm = phi_i.spaces[j].element(g);
      for (std::size_t f = 0; f < dy; ++f)
        set_column(lift, t.offsets[j] + g * dy + f, target.coordinates(compose(gm, psi_p.spaces[j].element(f))));
    }
  }
  EvaluationMap e;
  e.well_defined = (lift * t.relations).is_zero();
  e.map = lift * t.quotient.section;
  e.source_dim = t.dim();
  e.target_dim = target.dim();
  e.iso = e.well_defined && e.source_dim == e.target_dim && rank(e.map) == e.source_dim;
  return e;
}

}  // namespace fbal
