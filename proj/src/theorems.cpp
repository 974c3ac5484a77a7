#include "fbal/theorems.hpp"

#include <stdexcept>

#include "fbal/adjunction.hpp"
#include "fbal/io.hpp"

namespace fbal {

using nlohmann::json;

namespace {

void set_column(Matrix& m, std::size_t col, const Vector& v) {
  for (std::size_t r = 0; r < v.size(); ++r) m(r, col) = v[r];
}

struct InducedMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  bool bijective() const { return source_dim == target_dim && rank == source_dim; }
};

// Hom(X, Y) -> Hom(Φ(X), Φ(Y)), u ↦ Φ(u).
InducedMap induced_by_phi(const Rep& x, const Rep& y, const RestrictedHom& px, const RestrictedHom& py) {
  NatSpace hom(x, y), nat(px.rep, py.rep);
  Matrix mat(nat.dim(), hom.dim());
  for (std::size_t c = 0; c < hom.dim(); ++c) set_column(mat, c, nat.coordinates(phi_map(hom.element(c), px, py)));
  return {hom.dim(), nat.dim(), rank(mat)};
}

// Hom(X, Y) -> Hom(Ψ(Y), Ψ(X)), u ↦ Ψ(u).
InducedMap induced_by_psi(const Rep& x, const Rep& y, const RestrictedHom& px, const RestrictedHom& py) {
  NatSpace hom(x, y), nat(py.rep, px.rep);
  Matrix mat(nat.dim(), hom.dim());
  for (std::size_t c = 0; c < hom.dim(); ++c) set_column(mat, c, nat.coordinates(psi_map(hom.element(c), px, py)));
  return {hom.dim(), nat.dim(), rank(mat)};
}

json induced_row(const char* part, const std::string& a, const std::string& b, const InducedMap& f) {
  return {{"part", part}, {"source", a}, {"target", b}, {"hom", f.source_dim}, {"restricted", f.target_dim},
          {"rank", f.rank}, {"bijective", f.bijective()}};
}

json object_witness(const std::string& name, const Rep& r) { return {{"name", name}, {"rep", rep_actions_to_json(r)}}; }

TheoremReport start(const char* statement, const ModuleCategory& m, const std::vector<NamedModule>& samples) {
  TheoremReport r;
  r.statement = statement;
  r.instance = describe(m);
  for (const auto& s : samples) r.samples.push_back(s.name);
  r.witness = json::array();
  return r;
}

void finish(TheoremReport& r) {
  if (r.witness.empty()) r.witness = nullptr;
  else r.status = ReportStatus::counterexample;
}

bool all_zero(const std::vector<std::size_t>& v, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to && i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

}  // namespace

const char* to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::verified: return "verified";
    case ReportStatus::counterexample: return "counterexample";
    case ReportStatus::precondition_failed: return "precondition_failed";
  }
  return "?";
}

json to_json(const TheoremReport& r) {
  json j;
  j["statement"] = r.statement;
  j["instance"] = r.instance;
  j["k"] = r.k ? json(*r.k) : json(nullptr);
  j["samples"] = r.samples;
  j["status"] = to_string(r.status);
  j["verdict"] = r.verdict ? json(*r.verdict) : json(nullptr);
  j["details"] = r.details;
  j["witness"] = r.witness;
  return j;
}

std::string describe(const ModuleCategory& m) {
  std::string s = "add{";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + m.name(i);
  return s + "}";
}

std::vector<NamedModule> default_samples(const CorpusInstance& inst, std::uint64_t seed, std::size_t random_count,
                                         std::size_t bound) {
  std::vector<NamedModule> out = inst.indecomposables;
  for (std::size_t i = 0; i < random_count; ++i)
    out.push_back({"random:" + std::to_string(seed + i), random_module(inst, seed + i, bound)});
  return out;
}

TheoremReport verify_extyon(const ModuleCategory& m, const std::vector<NamedModule>& samples) {
  TheoremReport r = start("extyon", m, samples);
  std::vector<RestrictedHom> phis, psis;
  std::vector<bool> gen1, cogen1;
  json not_gen = json::array(), not_cogen = json::array();
  for (const auto& s : samples) {
    phis.push_back(phi_full(s.rep, m));
    psis.push_back(psi_full(s.rep, m));
    gen1.push_back(gen_definitional(s.rep, m, 1).member);
    cogen1.push_back(cogen_definitional(s.rep, m, 1).member);
    if (!gen1.back()) not_gen.push_back(s.name);
    if (!cogen1.back()) not_cogen.push_back(s.name);
  }
  json rows = json::array();
  std::size_t checked = 0;
  for (std::size_t z = 0; z < samples.size(); ++z)
    for (std::size_t c = 0; c < samples.size(); ++c) {
      if (gen1[z]) {
        InducedMap f = induced_by_phi(samples[z].rep, samples[c].rep, phis[z], phis[c]);
        rows.push_back(induced_row("gen1", samples[z].name, samples[c].name, f));
        ++checked;
        if (!f.bijective())
          r.witness.push_back({{"part", "gen1"}, {"Z", object_witness(samples[z].name, samples[z].rep)},
                               {"C", object_witness(samples[c].name, samples[c].rep)}});
      }
      if (cogen1[z]) {
        InducedMap f = induced_by_psi(samples[c].rep, samples[z].rep, psis[c], psis[z]);
        rows.push_back(induced_row("cogen1", samples[c].name, samples[z].name, f));
        ++checked;
        if (!f.bijective())
          r.witness.push_back({{"part", "cogen1"}, {"Z", object_witness(samples[z].name, samples[z].rep)},
                               {"C", object_witness(samples[c].name, samples[c].rep)}});
      }
    }
  r.details = {{"pairs_checked", checked}, {"precondition_failed", {{"not_gen1", not_gen}, {"not_cogen1", not_cogen}}},
               {"table", rows}};
  finish(r);
  return r;
}

TheoremReport verify_iso_on_ext(const ModuleCategory& m, std::size_t k, const std::vector<NamedModule>& samples) {
  if (k == 0) throw std::invalid_argument("verify_iso_on_ext needs k >= 1");
  TheoremReport r = start("iso_on_ext", m, samples);
  r.k = k;
  const std::size_t n = samples.size();
  std::vector<bool> in_cogen(n), in_gen(n), ker_left(n, true), ker_right(n, true);
  std::vector<FreeResolution> res(n), res_psi(n), res_phi(n);
  std::vector<Rep> psis(n), phis(n);
  std::vector<FreeResolution> res_objects;
  for (std::size_t i = 0; i < m.size(); ++i) res_objects.push_back(free_resolution(m.object(i), k));
  for (std::size_t s = 0; s < n; ++s) {
    const Rep& x = samples[s].rep;
    in_cogen[s] = cogen_definitional(x, m, k).member;
    in_gen[s] = gen_definitional(x, m, k).member;
    res[s] = free_resolution(x, k);
    psis[s] = psi(x, m);
    phis[s] = phi(x, m);
    for (std::size_t i = 0; i < m.size(); ++i) {
      // Ext^i(-, 𝓜) and Ext^i(𝓜, -) for 1 ≤ i < k
      if (!all_zero(ext_dims(res[s], m.object(i), k), 1, k)) ker_left[s] = false;
      if (!all_zero(ext_dims(res_objects[i], x, k), 1, k)) ker_right[s] = false;
    }
    if (in_cogen[s]) res_psi[s] = free_resolution(psis[s], k);
    if (in_gen[s]) res_phi[s] = free_resolution(phis[s], k);
  }
  json rows = json::array();
  std::size_t checked = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // (a): X = samples[a] ∈ cogen^k, Y = samples[b] ∈ Ker Ext(-, 𝓜)
      if (in_cogen[a] && ker_left[b]) {
        auto lhs = ext_dims(res[b], samples[a].rep, k);
        auto rhs = ext_dims(res_psi[a], psis[b], k);
        rows.push_back({{"part", "a"}, {"X", samples[a].name}, {"Y", samples[b].name}, {"ambient", lhs}, {"restricted", rhs}});
        ++checked;
        if (lhs != rhs)
          r.witness.push_back({{"part", "a"}, {"X", object_witness(samples[a].name, samples[a].rep)},
                               {"Y", object_witness(samples[b].name, samples[b].rep)}});
      }
      // (b): Y = samples[a] ∈ gen_k, X = samples[b] ∈ Ker Ext(𝓜, -)
      if (in_gen[a] && ker_right[b]) {
        auto lhs = ext_dims(res[a], samples[b].rep, k);
        auto rhs = ext_dims(res_phi[a], phis[b], k);
        rows.push_back({{"part", "b"}, {"X", samples[b].name}, {"Y", samples[a].name}, {"ambient", lhs}, {"restricted", rhs}});
        ++checked;
        if (lhs != rhs)
          r.witness.push_back({{"part", "b"}, {"X", object_witness(samples[b].name, samples[b].rep)},
                               {"Y", object_witness(samples[a].name, samples[a].rep)}});
      }
    }
  json pre = json::object();
  for (std::size_t s = 0; s < n; ++s)
    pre[samples[s].name] = {{"cogen_k", bool(in_cogen[s])}, {"gen_k", bool(in_gen[s])},
                            {"ext_vanishes_into_M", bool(ker_left[s])}, {"ext_vanishes_from_M", bool(ker_right[s])}};
  r.details = {{"pairs_checked", checked}, {"preconditions", pre}, {"table", rows}};
  finish(r);
  return r;
}

TheoremReport faithfully_balanced(const ModuleCategory& m) {
  TheoremReport r = start("faithfully_balanced", m, {});
  r.k = 1;
  const CategoryPtr& base = m.ambient();
  bool all = true;
  json rows = json::array();
  for (std::size_t p = 0; p < base->size(); ++p) {
    Rep h = representable(base, m.ambient_variance(), p);
    MembershipVerdict d = cogen_definitional(h, m, 1);
    MembershipVerdict c = cogen_characterized(h, m, 1);
    all = all && d.member;
    rows.push_back({{"P", base->name(p)}, {"definitional", d.member}, {"characterized", c.member}});
    if (d.member != c.member) r.witness.push_back(object_witness("h_" + base->name(p), h));
  }
  r.verdict = all;
  r.details = {{"projectives", rows}};
  finish(r);
  return r;
}

TheoremReport verify_cogen1_duality(const ModuleCategory& m, const std::vector<NamedModule>& samples, std::size_t k,
                                    std::size_t random_z, std::uint64_t seed) {
  if (k == 0) throw std::invalid_argument("verify_cogen1_duality needs k >= 1");
  TheoremReport r = start("cogen1_duality", m, samples);
  r.k = k;
  TheoremReport fb = faithfully_balanced(m);
  if (!fb.verdict.value_or(false) || !fb.ok()) {
    r.status = ReportStatus::precondition_failed;
    r.details = {{"faithfully_balanced", to_json(fb)}};
    r.witness = nullptr;
    return r;
  }
  const CategoryPtr& base = m.ambient();
  std::vector<Rep> evs;
  std::vector<std::string> ev_names;
  for (std::size_t p = 0; p < base->size(); ++p) {
    evs.push_back(evaluation_functor(m, p));
    ev_names.push_back("Psi(h_" + base->name(p) + ")");
  }
  ModuleCategory mt = add_category(evs, ev_names);

  std::vector<std::size_t> members;  // samples in cogen^1(𝓜)
  std::vector<RestrictedHom> psis(samples.size());
  for (std::size_t s = 0; s < samples.size(); ++s) {
    psis[s] = psi_full(samples[s].rep, m);
    if (cogen_definitional(samples[s].rep, m, 1).member) members.push_back(s);
  }

  // (a)
  json table_a = json::array();
  for (std::size_t x : members)
    for (std::size_t y : members) {
      InducedMap f = induced_by_psi(samples[x].rep, samples[y].rep, psis[x], psis[y]);
      table_a.push_back(induced_row("a", samples[x].name, samples[y].name, f));
      if (!f.bijective())
        r.witness.push_back({{"part", "a"}, {"X", object_witness(samples[x].name, samples[x].rep)},
                             {"Y", object_witness(samples[y].name, samples[y].rep)}});
    }

  // (b)
  json table_b = json::array();
  for (std::size_t x : members) {
    const Rep& px = psis[x].rep;
    bool def = cogen_definitional(px, mt, 1).member;
    bool unit = alpha_prime(px, m).is_iso();
    table_b.push_back({{"X", samples[x].name}, {"psi_in_cogen1", def}, {"alpha_prime_iso", unit}});
    if (!def || !unit) r.witness.push_back({{"part", "b"}, {"X", object_witness(samples[x].name, samples[x].rep)}});
  }

  // (c)
  std::vector<NamedModule> zs;
  for (std::size_t x = 0; x < samples.size(); ++x) zs.push_back({"Psi(" + samples[x].name + ")", psis[x].rep});
  for (std::size_t p = 0; p < evs.size(); ++p) zs.push_back({ev_names[p], evs[p]});
  for (std::size_t i = 0; i < random_z; ++i)
    zs.push_back({"random_z:" + std::to_string(seed + i), random_module(m.category(), Variance::covariant, seed + i, 3)});
  json table_c = json::array();
  std::size_t z_members = 0;
  for (const auto& z : zs) {
    bool def = cogen_definitional(z.rep, mt, 1).member;
    CounitPrimeData a = alpha_prime_full(z.rep, m);
    bool unit = a.map.is_iso();
    json row = {{"Z", z.name}, {"in_cogen1", def}, {"alpha_prime_iso", unit}};
    bool good = def == unit;
    if (def) {
      ++z_members;
      bool back = cogen_definitional(a.psi_prime_z.rep, m, 1).member;
      bool same_dims = a.psi_psi_prime_z.rep.dims() == z.rep.dims();
      row["psi_prime_in_cogen1"] = back;
      row["psi_psi_prime_dims_match"] = same_dims;
      good = good && back && same_dims;
    }
    table_c.push_back(row);
    if (!good) r.witness.push_back({{"part", "c"}, {"Z", {{"name", z.name}, {"rep", rep_actions_to_json(z.rep)}}}});
  }

  // (d)
  json table_d = json::array();
  if (k >= 2) {
    for (std::size_t x : members) {
      FreeResolution rp = free_resolution(psis[x].rep, k);
      bool vanish = true;
      json dims = json::object();
      for (std::size_t p = 0; p < evs.size(); ++p) {
        auto d = ext_dims(rp, evs[p], k);
        dims[ev_names[p]] = std::vector<std::size_t>(d.begin() + 1, d.end());
        vanish = vanish && all_zero(d, 1, k);
      }
      bool member = cogen_definitional(samples[x].rep, m, k).member;
      table_d.push_back({{"X", samples[x].name}, {"cogen_k", member}, {"ext_kernel", vanish}, {"ext_dims", dims}});
      if (member != vanish) r.witness.push_back({{"part", "d"}, {"X", object_witness(samples[x].name, samples[x].rep)}});
    }
  }
  r.details = {{"tilde_M", describe(mt)},     {"cogen1_samples", members.size()}, {"z_samples", zs.size()},
               {"z_members", z_members},      {"a", table_a},                    {"b", table_b},
               {"c", table_c},                {"d", table_d}};
  finish(r);
  return r;
}

SymmetryProfile symmetry_profile(const ModuleCategory& m, std::size_t k_max) {
  if (m.ambient_variance() != Variance::contravariant)
    throw std::invalid_argument("symmetry_profile: the objects of the add-category must be contravariant modules");
  if (k_max == 0) throw std::invalid_argument("symmetry_profile needs k_max >= 1");
  SymmetryProfile p;
  p.instance = describe(m);
  p.k_max = k_max;
  const CategoryPtr& base = m.ambient();
  const std::size_t n = base->size();
  std::vector<FreeResolution> phi_res;
  std::vector<Rep> psi_proj;
  for (std::size_t q = 0; q < n; ++q) {
    Rep h = yoneda(base, q), e = coyoneda_injective(base, q);
    p.projective_chains.push_back(cogen_chain(h, m, k_max + 1));
    p.injective_chains.push_back(gen_chain(e, m, k_max + 1));
    ModKWitness wi = mod_k_witness(phi(e, m), k_max);
    ModKWitness wp = mod_k_witness(psi(h, m), k_max);
    p.phi_injective_witness.push_back(wi.member ? wi.resolution.length() : 0);
    p.psi_projective_witness.push_back(wp.member ? wp.resolution.length() : 0);
    phi_res.push_back(std::move(wi.resolution));
    psi_proj.push_back(wp.resolution.target);
  }
  for (std::size_t a = 0; a < n; ++a) {
    p.pairing_iso.emplace_back();
    p.tor.emplace_back();
    for (std::size_t e = 0; e < n; ++e) {
      p.pairing_iso[a].push_back(evaluation_map(coyoneda_injective(base, e), a, m).iso);
      auto d = tor_dims(phi_res[e], psi_proj[a], k_max);
      p.tor[a].emplace_back(d.begin() + 1, d.end());
    }
  }
  return p;
}

TheoremReport symmetry_report(const SymmetryProfile& p, std::size_t k) {
  if (k == 0 || k > p.k_max) throw std::invalid_argument("symmetry_report: k outside 1..k_max");
  TheoremReport r;
  r.statement = "symmetry";
  r.instance = p.instance;
  r.k = k;
  const std::size_t n = p.projective_chains.size();
  bool proj_cogen = true, inj_gen = true, phi_modk = true, psi_modk = true, common = true;
  json proj = json::array(), inj = json::array(), pairing = json::array();
  for (std::size_t q = 0; q < n; ++q) {
    bool c = p.projective_chains[q].good_steps >= k + 1;
    bool g = p.injective_chains[q].good_steps >= k + 1;
    proj_cogen = proj_cogen && c;
    inj_gen = inj_gen && g;
    phi_modk = phi_modk && p.phi_injective_witness[q] >= k;
    psi_modk = psi_modk && p.psi_projective_witness[q] >= k;
    proj.push_back({{"P", q}, {"cogen_k", c}, {"psi_mod_k_witness", p.psi_projective_witness[q]}});
    inj.push_back({{"E", q}, {"gen_k", g}, {"phi_mod_k_witness", p.phi_injective_witness[q]}});
    for (std::size_t e = 0; e < n; ++e) {
      std::vector<std::size_t> tor(p.tor[q][e].begin(), p.tor[q][e].begin() + (k - 1));
      bool ok = p.pairing_iso[q][e] && all_zero(tor, 0, tor.size());
      common = common && ok;
      pairing.push_back({{"P", q}, {"E", e}, {"pairing_iso", bool(p.pairing_iso[q][e])}, {"tor", tor}});
    }
  }
  bool side1 = proj_cogen && phi_modk;
  bool side2 = inj_gen && psi_modk;
  r.verdict = side1;
  r.details = {{"side1", side1}, {"side2", side2}, {"common_criterion", common}, {"projectives", proj},
               {"injectives", inj}, {"pairing", pairing}, {"convention", "k+1 terms M_0..M_k"}};
  r.witness = nullptr;
  if (side1 != side2 || side1 != common) {
    r.status = ReportStatus::counterexample;
    r.witness = {{"side1", side1}, {"side2", side2}, {"common_criterion", common}};
  }
  return r;
}

TheoremReport nice_special_case_report(const SymmetryProfile& p, std::size_t k) {
  if (k == 0 || k > p.k_max) throw std::invalid_argument("nice_special_case_report: k outside 1..k_max");
  TheoremReport r;
  r.statement = "nice_special_case";
  r.instance = p.instance;
  r.k = k;
  bool side1 = true, side2 = true, automatic = true;
  for (std::size_t q = 0; q < p.projective_chains.size(); ++q) {
    side1 = side1 && p.projective_chains[q].good_steps >= k + 1;
    side2 = side2 && p.injective_chains[q].good_steps >= k + 1;
    automatic = automatic && p.phi_injective_witness[q] >= k && p.psi_projective_witness[q] >= k;
  }
  r.verdict = side1;
  r.details = {{"side1", side1}, {"side2", side2}, {"mod_k_automatic", automatic}};
  r.witness = nullptr;
  if (side1 != side2 || !automatic) {
    r.status = ReportStatus::counterexample;
    r.witness = {{"side1", side1}, {"side2", side2}, {"mod_k_automatic", automatic}};
  }
  return r;
}

TheoremReport verify_symmetry(const ModuleCategory& m, std::size_t k) {
  if (k == 0) throw std::invalid_argument("verify_symmetry needs k >= 1");
  return symmetry_report(symmetry_profile(m, k), k);
}

TheoremReport verify_nice_special_case(const ModuleCategory& m, std::size_t k) {
  if (k == 0) throw std::invalid_argument("verify_nice_special_case needs k >= 1");
  return nice_special_case_report(symmetry_profile(m, k), k);
}

}  // namespace fbal
