#include "fbal/corpus.hpp"

#include <random>
#include <stdexcept>

#include "fbal/homalg.hpp"

namespace fbal {

Rep CorpusInstance::module(const std::string& n) const {
  for (const auto& m : indecomposables)
    if (m.name == n) return m.rep;
  auto it = aliases.find(n);
  if (it != aliases.end()) return it->second;
  throw std::invalid_argument("instance " + name + " has no module named '" + n + "'");
}

std::vector<std::string> CorpusInstance::module_names() const {
  std::vector<std::string> out;
  for (const auto& m : indecomposables) out.push_back(m.name);
  for (const auto& [k, v] : aliases) out.push_back(k);
  return out;
}

std::vector<Rep> CorpusInstance::projectives() const {
  std::vector<Rep> out;
  for (std::size_t p = 0; p < category()->size(); ++p) out.push_back(yoneda(category(), p));
  return out;
}

std::vector<Rep> CorpusInstance::injectives() const {
  std::vector<Rep> out;
  for (std::size_t p = 0; p < category()->size(); ++p) out.push_back(coyoneda_injective(category(), p));
  return out;
}

void add_standard_aliases(CorpusInstance& c) {
  c.aliases["regular"] = direct_sum_rep(c.projectives(), c.category(), Variance::contravariant);
  c.aliases["dual"] = direct_sum_rep(c.injectives(), c.category(), Variance::contravariant);
}

CorpusInstance truncated_polynomial(std::size_t n) {
  if (n == 0) throw std::invalid_argument("truncated_polynomial: n must be at least 1");
  QuiverSpec spec;
  spec.vertices = {"v"};
  if (n == 1) {
    spec.length_bound = 1;
  } else {
    spec.arrows = {{"x", 0, 0}};
    spec.relations.push_back(Relation{{RelationTerm{1, std::vector<std::string>(n, "x")}}});
    spec.length_bound = n;
  }
  CorpusInstance c;
  c.name = "truncpoly:" + std::to_string(n);
  c.quiver = build_bound_quiver_category(spec);
  c.self_injective = true;
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Matrix> arrows;
    if (n > 1) {
      Matrix shift(m, m);
      for (std::size_t i = 0; i + 1 < m; ++i) shift(i + 1, i) = 1;
      arrows.push_back(shift);
    }
    c.indecomposables.push_back({"M" + std::to_string(m), rep_from_arrows(c.quiver, Variance::contravariant, {m}, arrows)});
  }
  c.aliases["simple"] = c.indecomposables.front().rep;
  add_standard_aliases(c);
  return c;
}

CorpusInstance linear_quiver(std::size_t n) {
  if (n == 0) throw std::invalid_argument("linear_quiver: n must be at least 1");
  QuiverSpec spec;
  for (std::size_t i = 1; i <= n; ++i) spec.vertices.push_back(std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) spec.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
  spec.length_bound = n;
  CorpusInstance c;
  c.name = "a_n:" + std::to_string(n);
  c.quiver = build_bound_quiver_category(spec);
  c.self_injective = n == 1;
  for (std::size_t s = 1; s <= n; ++s)
    for (std::size_t t = s; t <= n; ++t) {
      std::vector<std::size_t> dims(n, 0);
      for (std::size_t j = s; j <= t; ++j) dims[j - 1] = 1;
      std::vector<Matrix> arrows;
      // a_j : j -> j+1 acts X(j+1) -> X(j)
      for (std::size_t j = 1; j < n; ++j) {
        Matrix a(dims[j - 1], dims[j]);
        if (dims[j - 1] && dims[j]) a(0, 0) = 1;
        arrows.push_back(a);
      }
      std::string name = "[" + std::to_string(s) + "," + std::to_string(t) + "]";
      Rep r = rep_from_arrows(c.quiver, Variance::contravariant, dims, arrows);
      c.indecomposables.push_back({name, r});
      if (s == t) c.aliases["S" + std::to_string(s)] = r;
      if (s == 1) c.aliases["P" + std::to_string(t)] = r;
      if (t == n) c.aliases["I" + std::to_string(s)] = r;
    }
  add_standard_aliases(c);
  return c;
}

CorpusInstance points(std::size_t n) {
  if (n == 0) throw std::invalid_argument("points: n must be at least 1");
  QuiverSpec spec;
  for (std::size_t i = 1; i <= n; ++i) spec.vertices.push_back(std::to_string(i));
  spec.length_bound = 1;
  CorpusInstance c;
  c.name = "points:" + std::to_string(n);
  c.quiver = build_bound_quiver_category(spec);
  c.self_injective = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> dims(n, 0);
    dims[i] = 1;
    c.indecomposables.push_back({"S" + std::to_string(i + 1), rep_from_arrows(c.quiver, Variance::contravariant, dims, {})});
  }
  add_standard_aliases(c);
  return c;
}

CorpusInstance corpus_instance(const std::string& selector) {
  auto colon = selector.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("corpus selector '" + selector + "' must look like family:n");
  std::string family = selector.substr(0, colon);
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(selector.substr(colon + 1), &used);
    if (used != selector.size() - colon - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("corpus selector '" + selector + "' has a malformed size");
  }
  if (n == 0 || n > 8) throw std::invalid_argument("corpus selector '" + selector + "': size must be between 1 and 8");
  if (family == "truncpoly") return truncated_polynomial(n);
  if (family == "a_n") return linear_quiver(n);
  if (family == "points") return points(n);
  throw std::invalid_argument("unknown corpus family '" + family + "' (expected truncpoly, a_n or points)");
}

Rep random_module(const CategoryPtr& base, Variance v, std::uint64_t seed, std::size_t size_bound) {
  if (size_bound == 0) throw std::invalid_argument("random_module: size_bound must be at least 1");
  const FinCategory& c = *base;
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  std::vector<std::size_t> top, rel;
  std::size_t ntop = pick(1, size_bound), nrel = pick(0, size_bound);
  for (std::size_t i = 0; i < ntop; ++i) top.push_back(pick(0, c.size() - 1));
  for (std::size_t i = 0; i < nrel; ++i) rel.push_back(pick(0, c.size() - 1));
  FreeModule f0 = free_module(base, v, top);
  FreeModule f1 = free_module(base, v, rel);
  std::vector<Vector> images;
  // Relations avoid the identity direction of each summand over the same
  // object, so they rarely kill a generator outright.
  for (std::size_t a : rel) {
    Vector img(f0.rep.dim(a), 0);
    for (auto& x : img) x = Scalar(pick(0, field::prime() - 1));
    const Vector& id = c.identity(a);
    std::size_t pivot = 0;
    while (pivot < id.size() && id[pivot] == 0) ++pivot;
    for (std::size_t t = 0; t < top.size() && pivot < id.size(); ++t) {
      if (top[t] != a) continue;
      const std::size_t off = f0.offset(t, a);
      const Scalar lambda = field::mul(img[off + pivot], field::inv(id[pivot]));
      for (std::size_t j = 0; j < id.size(); ++j) img[off + j] = field::sub(img[off + j], field::mul(lambda, id[j]));
    }
    images.push_back(std::move(img));
  }
  return cokernel_projection(map_from_free(f1, f0.rep, images)).target;
}

Rep random_module(const CorpusInstance& instance, std::uint64_t seed, std::size_t size_bound) {
  return random_module(instance.category(), Variance::contravariant, seed, size_bound);
}

std::vector<BasicSubcategory> enumerate_basic_subcategories(const CorpusInstance& instance) {
  if (!instance.has_closed_form())
    throw std::invalid_argument("instance " + instance.name + " has no closed-form list of indecomposables");
  const std::size_t n = instance.indecomposables.size();
  if (n > 20) throw std::invalid_argument("too many indecomposables to enumerate subsets");
  std::vector<Rep> mods;
  std::vector<std::string> names;
  for (const auto& m : instance.indecomposables) {
    mods.push_back(m.rep);
    names.push_back(m.name);
  }
  ModuleCategory all = add_category(mods, names);
  std::vector<BasicSubcategory> out;
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    BasicSubcategory b;
    b.key = "{";
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        if (!b.members.empty()) b.key += ",";
        b.members.push_back(i);
        b.key += names[i];
      }
    b.key += "}";
    b.category = all.full_subcategory(b.members);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace fbal
