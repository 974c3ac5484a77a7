#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fbal/addcat.hpp"
#include "fbal/quiver.hpp"

namespace fbal {

struct NamedModule {
  std::string name;
  Rep rep;
};

/// A bound quiver with named contravariant modules. `indecomposables` is the
/// closed-form list used for subcategory sweeps (empty when unknown).
struct CorpusInstance {
  std::string name;
  BoundQuiver quiver;
  std::vector<NamedModule> indecomposables;
  std::map<std::string, Rep> aliases;
  bool self_injective = false;

  const CategoryPtr& category() const { return quiver.category; }
  bool has_closed_form() const { return !indecomposables.empty(); }

  /// Looks up an indecomposable or alias; "regular" is ⊕ h_P and "dual" is
  /// ⊕ E_P. Throws std::invalid_argument for unknown names.
  Rep module(const std::string& name) const;
  std::vector<std::string> module_names() const;

  std::vector<Rep> projectives() const;  // h_P in object order
  std::vector<Rep> injectives() const;   // E_P in object order
};

/// Sets the aliases "regular" and "dual".
void add_standard_aliases(CorpusInstance& c);

/// k[x]/(x^n); indecomposables M1..Mn with Mm = k[x]/(x^m).
CorpusInstance truncated_polynomial(std::size_t n);

/// A_n with arrows a_i : i -> i+1; indecomposables are the intervals [s,t]
/// with X(j) = k for s ≤ j ≤ t, named "[s,t]" with aliases S_i, P_i, I_i.
CorpusInstance linear_quiver(std::size_t n);

/// n vertices and no arrows (k × ... × k); indecomposables S1..Sn.
CorpusInstance points(std::size_t n);

/// "truncpoly:n", "a_n:n" or "points:n". Throws std::invalid_argument.
CorpusInstance corpus_instance(const std::string& selector);

/// Cokernel of a seeded random morphism between free modules with at most
/// size_bound summands each.
Rep random_module(const CategoryPtr& base, Variance v, std::uint64_t seed, std::size_t size_bound);
Rep random_module(const CorpusInstance& instance, std::uint64_t seed, std::size_t size_bound);

struct BasicSubcategory {
  std::vector<std::size_t> members;  // indices into the indecomposables list
  std::string key;                   // "{name,name,...}"
  ModuleCategory category;
};

/// All nonempty subsets of the indecomposables, in order of their bitmask.
/// Throws std::invalid_argument when the instance has no closed-form list.
std::vector<BasicSubcategory> enumerate_basic_subcategories(const CorpusInstance& instance);

}  // namespace fbal
