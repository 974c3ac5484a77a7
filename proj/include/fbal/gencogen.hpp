#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "fbal/addcat.hpp"
#include "fbal/homalg.hpp"

namespace fbal {

/// X -> M_0 with M_0 ∈ add(𝓜) such that every map from X into add(𝓜)
/// factors through it. Unpruned, M_0 = ⊕_i M_i^{dim Hom(X, M_i)} with one
/// summand per Hom basis element; pruned, only the basis elements needed to
/// generate every Hom(X, M_j) as a right End-module are kept.
struct LeftApproximation {
  Rep object;
  RepMorphism map;
  std::vector<std::size_t> multiplicities;  // per object of 𝓜
};
LeftApproximation left_approximation(const Rep& x, const ModuleCategory& m, bool pruned = true);

/// M_0 -> X, dually; unpruned M_0 = ⊕_i M_i^{dim Hom(M_i, X)}.
struct RightApproximation {
  Rep object;
  RepMorphism map;
  std::vector<std::size_t> multiplicities;
};
RightApproximation right_approximation(const Rep& x, const ModuleCategory& m, bool pruned = true);

/// True iff every morphism X -> M_i factors through the left approximation
/// (resp. M_i -> X through the right one), checked by solving.
bool factors_through_left(const LeftApproximation& a, const Rep& x, const ModuleCategory& m);
bool factors_through_right(const RightApproximation& a, const Rep& x, const ModuleCategory& m);

enum class MembershipKind { cogen, gen };
enum class MembershipMethod { definitional, characterized };
const char* to_string(MembershipKind k);
const char* to_string(MembershipMethod m);

/// The universal approximation chain of X, built until a step fails or
/// `steps` approximations exist. For cogen: maps[0] = X -> M_0 and
/// maps[j] = M_{j-1} -> M_j; for gen: maps[0] = M_0 -> X and
/// maps[j] = M_j -> M_{j-1}. good_steps counts the leading approximations of
/// the successive cokernels (kernels) that are mono (epi).
struct ApproximationChain {
  MembershipKind kind = MembershipKind::cogen;
  Rep x;
  std::vector<Rep> terms;
  std::vector<RepMorphism> maps;
  std::size_t good_steps = 0;
  bool complete = false;  // every requested step succeeded
};
ApproximationChain cogen_chain(const Rep& x, const ModuleCategory& m, std::size_t steps);
ApproximationChain gen_chain(const Rep& x, const ModuleCategory& m, std::size_t steps);

/// Unit (counit) invertibility and Ext (Tor) dimensions against every
/// ev_P ≅ Ψ(h_P), in degrees 1 .. max_degree.
struct CharacterizationProfile {
  MembershipKind kind = MembershipKind::cogen;
  bool unit_iso = false;
  std::vector<std::vector<std::size_t>> vanishing;  // [P][i - 1]
  FreeResolution resolution;                        // of Ψ(X) or Φ(X): the mod_k witness
};
CharacterizationProfile cogen_profile(const Rep& x, const ModuleCategory& m, std::size_t max_degree);
CharacterizationProfile gen_profile(const Rep& x, const ModuleCategory& m, std::size_t max_degree);

struct MembershipVerdict {
  bool member = false;
  MembershipKind kind = MembershipKind::cogen;
  MembershipMethod method = MembershipMethod::definitional;
  std::size_t k = 0;
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  // definitional certificate: terms M_0..M_k and maps as in ApproximationChain
  std::vector<Rep> terms;
  std::vector<RepMorphism> maps;
  std::size_t failed_step = npos;

  // characterized certificate
  bool unit_iso = false;
  std::vector<std::vector<std::size_t>> vanishing;  // [P][i - 1], 1 ≤ i < k
  bool mod_k_witnessed = false;

  std::string convention = "k+1 terms M_0..M_k";
};

MembershipVerdict verdict_from_chain(const ApproximationChain& c, std::size_t k);
/// Requires k ≥ 1 and a profile computed to degree at least k - 1.
MembershipVerdict verdict_from_profile(const CharacterizationProfile& p, std::size_t k);

MembershipVerdict cogen_definitional(const Rep& x, const ModuleCategory& m, std::size_t k);
MembershipVerdict gen_definitional(const Rep& x, const ModuleCategory& m, std::size_t k);
/// Throws std::invalid_argument for k = 0.
MembershipVerdict cogen_characterized(const Rep& x, const ModuleCategory& m, std::size_t k);
MembershipVerdict gen_characterized(const Rep& x, const ModuleCategory& m, std::size_t k);

/// Re-checks a definitional certificate against the defining conditions:
/// exactness of the chain and exactness of Hom(-, M) (resp. Hom(M, -)) for
/// every object M of 𝓜, both by ranks. Empty iff the certificate holds.
std::vector<std::string> recheck_certificate(const MembershipVerdict& v, const Rep& x, const ModuleCategory& m);

/// Φ(I) ⊗_𝓜 Ψ(h_P) -> Hom(h_P, I), g ⊗ f ↦ g∘f, with Ψ(h_P) and Hom(h_P, I)
/// computed literally.
struct EvaluationMap {
  Matrix map;
  bool well_defined = true;
  bool iso = false;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
};
EvaluationMap evaluation_map(const Rep& i, std::size_t p, const ModuleCategory& m);

}  // namespace fbal
