#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fbal/corpus.hpp"
#include "fbal/gencogen.hpp"

namespace fbal {

enum class ReportStatus { verified, counterexample, precondition_failed };
const char* to_string(ReportStatus s);

struct TheoremReport {
  std::string statement;  // extyon, iso_on_ext, faithfully_balanced, cogen1_duality, symmetry, nice_special_case
  std::string instance;
  std::optional<std::size_t> k;
  std::vector<std::string> samples;
  ReportStatus status = ReportStatus::verified;
  std::optional<bool> verdict;  // for classifications: the computed truth value
  nlohmann::json details = nlohmann::json::object();
  nlohmann::json witness;  // failing object(s), null unless a counterexample

  bool ok() const { return status == ReportStatus::verified; }
};

nlohmann::json to_json(const TheoremReport& r);

/// "add{M1,M2}" from the object names.
std::string describe(const ModuleCategory& m);

/// The corpus indecomposables and `random_count` seeded random modules.
std::vector<NamedModule> default_samples(const CorpusInstance& inst, std::uint64_t seed, std::size_t random_count = 20,
                                         std::size_t bound = 3);

/// Hom(Z, C) -> Hom(Φ(Z), Φ(C)) bijective for Z ∈ gen_1, and
/// Hom(C, Z) -> Hom(Ψ(Z), Ψ(C)) bijective for Z ∈ cogen^1, over all
/// sample pairs. Samples failing the membership precondition are listed.
TheoremReport verify_extyon(const ModuleCategory& m, const std::vector<NamedModule>& samples);

/// dim Ext^i(Y, X) = dim Ext^i(Ψ(X), Ψ(Y)) for X ∈ cogen^k and Y with
/// Ext^i(Y, 𝓜) = 0, and dim Ext^i(Y, X) = dim Ext^i(Φ(Y), Φ(X)) for
/// Y ∈ gen_k and Ext^i(𝓜, X) = 0; 0 ≤ i < k, 1 ≤ i < k for the vanishing.
TheoremReport verify_iso_on_ext(const ModuleCategory& m, std::size_t k, const std::vector<NamedModule>& samples);

/// Every h_P in cogen^1(𝓜), decided definitionally and cross-checked
/// against the unit. The verdict is the classification; the status records
/// agreement of the two methods.
TheoremReport faithfully_balanced(const ModuleCategory& m);

/// For faithfully balanced 𝓜 with 𝓜̃ = add{Ψ(h_P)} (modelled by ev_P):
/// (a) Hom(X, Y) ≅ Hom(Ψ(Y), Ψ(X)) on cogen^1 samples;
/// (b) Ψ(X) ∈ cogen^1(𝓜̃) for X ∈ cogen^1(𝓜);
/// (c) Z ∈ cogen^1(𝓜̃) iff α′_Z is invertible, and then Ψ′(Z) ∈ cogen^1(𝓜)
///     with ΨΨ′(Z) ≅ Z; the Z are Ψ of the samples, the ev_P and
///     `random_z` seeded random 𝓜-modules;
/// (d) for k ≥ 2 and X ∈ cogen^1(𝓜): X ∈ cogen^k(𝓜) iff
///     Ext^i(Ψ(X), 𝓜̃) = 0 for 1 ≤ i < k (sampled only).
TheoremReport verify_cogen1_duality(const ModuleCategory& m, const std::vector<NamedModule>& samples, std::size_t k = 1,
                                    std::size_t random_z = 10, std::uint64_t seed = 0);

/// Memberships of the projectives h_P and the injectives E_P, mod_k
/// witnesses, the pairing Φ(E) ⊗ Ψ(h_P) -> Hom(h_P, E) and
/// Tor_i(Φ(E), Ψ(h_P)), computed once up to k_max.
struct SymmetryProfile {
  std::string instance;
  std::size_t k_max = 0;
  std::vector<ApproximationChain> projective_chains;  // cogen chains of h_P
  std::vector<ApproximationChain> injective_chains;   // gen chains of E_P
  std::vector<std::size_t> phi_injective_witness;     // resolution length of Φ(E_P)
  std::vector<std::size_t> psi_projective_witness;    // resolution length of Ψ(h_P)
  std::vector<std::vector<bool>> pairing_iso;         // [P][E]
  std::vector<std::vector<std::vector<std::size_t>>> tor;  // [P][E][i - 1], 1 ≤ i < k_max
};
/// Requires 𝓜 over contravariant modules; throws std::invalid_argument otherwise.
SymmetryProfile symmetry_profile(const ModuleCategory& m, std::size_t k_max);
TheoremReport symmetry_report(const SymmetryProfile& p, std::size_t k);
TheoremReport nice_special_case_report(const SymmetryProfile& p, std::size_t k);

/// Side (1): every h_P ∈ cogen^k(𝓜) and Φ(E) ∈ mod_k; side (2): every
/// E_P ∈ gen_k(𝓜) and Ψ(h_P) ∈ mod_k. Verified iff both sides agree with
/// each other and with the common criterion (pairing iso, Tor vanishing).
TheoremReport verify_symmetry(const ModuleCategory& m, std::size_t k);
/// The Hom-finite form: the same equivalence without the mod_k conditions,
/// which are confirmed automatic.
TheoremReport verify_nice_special_case(const ModuleCategory& m, std::size_t k);

}  // namespace fbal
