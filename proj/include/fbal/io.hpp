#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fbal/corpus.hpp"
#include "fbal/gencogen.hpp"
#include "fbal/quiver.hpp"

namespace fbal {

inline constexpr const char* kQuiverSchema = "fbal.quiver/1";
inline constexpr const char* kRepSchema = "fbal.rep/1";
inline constexpr const char* kActionRepSchema = "fbal.rep-actions/1";

/// Malformed input. `field` is a JSON pointer to the offending value.
class SpecError : public std::runtime_error {
 public:
  SpecError(std::string field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// {"schema": "fbal.quiver/1", "vertices": [...],
///  "arrows": [{"name", "source", "target"}],
///  "relations": [[{"coeff", "path": [arrow, ...]}, ...], ...],
///  "length_bound": L}
QuiverSpec quiver_spec_from_json(const nlohmann::json& j, const std::string& at = "");
nlohmann::json to_json(const QuiverSpec& q);

/// {"schema": "fbal.rep/1", "variance": "contravariant" | "covariant",
///  "dims": [per vertex], "arrows": {"name": [[row], ...]}}. Missing arrows
/// act as zero. Matrices follow rep_from_arrows.
Rep rep_from_json(const BoundQuiver& q, const nlohmann::json& j, const std::string& at = "");
nlohmann::json rep_to_json(const BoundQuiver& q, const Rep& r);

/// Any Rep, by its dims and the action of every Hom basis element; for
/// reports over categories that are not bound quivers.
nlohmann::json rep_actions_to_json(const Rep& r);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const RepMorphism& u);

/// A quiver spec with named modules:
/// {..quiver fields.., "modules": [{"name", ..rep fields..}],
///  "indecomposables": [names]}. Listed indecomposables enable sweeps.
CorpusInstance instance_from_json(const nlohmann::json& j, const std::string& name = "spec");
CorpusInstance load_instance_file(const std::string& path);

nlohmann::json to_json(const MembershipVerdict& v);

}  // namespace fbal
