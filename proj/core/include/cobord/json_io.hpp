#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "cobord/actions.hpp"
#include "cobord/bounds.hpp"
#include "cobord/equivariant.hpp"

namespace cobord::io {

using nlohmann::json;

json to_json(const Partition& alpha);
Partition partition_from_json(const json& j);

/// {"modulus": p | null, "terms": [{"partition": [...], "coeff": "..."}]}.
json to_json(const BPoly& poly);
BPoly bpoly_from_json(const json& j, int truncation);

/// Extended dimension: an integer, or "-inf".
json dim_to_json(const std::optional<int>& d);
std::optional<int> dim_from_json(const json& j);

/// {"flavor": "base" | "adapted", "p", "r", "signs": [...]}; signs are the
/// signs of c_(i)(l_i) when the basis is supplied.
json to_json(const BasisId& id, const GeneratorBasis* basis = nullptr);
json to_json(const GenPoly& g, const GeneratorBasis* basis = nullptr);

/// {"variety", "dim", "truncation", "image"} plus "gen_coords" when given.
json to_json(const CobordismClass& z, const std::optional<VarietyExpr>& variety = std::nullopt,
             const GenPoly* coords = nullptr, const GeneratorBasis* basis = nullptr);
CobordismClass class_from_json(const json& j);

json to_json(const GroupDescriptor& group);
json to_json(const BoundReport& report);
json to_json(const ActionWitness& w);
json to_json(const MPoly& f);

}  // namespace cobord::io
