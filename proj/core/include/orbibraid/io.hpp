#pragma once

#include <nlohmann/json.hpp>

#include "orbibraid/braid.hpp"
#include "orbibraid/center.hpp"
#include "orbibraid/free_product.hpp"
#include "orbibraid/orbifold.hpp"
#include "orbibraid/presentation.hpp"
#include "orbibraid/smith.hpp"
#include "orbibraid/trace.hpp"

// JSON schemas for every external surface. Parsers throw InvariantViolation
// naming the broken schema rule.
namespace orbibraid::io {

using nlohmann::json;

/// {"orientable": bool, "genus": int, "boundary": int, "punctures": int,
///  "cone_orders": [int >= 2, ...]}
OrbifoldSpec spec_from_json(const json& j);
json to_json(const OrbifoldSpec& spec);

/// {"ambient": spec, "sub": spec, "complement_components":
///   [{"simply_connected_underlying": bool, "spec": spec}, ...]}
/// A component may repeat its cones under "cone_orders"; they must match.
SuborbifoldEmbedding embedding_from_json(const json& j);
json to_json(const SuborbifoldEmbedding& e);

/// {"generators": ["a", "b"], "relators": [[["a", 1], ["b", -1]], ...]}
Presentation presentation_from_json(const json& j);
json to_json(const Presentation& p);

/// [2, 3, "inf"] or {"factor_orders": [...]}; "inf", "infinity" or null is
/// an infinite cyclic factor.
FreeProductContext context_from_json(const json& j);
json to_json(const FreeProductContext& ctx);

/// [[row], [row], ...]
IntMatrix matrix_from_json(const json& j);
json to_json(const IntMatrix& m);

json to_json(const AbelianInvariants& inv);
json to_json(const SmithResult& r);

/// Array of {"rule", "anchor", "inputs", "conclusion"[, "induction"]}.
json steps_to_json(const ProofTrace& t);
json facts_to_json(const ProofTrace& t);
ProofTrace trace_from_json(const json& facts, const json& steps);

/// {"group": {"base", "n", "pure"}, "status", "trace", "facts", "warnings"}
json to_json(const CenterVerdict& v, const BraidGroupId& group);
json to_json(const InjectivityVerdict& v, const SuborbifoldEmbedding& e, int n, int m, bool pure);
json to_json(const NiceReport& r);

}  // namespace orbibraid::io
