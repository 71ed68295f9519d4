#pragma once

#include <json.hpp>

#include "frobhopf/comeasure.hpp"
#include "frobhopf/measure.hpp"

namespace frobhopf {

using nlohmann::json;

// field descriptors: {"field":"Q"} | {"field":"Fp","p":7}
//                  | {"field":"ext","base":...,"min_poly":[...]} (constant-first)
json field_to_json(const FieldCtxPtr& ctx);
FieldCtxPtr field_from_json(const json& j);
/// CLI shorthand: "Q", "F7", "Fp:7", or inline JSON.
FieldCtxPtr parse_field_arg(const std::string& arg);

// scalars: Q "3/2", F_p "4 mod 7" (bare residue accepted), extensions as
// constant-first arrays of base scalars
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const FieldCtxPtr& ctx);

// structure-constant format: per op a list of {"in":[...],"out":[{"idx":[...],"c":...}]}
json algebra_to_json(const OmegaAlgebra& alg, bool frobenius_flag);
OmegaAlgebraPtr algebra_from_json(const json& j);

/// AlgebraSpec: field + one of {"group": "C4" | {cayley,unit,inverse}},
/// {"matrix": n}, {"dual_of": spec}, or raw structure constants.
FrobeniusAlgebra frobenius_from_spec(const json& spec, FieldCtxPtr field_override = nullptr);
/// CLI shorthand: "k", "group:C2", "group:C2xC2", "matrix:2", "dual:<spec>",
/// "@file.json", or inline JSON.
FrobeniusAlgebra parse_algebra_arg(const std::string& arg, const FieldCtxPtr& field);

// presentations and Groebner state; bit-exact round-trip
json ncpoly_to_json(const NCPoly& p);
NCPoly ncpoly_from_json(const json& j, const FieldCtxPtr& ctx);
json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);
json gb_to_json(const GBState& gb);

json comeasuring_to_json(const ComeasurePair& pair, const json& source_spec,
                         const json& target_spec);

/// Report envelope: command echo, inputs digest, engine version, timing.
json make_report(const std::string& command, const json& inputs, json results,
                 double elapsed_ms, int degree);

std::string engine_version();
uint64_t fnv1a_digest(const std::string& data);

} // namespace frobhopf
