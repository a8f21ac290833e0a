#pragma once

#include <json.hpp>
#include <string>

#include "diamond/extensions.hpp"

namespace diamond {

using nlohmann::json;

/// Scalar encoding: rationals as "p/q" strings (reduced, "0" for zero),
/// Gaussian rationals as {"im": "p/q", "re": "p/q"} objects. The shape is
/// chosen by the enclosing table's field tag.
json encode_scalar(const GaussianRational& v, Scalars field);
GaussianRational decode_scalar(const json& j);

/// Algebra JSON: {"dim": n, "field": ..., "labels": [...],
/// "table": [[i, j, k, scalar], ...]} sorted by (i,j,k); zeros absent.
json encode_algebra(const AlgebraTable& a);
AlgebraTable decode_algebra(const json& j);

/// Rep JSON: {"algebra": [labels], "images": {label: [[scalar,...],...]},
/// "order": N}.
json encode_rep(const MatrixRep& rep);
/// Reattaches the algebra whose labels must match the stored label list.
MatrixRep decode_rep(const json& j, AlgebraTable algebra);

/// Action JSON: {"entries": [[v, e, [scalar,...]], ...], "module_dim": N}
/// sorted by (v,e); zero rows absent. Vectors are dense.
json encode_action(const ModuleAction& act);
ModuleAction decode_action(const json& j, AlgebraTable algebra);

/// Omega JSON (cocycle coefficients): [[i, j, [scalar,...]], ...] sorted by
/// (i,j); zero rows absent.
json encode_omega(const ExtensionProblem& p, const Cocycle& c);
Cocycle decode_omega(const ExtensionProblem& p, const json& j);

/// Cohomology report JSON: {"coboundary_dim": b, "cocycle_dim": z,
/// "quotient_dim": z-b, "representatives": [omega, ...]}.
json encode_cohomology(const ExtensionProblem& p, const CohomologyReport& rep);

/// Canonical serialization: 2-space indent, sorted keys, trailing newline.
/// Encoding then re-decoding then re-encoding is byte-identical.
std::string to_canonical_string(const json& j);

json parse_json(const std::string& text);
json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace diamond
