// SPDX-License-Identifier: MIT
//
// JSON encoding of surfaces, profiles, curve sets and verdicts. Parse errors
// are InputError values whose path names the offending field, for example
// `roots[2][0]` or `galois.matrices[0][3]`.
//
// Surface document:
//   { "name": str, "degree": 1..8, "roots": [[int]],
//     "galois": { "matrices": [[[int]]] },
//     "point_flags": { "<point id>": bool },
//     "assert_rank_one": bool (optional), "meta": object (optional, preserved) }
// Point ids are the canonical labels assigned by validate_config. Flags are
// only read for k-rational points; how a missing flag is treated is the
// decorating caller's FlagPolicy.
// Matrices act on column coefficient vectors; an empty list is the trivial action.

#ifndef DVDP_JSON_IO_HPP
#define DVDP_JSON_IO_HPP

#include "dvdp/cylinder_oracle.hpp"
#include "dvdp/curve_enumeration.hpp"

#include <json.hpp>

#include <string>

namespace dvdp {

using Json = nlohmann::ordered_json;

struct SurfaceDocument {
    SurfaceOverK surface;
    /// Free-form metadata carried through unchanged.
    Json meta;
};

SurfaceDocument surface_from_json(const Json& j);
Json surface_to_json(const SurfaceDocument& doc);
Json surface_to_json(const SurfaceOverK& surface);

/// Reads and parses a surface file. Syntax errors carry the line and column
/// in the message and the path "$"; field errors keep their field path.
SurfaceDocument load_surface_file(const std::string& path);
void save_surface_file(const std::string& path, const SurfaceDocument& doc);

Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json profile_to_json(const SingularityProfile& profile);
Json curve_set_to_json(const CurveSet& set);

/// Exact rationals are written as strings such as "-5/4".
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& path);

}  // namespace dvdp

#endif  // DVDP_JSON_IO_HPP
