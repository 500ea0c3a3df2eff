// SPDX-License-Identifier: MIT
//
// Named surface types: parsing of type names with line-count or central
// vertex variants, and a representative root configuration for each name.

#ifndef DVDP_CATALOG_HPP
#define DVDP_CATALOG_HPP

#include "dvdp/singularity_config.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dvdp {

struct TypeName {
    int degree = 0;
    std::vector<AdeType> singularities;
    /// Line-count variant "X(1)" / "X(2)".
    std::optional<int> line_variant;
    /// Central vertex variant "(X)'" / "(X)''" (degrees 1 and 2).
    std::optional<CentralVariant> central;
};

/// Parses "2A3+A1", "A3(1)", "(A5)'" or "(A3+2A1)''". For singularity lists
/// with two embeddings, "(X)'" and "(X)''" name the line-count variants
/// (degree 2: ' is (1); degree 1: ' is (2)); otherwise they name the
/// central vertex variant of the A_{9-2d} point. Throws InputError.
TypeName parse_type_name(int degree, const std::string& text);

/// Whether a validated profile has the named type.
bool matches_type(const SingularityProfile& profile, const TypeName& name);

/// A representative configuration of the named type, the first one found by
/// the embedding search that matches. Throws ConfigError when none exists.
SingularityProfile catalog_profile(int degree, const std::string& name);

/// All pairwise inequivalent-by-line-count configurations of a singularity
/// list, as validated profiles.
std::vector<SingularityProfile> catalog_variants(int degree, const std::vector<AdeType>& types);

}  // namespace dvdp

#endif  // DVDP_CATALOG_HPP
