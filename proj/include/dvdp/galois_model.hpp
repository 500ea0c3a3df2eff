// SPDX-License-Identifier: MIT
//
// Galois actions modelled as finite groups of lattice isometries together
// with per-point arithmetic flags: orbits, k-rational singular points,
// Picard-rank drops, decorated types and the rank-one obstructions.
//
// Model assumption: rho_k of the resolution is the rank of the sublattice
// fixed by the group, and rho_k(S) = rho_k(resolution) - (number of root
// orbits). Every report produced here carries this assumption.

#ifndef DVDP_GALOIS_MODEL_HPP
#define DVDP_GALOIS_MODEL_HPP

#include "dvdp/singularity_config.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dvdp {

inline constexpr std::size_t kDefaultGroupCap = 1000000;

inline constexpr const char* kRhoModelNote =
    "model assumption: rho_k(S) = rank of the Galois-fixed sublattice minus the number of root orbits";

/// Generators act on column coefficient vectors: D -> g D.
struct GaloisAction {
    std::vector<IntMatrix> generators;
};

struct SurfaceOverK {
    SingularityProfile profile;
    GaloisAction action;
    /// has_k_point flag per k-rational singular point id.
    std::map<std::string, bool> point_flags;
    std::optional<bool> rank_one_assertion;
    std::string name;

    int degree() const { return profile.degree(); }
};

/// Checks every generator (isometry, fixes K, permutes the profile roots and
/// the surface lines) and the finiteness of the generated group. Returns the
/// group order. Throws ActionError.
std::size_t validate_action(const SurfaceOverK& surface, std::size_t cap = kDefaultGroupCap);

/// Checks the generator invariants without the closure computation.
void check_generators(const SingularityProfile& profile, const std::vector<IntMatrix>& generators);

/// All elements of the group generated by `generators`; throws ActionError
/// when the closure exceeds `cap` elements.
std::vector<IntMatrix> group_closure(const std::vector<IntMatrix>& generators, std::size_t rank,
                                     std::size_t cap = kDefaultGroupCap);

/// Rank of the sublattice fixed by every generator.
int fixed_rank(const IntersectionForm& form, const std::vector<IntMatrix>& generators);

/// Image of each root index under a generator, as root indices.
std::vector<int> root_permutation(const SingularityProfile& profile, const IntMatrix& g);

struct OrbitData {
    /// Orbits of root indices, each sorted, ordered by smallest member.
    std::vector<std::vector<int>> root_orbits;
    /// Orbits of singular point ids.
    std::vector<std::vector<std::string>> point_orbits;
    /// Points whose component set is fixed setwise by the group.
    std::vector<std::string> rational_points;
};

OrbitData orbits(const SurfaceOverK& surface);

struct RhoDrop {
    /// Number of root orbits overall.
    int total = 0;
    /// Orbits among the components of each k-rational point.
    std::map<std::string, int> per_point;
    int rho_resolution = 0;
    int rho_surface = 0;
};

RhoDrop rho_drop(const SurfaceOverK& surface);

enum class Sign { Minus, Plus, PlusPlus };

struct Decoration {
    AdeType base;
    Sign sign = Sign::Plus;
    std::optional<CentralVariant> variant;

    std::string label() const;
    friend bool operator==(const Decoration&, const Decoration&) = default;
};

enum class FlagPolicy {
    /// Missing flags default to true and a warning is recorded.
    DefaultTrue,
    /// Missing flags are an input error.
    Strict,
    /// Every flag is treated as true.
    ForceTrue,
};

/// Decorated type of a k-rational point. Warnings about defaulted flags are
/// appended to `warnings` when it is non-null.
Decoration decorate_point(const SurfaceOverK& surface, const std::string& point_id,
                          FlagPolicy policy = FlagPolicy::DefaultTrue, std::vector<std::string>* warnings = nullptr);

struct RankOneReport {
    bool rank_one = false;
    std::vector<std::string> obstructions;
    std::vector<std::string> warnings;
    int rho_resolution = 0;
    int root_orbits = 0;
};

/// Applies the three rank-one obstructions: (i) a Galois-stable union of
/// pairwise disjoint lines avoiding every root, (ii) all roots and lines
/// individually fixed with fewer than 9 - d roots, (iii) the modelled
/// rho_k(S) differs from one. An explicit rank_one_assertion overrides the
/// outcome and records a warning.
RankOneReport rank_one_check(const SurfaceOverK& surface);

/// Every isometry fixing K that permutes the profile roots and the surface
/// lines, i.e. every candidate Galois image. Throws ActionError beyond `cap`.
std::vector<IntMatrix> configuration_automorphisms(const SingularityProfile& profile, std::size_t cap = 200000);

/// Isometry fixing K induced by a permutation of the basis vectors e_i of
/// the blow-up model (`perm[i]` is the image index of e_{i+1}, 0-based).
IntMatrix exceptional_permutation_matrix(const IntersectionForm& form, const std::vector<int>& perm);

}  // namespace dvdp

#endif  // DVDP_GALOIS_MODEL_HPP
