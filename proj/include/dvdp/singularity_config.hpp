// SPDX-License-Identifier: MIT
//
// Du Val configurations: validation of a set of effective roots, ADE
// classification with canonical component orderings, type triplets and the
// central-vertex variants of long chains.
//
// Canonical orderings (1-based names M_1..M_n, stored 0-based):
//   A_n : the chain M_1 - M_2 - ... - M_n.
//   D_n : M_1 and M_2 are the short arms attached to M_3, then M_3 - M_4 - ... - M_n.
//   E_6 : arms M_1 - M_3 - M_5 and M_2 - M_4 - M_5, tail M_6 attached to M_5.
//   E_7, E_8 : M_1 - M_3 - M_4 - M_5 - ... - M_n with M_2 attached to M_4.

#ifndef DVDP_SINGULARITY_CONFIG_HPP
#define DVDP_SINGULARITY_CONFIG_HPP

#include "dvdp/curve_enumeration.hpp"
#include "dvdp/picard_lattice.hpp"

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dvdp {

enum class Family { A, D, E };

struct AdeType {
    Family family = Family::A;
    int n = 1;

    friend bool operator==(const AdeType&, const AdeType&) = default;
    std::string label() const;
};

/// Display order: E before D before A, larger rank first.
bool display_less(const AdeType& a, const AdeType& b);

/// Parses "A5", "D4", "E6".
AdeType parse_ade(const std::string& text);

/// Sorts into display order and renders as e.g. "2A3+A1"; empty gives "smooth".
std::string singularity_label(std::vector<AdeType> types);

/// Inverse of singularity_label.
std::vector<AdeType> parse_singularity_label(const std::string& text);

/// Edges of the canonical Dynkin diagram, 0-based.
std::vector<std::pair<int, int>> canonical_edges(const AdeType& t);

struct SingularPointData {
    AdeType type;
    /// Root indices into the profile, in canonical order M_1..M_n.
    std::vector<int> ordered_components;
    /// Canonical label such as "A5_1" or "A1_2".
    std::string id;
};

struct SingularityProfile {
    IntersectionForm form;
    std::vector<DivisorClass> simple_roots;
    /// Connected components as sorted root-index sets, parallel to `points`.
    std::vector<std::vector<int>> components;
    std::vector<SingularPointData> points;
    std::string name;

    int degree() const { return form.degree; }
    std::vector<AdeType> singularities() const;
    const SingularPointData& point(const std::string& id) const;
    /// Root classes of a point in canonical order.
    std::vector<DivisorClass> point_roots(const SingularPointData& p) const;
};

/// Validates a root configuration. Throws ConfigError for a non-root class,
/// a pairing outside {0, 1}, a non-ADE component or more than 9 - d roots,
/// and InputError for coefficient vectors of the wrong length.
SingularityProfile validate_config(const IntersectionForm& form, const std::vector<DivisorClass>& roots,
                                   const std::string& name = {});

/// Canonical classification of one component of a validated profile.
SingularPointData classify_component(const SingularityProfile& profile, std::size_t component);

/// Lines of the surface: line classes meeting every profile root non-negatively.
CurveSet lines_on_surface(const SingularityProfile& profile);

struct TypeTriplet {
    int degree = 0;
    std::vector<AdeType> singularities;
    int num_lines = 0;

    std::string singularity_label() const;
    /// 1 or 2 when the singularity list has two embeddings told apart by the
    /// line count (the variant with fewer lines is 1).
    std::optional<int> variant() const;
    /// Label with the variant suffix, for example "A3(1)" or "A5+A2".
    std::string name() const;
};

TypeTriplet surface_type(const SingularityProfile& profile);

/// Known pairs (fewer, more) of line counts for singularity lists with two
/// embeddings in a given degree.
std::optional<std::pair<int, int>> line_count_variants(int degree, const std::string& singularity_label);

enum class CentralVariant { Prime, DoublePrime };

/// Prime iff some line of the surface meets the central root of the
/// A_{9-2d} chain. Defined for degrees 1 and 2 only.
CentralVariant central_vertex_variant(const SingularityProfile& profile, const SingularPointData& point);

/// Construction case label (1..10) for a degree >= 3 type listed among the
/// cylinder-bearing types, or empty.
std::optional<int> construction_case(int degree, const TypeTriplet& type);

/// Enumerates root tuples realising the given list of ADE types in the
/// standard lattice. Each callback receives the roots component by
/// component, each in canonical order; returning false stops the search.
/// With `up_to_weyl` the first root is pinned, which is exhaustive up to the
/// Weyl group when it acts transitively on roots (degrees 1..5 and 8). In
/// degrees 1..3 the second root of a connected first component is pinned
/// too, since the stabiliser of a root (W(E_7), W(D_6), W(A_5)) acts
/// transitively on the roots meeting it.
void for_each_embedding(const IntersectionForm& form, std::vector<AdeType> types, bool up_to_weyl,
                        const std::function<bool(const std::vector<DivisorClass>&)>& visit);

/// Distinct line counts over all embeddings of a singularity list, each with
/// one witness configuration.
std::vector<std::pair<int, std::vector<DivisorClass>>> line_count_spectrum(const IntersectionForm& form,
                                                                           const std::vector<AdeType>& types);

}  // namespace dvdp

#endif  // DVDP_SINGULARITY_CONFIG_HPP
