// SPDX-License-Identifier: MIT
//
// Enumeration of root classes (D^2 = -2, D.K = 0) and line classes
// (D^2 = -1, D.K = -1), the line filter against a root configuration, and
// dual graphs of curve configurations.

#ifndef DVDP_CURVE_ENUMERATION_HPP
#define DVDP_CURVE_ENUMERATION_HPP

#include "dvdp/picard_lattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dvdp {

enum class CurveKind { Root, Line };

/// A finite set of classes of one kind, sorted lexicographically.
struct CurveSet {
    IntersectionForm form;
    CurveKind kind = CurveKind::Root;
    std::vector<DivisorClass> classes;

    std::size_t size() const { return classes.size(); }
    bool contains(const DivisorClass& c) const;
};

/// All classes with D^2 = `self` and D.K = `kdot`, found by a bounded
/// coefficient search (Cauchy-Schwarz pruning on the definite part).
std::vector<DivisorClass> classes_with(const IntersectionForm& form, std::int64_t self, std::int64_t kdot);

/// Every root class, by coefficient search.
CurveSet roots(const IntersectionForm& form);

/// Every line class, by coefficient search.
CurveSet line_classes(const IntersectionForm& form);

/// A set of simple roots generating the root system of the lattice.
std::vector<DivisorClass> simple_roots(const IntersectionForm& form);

/// Every root class, by closing the simple roots and their negatives under
/// the simple reflections. Independent of the coefficient search.
CurveSet roots_by_reflection(const IntersectionForm& form);

/// Every line class, as the union of the Weyl orbits of explicit seed lines.
/// Independent of the coefficient search. For F_2 the parity of D.K rules
/// out lines and the result is empty.
CurveSet lines_by_orbit(const IntersectionForm& form);

/// Cached line classes of the standard lattice of the given form's degree.
const std::vector<DivisorClass>& cached_line_classes(const IntersectionForm& form);

/// Cached root classes of the standard lattice of the given form's degree.
const std::vector<DivisorClass>& cached_roots(const IntersectionForm& form);

/// Line classes pairing non-negatively with every class in `config_roots`.
CurveSet lines_on_configuration(const IntersectionForm& form, const std::vector<DivisorClass>& config_roots);

/// Reflection s_a(x) = x + (x.a) a in a root a with a^2 = -2.
DivisorClass reflect(const IntersectionForm& form, const DivisorClass& x, const DivisorClass& root);

struct GraphEdge {
    std::size_t a = 0;
    std::size_t b = 0;
    std::int64_t multiplicity = 0;
};

/// Incidence graph of a curve configuration with multiplicity-weighted edges.
struct DualGraph {
    std::vector<DivisorClass> vertices;
    std::vector<std::int64_t> self_intersection;
    std::vector<GraphEdge> edges;

    std::size_t degree_of(std::size_t v) const;
    std::vector<std::size_t> neighbours(std::size_t v) const;
};

/// Builds the dual graph. Throws ConfigError when two distinct listed
/// classes pair negatively.
DualGraph dual_graph(const std::vector<DivisorClass>& classes, const IntersectionForm& form);

/// True iff the multigraph contains a cycle; an edge of multiplicity at
/// least two counts as a cycle.
bool has_cycle(const DualGraph& g);

/// Renders the graph with a white circle for (-2)-vertices, a black circle
/// for (-1)-vertices and '#' otherwise, one vertex per line followed by its
/// adjacency list.
std::string render_ascii(const DualGraph& g);

}  // namespace dvdp

#endif  // DVDP_CURVE_ENUMERATION_HPP
