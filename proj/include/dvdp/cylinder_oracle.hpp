// SPDX-License-Identifier: MIT
//
// Cylinder existence for Du Val del Pezzo surfaces of Picard rank one over
// a field of characteristic zero, decided from the degree, the geometric
// singularity profile and the decorated types of the k-rational points.

#ifndef DVDP_CYLINDER_ORACLE_HPP
#define DVDP_CYLINDER_ORACLE_HPP

#include "dvdp/galois_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dvdp {

enum class Answer { ContainsCylinder, NoCylinder };

enum class Rule {
    Deg5Plus,
    Deg34KRationalNonA1pp,
    Deg34None,
    LowDegBigSingList,
    LowDegDoublePrime,
    LowDegSmallSingOnly,
    LowDegMinusDecoration,
    LowDegNone,
};

std::string answer_name(Answer a);
Answer parse_answer(const std::string& text);
/// Names such as "Deg34-KRationalNonA1pp" and "LowDeg-MinusDecoration".
std::string rule_name(Rule r);
Rule parse_rule(const std::string& text);
/// Whether a rule can produce the answer (only the double-prime rule yields both).
bool rule_allows(Rule r, Answer a);

struct TraceEntry {
    std::string cite;
    std::string quote;
    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct Verdict {
    Answer answer = Answer::NoCylinder;
    Rule rule = Rule::LowDegNone;
    std::vector<TraceEntry> trace;
    std::optional<int> construction_case;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Geometric types that decide degree 2 (resp. 1) surfaces with a k-rational point of that type.
const std::vector<AdeType>& big_singularities(int degree);
/// Geometric types whose exclusive presence rules cylinders out in degree 2 (resp. 1).
const std::vector<AdeType>& small_singularities(int degree);

/// Decides cylinder existence. Validates the action and the rank-one
/// condition first, throwing ActionError or PreconditionError. Rules are
/// applied with strict first-match precedence.
Verdict decide(const SurfaceOverK& surface, FlagPolicy policy = FlagPolicy::DefaultTrue);

struct DecoratedPoint {
    std::string id;
    Decoration decoration;
};

/// The clause logic of `decide` applied to given decorations of the
/// k-rational points, without the action and rank-one checks.
Verdict decide_from_decorations(const SingularityProfile& profile, const std::vector<DecoratedPoint>& points);

/// `decide` for the generic fiber of a del Pezzo fibration over a curve: the
/// function field of the base is C_1, so every exceptional curve defined
/// over k has a k-point and every has_k_point flag is taken as true.
Verdict decide_fibration(const SurfaceOverK& fiber);

}  // namespace dvdp

#endif  // DVDP_CYLINDER_ORACLE_HPP
