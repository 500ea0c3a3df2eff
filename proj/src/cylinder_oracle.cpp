// SPDX-License-Identifier: MIT

#include "dvdp/cylinder_oracle.hpp"

#include <algorithm>
#include <array>

namespace dvdp {

namespace {

constexpr std::array<std::pair<Rule, const char*>, 8> kRuleNames = {{
    {Rule::Deg5Plus, "Deg5Plus"},
    {Rule::Deg34KRationalNonA1pp, "Deg34-KRationalNonA1pp"},
    {Rule::Deg34None, "Deg34-None"},
    {Rule::LowDegBigSingList, "LowDeg-BigSingList"},
    {Rule::LowDegDoublePrime, "LowDeg-DoublePrime"},
    {Rule::LowDegSmallSingOnly, "LowDeg-SmallSingOnly"},
    {Rule::LowDegMinusDecoration, "LowDeg-MinusDecoration"},
    {Rule::LowDegNone, "LowDeg-None"},
}};

std::string join_labels(const std::vector<AdeType>& types) {
    std::string out;
    for (const auto& t : types) out += (out.empty() ? "" : ", ") + t.label();
    return out;
}

bool contains(const std::vector<AdeType>& set, const AdeType& t) {
    return std::find(set.begin(), set.end(), t) != set.end();
}

std::optional<int> lookup_case(const SingularityProfile& profile) {
    return construction_case(profile.degree(), surface_type(profile));
}

}  // namespace

std::string answer_name(Answer a) { return a == Answer::ContainsCylinder ? "ContainsCylinder" : "NoCylinder"; }

Answer parse_answer(const std::string& text) {
    if (text == "ContainsCylinder") return Answer::ContainsCylinder;
    if (text == "NoCylinder") return Answer::NoCylinder;
    throw InputError("unknown answer '" + text + "'");
}

std::string rule_name(Rule r) {
    for (const auto& [rule, name] : kRuleNames)
        if (rule == r) return name;
    return {};
}

Rule parse_rule(const std::string& text) {
    for (const auto& [rule, name] : kRuleNames)
        if (text == name) return rule;
    throw InputError("unknown rule '" + text + "'");
}

bool rule_allows(Rule r, Answer a) {
    switch (r) {
        case Rule::Deg5Plus:
        case Rule::Deg34KRationalNonA1pp:
        case Rule::LowDegBigSingList:
        case Rule::LowDegMinusDecoration:
            return a == Answer::ContainsCylinder;
        case Rule::LowDegDoublePrime:
            return true;
        default:
            return a == Answer::NoCylinder;
    }
}

const std::vector<AdeType>& big_singularities(int degree) {
    static const std::vector<AdeType> deg2 = {{Family::A, 6}, {Family::A, 7}, {Family::D, 4}, {Family::D, 5},
                                              {Family::D, 6}, {Family::E, 6}, {Family::E, 7}};
    static const std::vector<AdeType> deg1 = {{Family::A, 8}, {Family::D, 6}, {Family::D, 7},
                                              {Family::D, 8}, {Family::E, 7}, {Family::E, 8}};
    if (degree == 2) return deg2;
    if (degree == 1) return deg1;
    throw PreconditionError("big singularity lists exist for degrees 1 and 2");
}

const std::vector<AdeType>& small_singularities(int degree) {
    static const std::vector<AdeType> deg2 = {{Family::A, 1}};
    static const std::vector<AdeType> deg1 = {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::D, 4}};
    if (degree == 2) return deg2;
    if (degree == 1) return deg1;
    throw PreconditionError("small singularity lists exist for degrees 1 and 2");
}

Verdict decide(const SurfaceOverK& surface, FlagPolicy policy) {
    validate_action(surface);
    const auto rank = rank_one_check(surface);
    if (!rank.rank_one) {
        std::string why;
        for (const auto& o : rank.obstructions) why += (why.empty() ? "" : "; ") + o;
        throw PreconditionError("surface is not of Picard rank one: " + why);
    }

    std::vector<std::string> warnings(rank.warnings);
    std::vector<DecoratedPoint> decorated;
    // Decorations only matter below degree 5.
    if (surface.degree() < 5)
        for (const auto& id : orbits(surface).rational_points) decorated.push_back({id, decorate_point(surface, id, policy, &warnings)});
    Verdict v = decide_from_decorations(surface.profile, decorated);
    std::vector<TraceEntry> head;
    for (const auto& w : warnings) head.push_back({"warning", w});
    v.trace.insert(v.trace.begin(), head.begin(), head.end());
    return v;
}

Verdict decide_from_decorations(const SingularityProfile& profile, const std::vector<DecoratedPoint>& decorated) {
    Verdict v;
    const int d = profile.degree();
    auto finish = [&](Rule rule, Answer answer, const std::string& cite, const std::string& quote) {
        v.rule = rule;
        v.answer = answer;
        v.trace.push_back({cite, quote});
        return v;
    };

    if (d >= 5) {
        v.construction_case = lookup_case(profile);
        return finish(Rule::Deg5Plus, Answer::ContainsCylinder, "degree>=5",
                      "degree " + std::to_string(d) + " >= 5: a cylinder always exists");
    }

    for (const auto& [id, dec] : decorated) v.trace.push_back({"decoration", id + " is k-rational of type " + dec.label()});

    if (d == 3 || d == 4) {
        for (const auto& [id, dec] : decorated) {
            const bool a1pp = dec.base == AdeType{Family::A, 1} && dec.sign == Sign::PlusPlus;
            if (!a1pp) {
                v.construction_case = lookup_case(profile);
                return finish(Rule::Deg34KRationalNonA1pp, Answer::ContainsCylinder, "degree 3-4",
                              "k-rational point " + id + " of type " + dec.label() + " is not A1^++");
            }
        }
        const std::string why = decorated.empty() ? "no k-rational singular point"
                                                  : "every k-rational singular point is of type A1^++";
        return finish(Rule::Deg34None, Answer::NoCylinder, "degree 3-4", why);
    }

    // Degrees 1 and 2.
    const auto& big = big_singularities(d);
    for (const auto& [id, dec] : decorated)
        if (contains(big, dec.base))
            return finish(Rule::LowDegBigSingList, Answer::ContainsCylinder, "degree<=2 clause 1",
                          "k-rational point " + id + " has geometric type " + dec.base.label() + " in {" +
                              join_labels(big) + "}");

    const AdeType central{Family::A, 9 - 2 * d};
    for (const auto& [id, dec] : decorated) {
        if (!(dec.base == central)) continue;
        if (central_vertex_variant(profile, profile.point(id)) != CentralVariant::DoublePrime) continue;
        for (const auto& [other, odec] : decorated)
            if (other != id && odec.sign == Sign::Minus)
                v.trace.push_back({"review", "k-rational point " + other + " of type " + odec.label() +
                                                 " co-occurs with the double-prime point " + id +
                                                 "; the double-prime rule takes precedence"});
        if (dec.sign != Sign::PlusPlus)
            return finish(Rule::LowDegDoublePrime, Answer::ContainsCylinder, "degree<=2 clause 2",
                          "k-rational double-prime point " + id + " is of type " + dec.label() + ", not ++");
        return finish(Rule::LowDegDoublePrime, Answer::NoCylinder, "degree<=2 clause 2",
                      "k-rational double-prime point " + id + " is of type " + dec.label());
    }

    const auto& small = small_singularities(d);
    const auto geometric = profile.singularities();
    if (std::all_of(geometric.begin(), geometric.end(), [&](const AdeType& t) { return contains(small, t); }))
        return finish(Rule::LowDegSmallSingOnly, Answer::NoCylinder, "degree<=2 clause 3",
                      "geometric singularities " + singularity_label(geometric) + " lie in {" + join_labels(small) +
                          "}");

    for (const auto& [id, dec] : decorated)
        if (dec.sign == Sign::Minus)
            return finish(Rule::LowDegMinusDecoration, Answer::ContainsCylinder, "degree<=2 clause 4",
                          "k-rational point " + id + " is of type " + dec.label());
    return finish(Rule::LowDegNone, Answer::NoCylinder, "degree<=2 clause 4",
                  "no k-rational point carries a minus decoration");
}

Verdict decide_fibration(const SurfaceOverK& fiber) {
    Verdict v = decide(fiber, FlagPolicy::ForceTrue);
    v.trace.insert(v.trace.begin(), {"fibration", "base function field is C_1: every has_k_point flag is true"});
    return v;
}

}  // namespace dvdp
