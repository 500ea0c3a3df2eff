// SPDX-License-Identifier: MIT
//
// Cylinder oracle: example verdicts, clause precedence, invariance under
// relabelling and monotonicity under decoration upgrades over the fixtures.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dvdp/catalog.hpp"
#include "dvdp/cylinder_oracle.hpp"
#include "dvdp/json_io.hpp"

#include <filesystem>
#include <random>
#include <set>

using namespace dvdp;

namespace {

std::string fixture_path(const std::string& name) { return std::string(DVDP_FIXTURES_DIR) + "/" + name + ".json"; }

SurfaceOverK fixture(const std::string& name) { return load_surface_file(fixture_path(name)).surface; }

std::vector<SurfaceDocument> all_fixtures() {
    std::vector<std::string> paths;
    for (const auto& e : std::filesystem::directory_iterator(DVDP_FIXTURES_DIR))
        if (e.path().extension() == ".json") paths.push_back(e.path().string());
    std::sort(paths.begin(), paths.end());
    std::vector<SurfaceDocument> docs;
    for (const auto& p : paths) docs.push_back(load_surface_file(p));
    return docs;
}

Verdict run(const SurfaceDocument& doc) {
    return doc.meta.value("mode", "decide") == "decide_fibration" ? decide_fibration(doc.surface) : decide(doc.surface);
}

// Reflection in a root as an integer matrix acting on column vectors.
IntMatrix reflection_matrix(const IntersectionForm& f, const DivisorClass& root) {
    IntMatrix m(std::size_t(f.rank), IntVector(std::size_t(f.rank)));
    for (int j = 0; j < f.rank; ++j) {
        const auto img = reflect(f, basis_vector(f, j), root);
        for (int i = 0; i < f.rank; ++i) m[std::size_t(i)][std::size_t(j)] = img[std::size_t(i)];
    }
    return m;
}

// Conjugates the surface by h (with inverse hinv), shuffles the roots and
// carries every point flag to the point with the image component set.
SurfaceOverK relabel(const SurfaceOverK& s, const IntMatrix& h, const IntMatrix& hinv, std::mt19937& rng) {
    std::vector<DivisorClass> roots;
    for (const auto& r : s.profile.simple_roots) roots.push_back(dvdp::apply(h, r));
    std::shuffle(roots.begin(), roots.end(), rng);
    SurfaceOverK t;
    t.profile = validate_config(s.profile.form, roots, s.profile.name);
    for (const auto& g : s.action.generators) t.action.generators.push_back(multiply(h, multiply(g, hinv)));
    t.rank_one_assertion = s.rank_one_assertion;
    for (const auto& [id, flag] : s.point_flags) {
        std::set<DivisorClass> image;
        for (const auto& r : s.profile.point_roots(s.profile.point(id))) image.insert(dvdp::apply(h, r));
        for (const auto& pt : t.profile.points) {
            const auto rs = t.profile.point_roots(pt);
            if (std::set<DivisorClass>(rs.begin(), rs.end()) == image) t.point_flags[pt.id] = flag;
        }
    }
    return t;
}

}  // namespace

TEST_CASE("example verdicts") {
    CHECK(decide(fixture("eg1")).answer == Answer::NoCylinder);
    CHECK(decide(fixture("eg2")).answer == Answer::NoCylinder);
    CHECK(decide(fixture("eg3_minus")).answer == Answer::ContainsCylinder);
    CHECK(decide(fixture("eg3_minus")).rule == Rule::LowDegMinusDecoration);
    CHECK(decide(fixture("eg3_plus")).answer == Answer::NoCylinder);
    CHECK(decide_fibration(fixture("eg4_rational")).answer == Answer::ContainsCylinder);
    CHECK(decide_fibration(fixture("eg4_none")).answer == Answer::NoCylinder);
    CHECK(decide_fibration(fixture("eg6_even")).answer == Answer::ContainsCylinder);
    CHECK(decide_fibration(fixture("eg6_odd")).answer == Answer::NoCylinder);
    // eg2 flips under the fibration convention: the A1 point becomes A1^+.
    CHECK(decide_fibration(fixture("eg2")).answer == Answer::ContainsCylinder);
}

TEST_CASE("constant fibrations: no cylinder iff degree 1 with only A1, A2, A3, D4") {
    for (const auto& doc : all_fixtures()) {
        const auto name = doc.surface.name;
        if (name.rfind("eg5_", 0) != 0) continue;
        CAPTURE(name);
        const auto& s = doc.surface;
        bool small_only = s.degree() == 1;
        for (const auto& t : s.profile.singularities())
            small_only = small_only && (t == AdeType{Family::A, 1} || t == AdeType{Family::A, 2} ||
                                        t == AdeType{Family::A, 3} || t == AdeType{Family::D, 4});
        CHECK((decide_fibration(s).answer == Answer::NoCylinder) == small_only);
    }
}

TEST_CASE("clause precedence in low degree") {
    SurfaceOverK s;
    s.profile = catalog_profile(1, "2D4");
    const auto v = decide(s);
    CHECK(v.answer == Answer::NoCylinder);
    CHECK(v.rule == Rule::LowDegSmallSingOnly);

    SurfaceOverK e7;
    e7.profile = catalog_profile(2, "E7");
    CHECK(decide(e7).rule == Rule::LowDegBigSingList);

    SurfaceOverK d5;
    d5.profile = catalog_profile(5, "A4");
    CHECK(decide(d5).rule == Rule::Deg5Plus);
    CHECK(decide(d5).answer == Answer::ContainsCylinder);
}

TEST_CASE("double-prime rule on synthetic decorations") {
    const auto p = catalog_profile(2, "(A5)''");
    const AdeType a5{Family::A, 5};
    const auto plus = decide_from_decorations(p, {{"A5_1", {a5, Sign::Plus, CentralVariant::DoublePrime}}});
    CHECK(plus.rule == Rule::LowDegDoublePrime);
    CHECK(plus.answer == Answer::ContainsCylinder);
    const auto pp = decide_from_decorations(p, {{"A5_1", {a5, Sign::PlusPlus, CentralVariant::DoublePrime}}});
    CHECK(pp.answer == Answer::NoCylinder);
    CHECK(rule_allows(Rule::LowDegDoublePrime, Answer::NoCylinder));
    CHECK(rule_allows(Rule::LowDegDoublePrime, Answer::ContainsCylinder));
    CHECK_FALSE(rule_allows(Rule::LowDegSmallSingOnly, Answer::ContainsCylinder));
}

TEST_CASE("non rank-one surfaces are rejected") {
    SurfaceOverK s;
    s.profile = catalog_profile(5, "A2");
    CHECK_THROWS_AS(decide(s), PreconditionError);
}

TEST_CASE("rule and answer names round-trip") {
    for (const auto r : {Rule::Deg5Plus, Rule::Deg34KRationalNonA1pp, Rule::Deg34None, Rule::LowDegBigSingList,
                         Rule::LowDegDoublePrime, Rule::LowDegSmallSingOnly, Rule::LowDegMinusDecoration,
                         Rule::LowDegNone})
        CHECK(parse_rule(rule_name(r)) == r);
    CHECK(parse_answer(answer_name(Answer::NoCylinder)) == Answer::NoCylinder);
    CHECK_THROWS_AS(parse_rule("Nope"), InputError);
}

TEST_CASE("every fixture reproduces its recorded verdict") {
    int checked = 0;
    for (const auto& doc : all_fixtures()) {
        CAPTURE(doc.surface.name);
        REQUIRE(doc.meta.contains("expected"));
        const auto v = run(doc);
        CHECK(answer_name(v.answer) == doc.meta["expected"]["answer"].get<std::string>());
        if (doc.meta["expected"].contains("rule"))
            CHECK(rule_name(v.rule) == doc.meta["expected"]["rule"].get<std::string>());
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("verdicts are invariant under relabelling by isometries") {
    std::mt19937 rng(20240611);
    for (const auto& doc : all_fixtures()) {
        CAPTURE(doc.surface.name);
        const auto& s = doc.surface;
        const auto& f = s.profile.form;
        const auto rs = roots(f).classes;
        if (rs.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, rs.size() - 1);
        // h = s_a s_b, so h^{-1} = s_b s_a.
        const auto ra = reflection_matrix(f, rs[pick(rng)]);
        const auto rb = reflection_matrix(f, rs[pick(rng)]);
        const auto t = relabel(s, multiply(ra, rb), multiply(rb, ra), rng);
        const bool fib = doc.meta.value("mode", "decide") == "decide_fibration";
        const auto v = fib ? decide_fibration(s) : decide(s);
        const auto w = fib ? decide_fibration(t) : decide(t);
        CHECK(v.answer == w.answer);
        CHECK(v.rule == w.rule);
        CHECK(v.construction_case == w.construction_case);
        const auto da = rho_drop(s), db = rho_drop(t);
        CHECK(da.rho_resolution == db.rho_resolution);
        CHECK(da.total == db.total);
    }
}

TEST_CASE("upgrading one decoration never removes a cylinder") {
    int upgrades = 0;
    for (const auto& doc : all_fixtures()) {
        const auto& s = doc.surface;
        if (s.degree() >= 5) continue;
        CAPTURE(s.name);
        const auto policy = doc.meta.value("mode", "decide") == "decide_fibration" ? FlagPolicy::ForceTrue
                                                                                      : FlagPolicy::DefaultTrue;
        std::vector<DecoratedPoint> pts;
        for (const auto& id : orbits(s).rational_points) pts.push_back({id, decorate_point(s, id, policy)});
        const auto base = decide_from_decorations(s.profile, pts);
        CHECK(base.answer == run(doc).answer);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (pts[i].decoration.sign == Sign::Minus) continue;
            auto up = pts;
            up[i].decoration.sign = up[i].decoration.sign == Sign::PlusPlus ? Sign::Plus : Sign::Minus;
            const auto v = decide_from_decorations(s.profile, up);
            ++upgrades;
            if (base.answer == Answer::ContainsCylinder) CHECK(v.answer == Answer::ContainsCylinder);
        }
    }
    CHECK(upgrades > 20);
}
