// SPDX-License-Identifier: MIT
//
// Galois actions: validation, orbits, Picard-rank drops, decorations and the
// rank-one obstructions.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dvdp/catalog.hpp"
#include "dvdp/galois_model.hpp"
#include "dvdp/json_io.hpp"

#include <set>

using namespace dvdp;

namespace {

SurfaceOverK fixture(const std::string& name) {
    return load_surface_file(std::string(DVDP_FIXTURES_DIR) + "/" + name + ".json").surface;
}

SurfaceOverK trivial(int d, const std::string& type, std::map<std::string, bool> flags = {}) {
    SurfaceOverK s;
    s.profile = catalog_profile(d, type);
    s.point_flags = std::move(flags);
    return s;
}

// Finds an automorphism of the configuration whose root permutation, restricted
// to the components of `point`, equals `wanted` (canonical positions).
std::optional<IntMatrix> find_automorphism(const SingularityProfile& p, const std::string& point,
                                           const std::vector<int>& wanted) {
    const auto& comps = p.point(point).ordered_components;
    for (const auto& g : configuration_automorphisms(p)) {
        const auto perm = root_permutation(p, g);
        bool ok = true;
        for (std::size_t j = 0; j < comps.size() && ok; ++j) ok = perm[comps[j]] == comps[wanted[j]];
        if (ok) return g;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("identity action has order one and singleton orbits") {
    const auto s = trivial(3, "A5+A1");
    CHECK(validate_action(s) == 1);
    const auto o = orbits(s);
    CHECK(o.root_orbits.size() == 6);
    CHECK(o.rational_points.size() == 2);
    CHECK(rho_drop(s).per_point.at("A5_1") == 5);
    CHECK(rho_drop(s).rho_resolution == 7);
}

TEST_CASE("the eg2 action is a swap of order two") {
    const auto s = fixture("eg2");
    CHECK(validate_action(s) == 2);
    const auto o = orbits(s);
    std::multiset<std::size_t> sizes;
    for (const auto& orb : o.root_orbits) sizes.insert(orb.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2});
    CHECK(o.rational_points.size() == 1);
    const auto drop = rho_drop(s);
    CHECK(drop.rho_resolution == 3);
    CHECK(drop.total == 2);
    CHECK(drop.rho_surface == 1);
    CHECK(decorate_point(s, o.rational_points.front()).label() == "A1^++");
}

TEST_CASE("eg1: one orbit of three points and no k-rational point") {
    const auto s = fixture("eg1");
    validate_action(s);
    const auto o = orbits(s);
    REQUIRE(o.root_orbits.size() == 1);
    CHECK(o.root_orbits.front().size() == 3);
    CHECK(o.rational_points.empty());
    CHECK(rank_one_check(s).rank_one);
}

TEST_CASE("eg1: no cyclic group of order three reaches rank one") {
    // Any order-3 element that cycles the three A1 roots fixes a sublattice of
    // rank at least 3, so rho(S) = fixed rank - 1 >= 2.
    const auto s = fixture("eg1");
    const auto& p = s.profile;
    const auto id = identity_matrix(std::size_t(p.form.rank));
    int cyclic = 0;
    for (const auto& g : configuration_automorphisms(p)) {
        if (g == id || multiply(g, multiply(g, g)) != id) continue;
        const auto perm = root_permutation(p, g);
        if (perm[0] == 0) continue;
        ++cyclic;
        CHECK(fixed_rank(p.form, {g}) >= 3);
    }
    CHECK(cyclic > 0);
}

TEST_CASE("invalid matrices are rejected") {
    const auto s = fixture("eg2");
    const auto& p = s.profile;
    // A basis transposition that does not preserve the root set.
    std::optional<IntMatrix> bad;
    for (int i = 0; i + 1 < p.form.rank - 1 && !bad; ++i) {
        std::vector<int> perm(std::size_t(p.form.rank - 1));
        for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = int(k);
        std::swap(perm[std::size_t(i)], perm[std::size_t(i + 1)]);
        const auto g = exceptional_permutation_matrix(p.form, perm);
        std::set<DivisorClass> img, orig(p.simple_roots.begin(), p.simple_roots.end());
        for (const auto& r : p.simple_roots) img.insert(dvdp::apply(g, r));
        if (img != orig) bad = g;
    }
    REQUIRE(bad);
    CHECK_THROWS_AS(check_generators(p, {*bad}), ActionError);
    auto t = s;
    t.action.generators = {*bad};
    CHECK_THROWS_AS(validate_action(t), ActionError);
    // Not an isometry.
    auto u = s;
    auto m = identity_matrix(std::size_t(p.form.rank));
    m[0][1] = 1;
    u.action.generators = {m};
    CHECK_THROWS_AS(validate_action(u), ActionError);
    // Wrong shape.
    u.action.generators = {identity_matrix(2)};
    CHECK_THROWS_AS(validate_action(u), ActionError);
}

TEST_CASE("chain flip on A5 drops the point's contribution to three") {
    // In a cubic the flip is not induced by W(E6); in degree 2 it is.
    CHECK_FALSE(find_automorphism(catalog_profile(3, "A5+A1"), "A5_1", {4, 3, 2, 1, 0}));
    const auto p = catalog_profile(2, "(A5)''");
    const auto flip = find_automorphism(p, "A5_1", {4, 3, 2, 1, 0});
    REQUIRE(flip);
    SurfaceOverK s;
    s.profile = p;
    s.action.generators = {*flip};
    CHECK(validate_action(s) == 2);
    CHECK(rho_drop(s).per_point.at("A5_1") == 3);
    CHECK(decorate_point(s, "A5_1").label() == "(A5^+)''");
}

TEST_CASE("decorations") {
    auto a3 = trivial(3, "A3", {{"A3_1", true}});
    CHECK(decorate_point(a3, "A3_1").label() == "A3^-");

    auto a1 = trivial(3, "A1", {{"A1_1", false}});
    CHECK(decorate_point(a1, "A1_1").label() == "A1^++");
    a1.point_flags["A1_1"] = true;
    CHECK(decorate_point(a1, "A1_1").label() == "A1^+");

    // The E6 diagram symmetry is not in W(E6), so it needs degree at most 2.
    CHECK_FALSE(find_automorphism(catalog_profile(3, "E6"), "E6_1", {1, 0, 3, 2, 4, 5}));
    const auto e6p = catalog_profile(2, "E6");
    const auto swap = find_automorphism(e6p, "E6_1", {1, 0, 3, 2, 4, 5});
    REQUIRE(swap);
    SurfaceOverK e6;
    e6.profile = e6p;
    e6.action.generators = {*swap};
    e6.point_flags = {{"E6_1", true}};
    CHECK(decorate_point(e6, "E6_1").label() == "E6^+");
    e6.action.generators.clear();
    CHECK(decorate_point(e6, "E6_1").label() == "E6^-");
}

TEST_CASE("missing flags follow the policy") {
    auto a1 = trivial(3, "A1");
    std::vector<std::string> warnings;
    CHECK(decorate_point(a1, "A1_1", FlagPolicy::DefaultTrue, &warnings).sign == Sign::Plus);
    CHECK(warnings.size() == 1);
    CHECK_THROWS_AS(decorate_point(a1, "A1_1", FlagPolicy::Strict), InputError);
    a1.point_flags["A1_1"] = false;
    CHECK(decorate_point(a1, "A1_1", FlagPolicy::ForceTrue).sign == Sign::Plus);
    CHECK_THROWS_AS(decorate_point(fixture("eg1"), "A1_1"), PreconditionError);
}

TEST_CASE("rank-one obstructions") {
    const auto d5 = rank_one_check(trivial(5, "A2"));
    CHECK_FALSE(d5.rank_one);
    REQUIRE_FALSE(d5.obstructions.empty());
    CHECK(d5.obstructions.front().rfind("(i)", 0) == 0);

    const auto d1 = rank_one_check(trivial(1, "2D4"));
    CHECK(d1.rank_one);
    CHECK(d1.rho_resolution == 9);
    CHECK(d1.root_orbits == 8);

    auto asserted = trivial(5, "A2");
    asserted.rank_one_assertion = true;
    const auto r = rank_one_check(asserted);
    CHECK(r.rank_one);
    CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("degree-4 4A1 with rho 5 does not exist") {
    // Only the identity fixes every root of a 4A1 configuration, and under the
    // identity the fixed rank is 6, so rho(resolution) = 5 would need a group
    // acting non-trivially while fixing all four points: impossible.
    for (const auto& p : catalog_variants(4, {parse_ade("A1"), parse_ade("A1"), parse_ade("A1"), parse_ade("A1")})) {
        const auto id = identity_matrix(std::size_t(p.form.rank));
        for (const auto& g : configuration_automorphisms(p)) {
            const auto perm = root_permutation(p, g);
            bool fixes_all = true;
            for (std::size_t r = 0; r < perm.size(); ++r) fixes_all = fixes_all && perm[r] == int(r);
            if (fixes_all) CHECK(g == id);
        }
        // Every subgroup containing a non-identity element merges two roots,
        // so the number of root orbits drops below four.
        for (const auto& g : configuration_automorphisms(p)) {
            if (g == id) continue;
            SurfaceOverK s;
            s.profile = p;
            s.action.generators = {g};
            const auto drop = rho_drop(s);
            CHECK(drop.total < 4);
        }
    }
}

TEST_CASE("group closure cap") {
    const auto s = fixture("eg1");
    CHECK_THROWS_AS(group_closure(s.action.generators, std::size_t(s.profile.form.rank), 1), ActionError);
}
