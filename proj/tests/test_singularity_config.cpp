// SPDX-License-Identifier: MIT
//
// Du Val configurations: validation, ADE classification, type triplets,
// central vertex variants, construction cases and type-name parsing.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dvdp/catalog.hpp"
#include "dvdp/singularity_config.hpp"

#include <algorithm>
#include <random>

using namespace dvdp;

namespace {

// Checks that the canonical ordering of every point realises its Dynkin diagram.
void check_canonical_order(const SingularityProfile& p) {
    for (const auto& pt : p.points) {
        const auto rs = p.point_roots(pt);
        const auto edges = canonical_edges(pt.type);
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = i + 1; j < rs.size(); ++j) {
                const bool edge = std::find(edges.begin(), edges.end(),
                                            std::pair<int, int>(int(i), int(j))) != edges.end() ||
                                  std::find(edges.begin(), edges.end(),
                                            std::pair<int, int>(int(j), int(i))) != edges.end();
                CHECK(pair(p.form, rs[i], rs[j]) == (edge ? 1 : 0));
            }
    }
}

}  // namespace

TEST_CASE("ADE labels") {
    CHECK(parse_ade("E6") == AdeType{Family::E, 6});
    CHECK(parse_ade("A1").label() == "A1");
    CHECK_THROWS_AS(parse_ade("D3"), InputError);
    CHECK_THROWS_AS(parse_ade("E9"), InputError);
    CHECK_THROWS_AS(parse_ade("Q2"), InputError);
    CHECK(singularity_label({parse_ade("A1"), parse_ade("A3"), parse_ade("A1"), parse_ade("D4")}) == "D4+A3+2A1");
    CHECK(singularity_label({}) == "smooth");
    CHECK(singularity_label(parse_singularity_label("E6+A2")) == "E6+A2");
    CHECK(parse_singularity_label("2A3+A1").size() == 3);
}

TEST_CASE("a cubic with 3A2 is valid") {
    const auto p = catalog_profile(3, "3A2");
    const auto v = validate_config(p.form, p.simple_roots);
    CHECK(v.points.size() == 3);
    for (const auto& pt : v.points) CHECK(pt.type == AdeType{Family::A, 2});
    CHECK(singularity_label(v.singularities()) == "3A2");
}

TEST_CASE("invalid configurations are rejected") {
    const auto f2 = standard_lattice(2);
    const auto e7 = catalog_profile(2, "E7");
    auto eight = e7.simple_roots;
    for (const auto& r : roots(f2).classes)
        if (std::find(eight.begin(), eight.end(), r) == eight.end() &&
            std::find(eight.begin(), eight.end(), scale(-1, r)) == eight.end()) {
            eight.push_back(r);
            break;
        }
    REQUIRE(eight.size() == 8);
    CHECK_THROWS_AS(validate_config(f2, eight), ConfigError);

    const auto f3 = standard_lattice(3);
    const DivisorClass a{0, 1, -1, 0, 0, 0, 0};
    CHECK_THROWS_AS(validate_config(f3, {a, scale(-1, a)}), ConfigError);
    CHECK_THROWS_AS(validate_config(f3, {basis_vector(f3, 0)}), ConfigError);
    CHECK_THROWS_AS(validate_config(f3, {DivisorClass{0, 1, -1}}), InputError);
    // A triangle of roots is an affine diagram, not ADE.
    const DivisorClass b{0, 0, 1, -1, 0, 0, 0};
    const DivisorClass c{1, 0, 0, 1, -1, -1, -1};
    REQUIRE(pair(f3, a, b) == 1);
    if (square(f3, c) == -2 && pair(f3, c, f3.canonical) == 0 && pair(f3, a, c) == 1 && pair(f3, b, c) == 1)
        CHECK_THROWS_AS(validate_config(f3, {a, b, c}), ConfigError);
    CHECK(validate_config(f3, {}).points.empty());
}

TEST_CASE("classification and canonical orderings") {
    for (const auto& [d, name] : std::vector<std::pair<int, std::string>>{
             {3, "A5+A1"}, {4, "D5"}, {3, "E6"}, {2, "E7"}, {1, "E8"}, {1, "D8"}, {1, "2D4"}, {2, "D6+A1"}}) {
        CAPTURE(name);
        const auto p = catalog_profile(d, name);
        check_canonical_order(p);
    }
    const auto d5 = catalog_profile(4, "D5");
    CHECK(d5.points.front().type == AdeType{Family::D, 5});
    const auto e6 = catalog_profile(3, "E6");
    CHECK(e6.points.front().type == AdeType{Family::E, 6});
    const auto a5 = catalog_profile(3, "A5+A1");
    CHECK(a5.point("A5_1").type == AdeType{Family::A, 5});
}

TEST_CASE("classification is invariant under reordering the roots") {
    std::mt19937 rng(11);
    for (const auto& [d, name] : std::vector<std::pair<int, std::string>>{
             {3, "A5+A1"}, {2, "D4+3A1"}, {1, "E6+A2"}, {4, "A3(1)"}, {4, "A3(2)"}}) {
        CAPTURE(name);
        const auto p = catalog_profile(d, name);
        const auto t = surface_type(p);
        for (int trial = 0; trial < 5; ++trial) {
            auto rs = p.simple_roots;
            std::shuffle(rs.begin(), rs.end(), rng);
            const auto q = validate_config(p.form, rs);
            const auto u = surface_type(q);
            CHECK(u.name() == t.name());
            CHECK(u.num_lines == t.num_lines);
            check_canonical_order(q);
        }
    }
}

TEST_CASE("degree-6 A1 variants are told apart by the line count") {
    const auto f = standard_lattice(6);
    const auto a12 = validate_config(f, {DivisorClass{0, 1, -1, 0}});
    const auto a11 = validate_config(f, {DivisorClass{1, -1, -1, -1}});
    CHECK(surface_type(a11).num_lines == 3);
    CHECK(surface_type(a11).name() == "A1(1)");
    CHECK(surface_type(a12).num_lines == 4);
    CHECK(surface_type(a12).name() == "A1(2)");
    CHECK(line_count_variants(6, "A1") == std::pair<int, int>{3, 4});
    CHECK_FALSE(line_count_variants(6, "A2"));
}

TEST_CASE("central vertex variants") {
    const auto p = catalog_profile(2, "A5+A2");
    CHECK(central_vertex_variant(p, p.point("A5_1")) == CentralVariant::Prime);
    const auto dp = catalog_profile(2, "(A5)''");
    CHECK(central_vertex_variant(dp, dp.point("A5_1")) == CentralVariant::DoublePrime);
    const auto pp = catalog_profile(2, "(A5)'");
    CHECK(central_vertex_variant(pp, pp.point("A5_1")) == CentralVariant::Prime);
    const auto q = catalog_profile(1, "A7+A1");
    CHECK(central_vertex_variant(q, q.point("A7_1")) == CentralVariant::Prime);
    CHECK_THROWS_AS(central_vertex_variant(p, p.point("A2_1")), PreconditionError);
    const auto cubic = catalog_profile(3, "A5+A1");
    CHECK_THROWS_AS(central_vertex_variant(cubic, cubic.point("A5_1")), PreconditionError);
}

TEST_CASE("both A5 variants occur in degree 2") {
    bool prime = false, double_prime = false;
    for (const auto& p : catalog_variants(2, {parse_ade("A5")})) {
        (central_vertex_variant(p, p.point("A5_1")) == CentralVariant::Prime ? prime : double_prime) = true;
    }
    for (const auto& [lines, roots] : line_count_spectrum(standard_lattice(2), {parse_ade("A5")})) {
        const auto p = validate_config(standard_lattice(2), roots);
        (central_vertex_variant(p, p.point("A5_1")) == CentralVariant::Prime ? prime : double_prime) = true;
        CHECK(lines > 0);
    }
    CHECK(prime);
    CHECK(double_prime);
}

TEST_CASE("construction cases") {
    CHECK(construction_case(8, surface_type(catalog_profile(8, "A1"))) == 9);
    CHECK(construction_case(3, surface_type(catalog_profile(3, "E6"))) == 1);
    CHECK(construction_case(4, surface_type(catalog_profile(4, "A3(1)"))) == 10);
    CHECK_FALSE(construction_case(2, surface_type(catalog_profile(2, "E7"))));
}

TEST_CASE("type names") {
    const auto t = parse_type_name(2, "(A3+2A1)''");
    CHECK(t.singularities.size() == 3);
    CHECK(parse_type_name(4, "A3(1)").line_variant == 1);
    // A7 has two embeddings in degree 1, so the prime names the line-count variant.
    CHECK(parse_type_name(1, "(A7)'").line_variant == 2);
    CHECK(parse_type_name(2, "(A3+2A1)'").line_variant == 1);
    CHECK(parse_type_name(2, "(A5)'").line_variant == 1);
    CHECK_THROWS_AS(parse_type_name(2, "(A5"), InputError);
    CHECK_THROWS_AS(parse_type_name(2, "A3(3)"), InputError);
    const auto p = catalog_profile(2, "A5+A2");
    CHECK(matches_type(p, parse_type_name(2, "A5+A2")));
    CHECK_FALSE(matches_type(p, parse_type_name(2, "A5+A1")));
    CHECK_THROWS_AS(catalog_profile(2, "E8"), ConfigError);
}

TEST_CASE("line counts of a few degree-2 types match an explicit line filter") {
    for (const char* name : {"A5+A2", "E7", "A7", "D6+A1", "3A2"}) {
        CAPTURE(name);
        const auto p = catalog_profile(2, name);
        std::size_t count = 0;
        for (const auto& l : line_classes(p.form).classes) {
            bool ok = true;
            for (const auto& r : p.simple_roots) ok = ok && pair(p.form, l, r) >= 0;
            count += ok;
        }
        CHECK(surface_type(p).num_lines == int(count));
    }
}
