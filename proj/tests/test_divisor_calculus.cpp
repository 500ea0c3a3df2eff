// SPDX-License-Identifier: MIT
//
// Divisor computations: prescribed pairings and closed forms, integral
// self-intersection bounds, lines -K - M, the special divisors D and their
// decompositions, Corti systems, pencils, boundary cycles and gamma families.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dvdp/catalog.hpp"
#include "dvdp/divisor_calculus.hpp"
#include "dvdp/reference_tables.hpp"

using namespace dvdp;

namespace {

QVector q(std::initializer_list<Rational> v) { return QVector(v); }

QVector delta(int n, int j) {
    QVector t(std::size_t(n), Rational(0));
    t[std::size_t(j - 1)] = 1;
    return t;
}

std::vector<std::int64_t> meets(const SingularityProfile& p, const std::string& id, const DivisorClass& c) {
    std::vector<std::int64_t> out;
    for (const auto& r : p.point_roots(p.point(id))) out.push_back(pair(p.form, c, r));
    return out;
}

}  // namespace

TEST_CASE("prescribed pairings on D5 and E6") {
    const auto d5 = catalog_profile(1, "D5");
    const auto r = solve_prescribed_pairings(d5, {d5.point("D5_1"), delta(5, 1)});
    CHECK(r.coefficients == q({Rational(5, 4), Rational(3, 4), Rational(3, 2), 1, Rational(1, 2)}));
    CHECK(r.self_pairing == Rational(-5, 4));
    CHECK(pair(d5.form, r.divisor, r.divisor) == r.self_pairing);

    const auto e6 = catalog_profile(2, "E6");
    const auto s = solve_prescribed_pairings(e6, {e6.point("E6_1"), delta(6, 5)});
    CHECK(s.coefficients == q({2, 2, 4, 4, 6, 3}));
    CHECK(s.self_pairing == -6);

    CHECK(solve_cartan(AdeType{Family::D, 5}, delta(5, 1)).coefficients == r.coefficients);
    CHECK_THROWS_AS(solve_prescribed_pairings(d5, {d5.point("D5_1"), delta(4, 1)}), PreconditionError);
}

TEST_CASE("chain closed forms") {
    CHECK(closed_form_chain(7, 4).self_pairing == -2);
    CHECK(closed_form_chain(1, 1).self_pairing == Rational(-1, 2));
    CHECK(closed_form_chain(5, 3).self_pairing == Rational(-3, 2));
    const auto sym = closed_form_chain_symmetric(5, 1);
    CHECK(sym.coefficients == q({1, 1, 1, 1, 1}));
    CHECK(sym.self_pairing == -2);
    CHECK(closed_form_chain_symmetric(7, 3).self_pairing == -6);
    CHECK_THROWS(closed_form_chain(9, 1));
    CHECK_THROWS(closed_form_chain(3, 4));
    for (const auto& e : reference::chain_square_table()) {
        const auto cf = closed_form_chain(e.n, e.j0);
        CHECK(cf.self_pairing == e.value);
        const auto solved = solve_cartan(AdeType{Family::A, e.n}, delta(e.n, e.j0));
        CHECK(solved.coefficients == cf.coefficients);
        CHECK(cartan_self_pairing(AdeType{Family::A, e.n}, cf.coefficients) == e.value);
    }
    CHECK(fork_closed_forms(Family::D).size() == 5);
    CHECK(fork_closed_forms(Family::E).size() == 6);
    for (const auto fam : {Family::D, Family::E})
        for (const auto& cf : fork_closed_forms(fam)) {
            const auto s = solve_cartan(cf.type, cf.targets);
            CHECK(s.coefficients == cf.coefficients);
            CHECK(s.self_pairing == cf.self_pairing);
        }
}

TEST_CASE("integral self-intersection bounds") {
    const AdeType a4{Family::A, 4}, d5{Family::D, 5}, e6{Family::E, 6};
    CHECK(ade1_check(a4, {1, 1, 1, 1}, 2));
    CHECK(completed_square_self_pairing(a4, {1, 1, 1, 1}) == -2);
    CHECK(ade1_check(d5, {2, 2, 3, 2, 1}, 5));
    CHECK(completed_square_self_pairing(d5, {2, 2, 3, 2, 1}) == -4);
    CHECK(ade1_check(e6, {2, 2, 3, 3, 4, 2}, 6));
    CHECK(completed_square_self_pairing(e6, {2, 2, 3, 3, 4, 2}) == -4);
    CHECK(ade1_check(AdeType{Family::A, 5}, {1, 2, 2, 2, 1}, 3));
    CHECK(ade1_check(AdeType{Family::A, 6}, {1, 2, 3, 3, 2, 1}, 4));
    CHECK(ade1_check(a4, {0, -1, 3, 2}, 1));
    CHECK_THROWS_AS(ade1_check(a4, {0, 1, 1, 1}, 2), PreconditionError);
    CHECK_THROWS_AS(ade1_check(AdeType{Family::A, 2}, {1, 2}, 3), PreconditionError);
    CHECK_FALSE(bound_case(AdeType{Family::A, 2}, 5));
    for (const auto& t : {a4, d5, e6}) {
        const auto r = completed_square_sweep(t, -2, 2);
        CHECK(r.checked > 0);
        CHECK_FALSE(r.counterexample);
    }
    const auto b = bound_case_sweep(AdeType{Family::A, 5}, 4, 5);
    CHECK(b.checked > 0);
    CHECK_FALSE(b.counterexample);
}

TEST_CASE("lines -K - M on degree-1 surfaces") {
    const auto a3 = catalog_profile(1, "A3");
    const auto e = anticanonical_line(a3, "A3_1", ForkKind::Chain);
    CHECK(square(a3.form, e) == -1);
    CHECK(pair(a3.form, e, a3.form.canonical) == -1);
    CHECK(meets(a3, "A3_1", e) == std::vector<std::int64_t>{1, 0, 1});

    // The D5 and E6 forks: E meets the point only in M_4 and M_6 respectively.
    const auto d5 = catalog_profile(1, "D5");
    const auto ed = anticanonical_line(d5, "D5_1", ForkKind::ForkD5);
    CHECK(square(d5.form, ed) == -1);
    CHECK(meets(d5, "D5_1", ed) == std::vector<std::int64_t>{0, 0, 0, 1, 0});
    const auto e6 = catalog_profile(1, "E6");
    const auto ee = anticanonical_line(e6, "E6_1", ForkKind::ForkE6);
    CHECK(square(e6.form, ee) == -1);
    CHECK(meets(e6, "E6_1", ee) == std::vector<std::int64_t>{0, 0, 0, 0, 0, 1});

    CHECK_THROWS(anticanonical_line(catalog_profile(2, "A3"), "A3_1", ForkKind::Chain));
    CHECK_THROWS(anticanonical_line(d5, "D5_1", ForkKind::Chain));
}

TEST_CASE("special divisors D") {
    const auto a52 = catalog_profile(2, "A5+A2");
    const auto ra = table_divD(DivDCase::a, a52, {"A5_1", "A2_1"});
    CHECK(square(a52.form, ra.divisor) == -2);
    CHECK(pair(a52.form, ra.divisor, anticanonical(a52.form)) == 2);
    CHECK(ra.pairings == std::vector<std::vector<std::int64_t>>{{1, 0, 0, 0, 1}, {1, 1}});
    CHECK(ra.pairings == divd_expected_pattern(DivDCase::a, {5, 2}));
    const auto da = decompose_special(ra, a52);
    CHECK(da.condition == SpecialCondition::A);
    CHECK(da.parts.size() == 2);
    CHECK(da.meets_each_chain_once);

    for (const auto& p : catalog_variants(2, {parse_ade("A5")})) {
        const auto rb = table_divD(DivDCase::b, p, {"A5_1"});
        CHECK(rb.pairings == std::vector<std::vector<std::int64_t>>{{0, 1, 0, 1, 0}});
    }

    const auto e6a2 = catalog_profile(1, "E6+A2");
    const auto rg = table_divD(DivDCase::g, e6a2, {"E6_1", "A2_1"});
    CHECK(square(e6a2.form, rg.divisor) == -2);

    const auto a71 = catalog_profile(1, "A7+A1");
    const auto rd = table_divD(DivDCase::d, a71, {"A7_1", "A1_1"});
    const auto dd = decompose_special(rd, a71);
    CHECK(dd.condition == SpecialCondition::A);
    CHECK(dd.chain_lengths == std::vector<int>{7, 1});
    CHECK(dd.lengths_admissible);

    CHECK_THROWS_AS(table_divD(DivDCase::a, a52, {"A5_1"}), PreconditionError);
    CHECK_THROWS_AS(table_divD(DivDCase::g, a52, {"A5_1", "A2_1"}), PreconditionError);
    CHECK(case_letter(parse_divd_case('f')) == 'f');
}

TEST_CASE("Condition B on A3+A1 occurs on the variant with fewer lines") {
    const auto variants = catalog_variants(2, {parse_ade("A3"), parse_ade("A1")});
    REQUIRE(variants.size() == 2);
    int fewer = 0;
    if (surface_type(variants[1]).num_lines < surface_type(variants[0]).num_lines) fewer = 1;
    for (std::size_t i = 0; i < variants.size(); ++i) {
        const auto r = table_divD(DivDCase::a, variants[i], {"A3_1", "A1_1"});
        const auto dec = decompose_special(r, variants[i]);
        CHECK((dec.condition == SpecialCondition::B) == (int(i) == fewer));
        if (dec.condition == SpecialCondition::B) {
            CHECK(dec.parts.size() == 1);
            CHECK(dec.lengths_admissible);
        }
    }
}

TEST_CASE("Corti systems") {
    CHECK(corti_evaluate({2, 1, 2, 2}, 0, 1));
    CHECK(corti_evaluate({1, 2, 2, 4}, 1, 1));
    const Rational t(3, 2);
    CHECK(corti_evaluate({1, 2, 2 * t - 2, 2 * t * t - 4 * t + 4}, -t * t + 3 * t - 1, 2 * t - 3));
    CHECK(corti_special(2, 2, 4));
    CHECK_FALSE(corti_special(2, 1, 2));
    CHECK(corti_special(1, 4, 8));
    const auto w = corti_special_witness(2, 2, 4);
    CHECK(w == std::pair<Rational, Rational>{1, 0});
    CHECK(corti_evaluate({2, 2, 2, 4}, w.first, w.second));
    const auto found = corti_search({2, 1, 2, 2}, 4);
    REQUIRE(found);
    CHECK(corti_evaluate({2, 1, 2, 2}, found->first, found->second));
    CHECK_FALSE(corti_search({2, 1, 1, 2}, 8));
}

TEST_CASE("pencil degeneration") {
    for (const auto& [d, g] : std::vector<std::pair<int, int>>{{2, 2}, {1, 4}, {1, 1}, {2, 8}, {1, 9}})
        CHECK(pencil_degeneration(d, g));
    for (const auto& [d, g] : std::vector<std::pair<int, int>>{{2, 4}, {2, 6}, {1, 2}, {1, 6}, {1, 8}})
        CHECK_FALSE(pencil_degeneration(d, g));
    CHECK(pencil_degeneration(2, Rational(1, 2)));
}

TEST_CASE("boundary cycles") {
    const auto a3 = catalog_profile(2, "A3");
    const auto w = boundary_cycle_witness(a3, "A3_1");
    CHECK(w.pairings == std::vector<std::int64_t>{1, 0, 1});
    CHECK(w.is_cycle);
    CHECK(w.cycle.vertices.size() == 4);
    CHECK(has_cycle(w.cycle));
    CHECK(square(a3.form, w.curve) == 0);

    const auto a5 = catalog_profile(1, "A5");
    const auto v = boundary_cycle_witness(a5, "A5_1");
    const auto ms = a5.point_roots(a5.point("A5_1"));
    const auto expect = add(subtract(scale(2, anticanonical(a5.form)), combine({2, 2, 2, 2, 2}, ms)),
                            add(ms[0], ms[4]));
    CHECK(v.curve == expect);
    CHECK(v.cycle_components == std::vector<int>{1, 2, 3});
    CHECK(v.is_cycle);

    const auto d5 = catalog_profile(1, "D5");
    const auto u = boundary_cycle_witness(d5, "D5_1");
    const auto ns = d5.point_roots(d5.point("D5_1"));
    CHECK(u.curve == subtract(scale(2, anticanonical(d5.form)), combine({2, 2, 3, 2, 1}, ns)));
    CHECK(u.is_cycle);

    CHECK_THROWS(boundary_cycle_witness(catalog_profile(3, "A3"), "A3_1"));
}

TEST_CASE("D5+ and E6+ gamma families") {
    CHECK(de_plus_family(FamilyPosition::D5_M5, 2).gamma == 4);
    CHECK(de_plus_family(FamilyPosition::D5_M3M4, 1).gamma == 2);
    const auto e = de_plus_family(FamilyPosition::E6_M5M6, Rational(4, 3));
    CHECK(e.gamma == Rational(8, 3));
    CHECK(e.gamma == e.gamma_gram);
    for (const auto pos : {FamilyPosition::D5_M3M4, FamilyPosition::D5_M5, FamilyPosition::E6_M5M6}) {
        const auto lo = de_plus_family(pos, 1);
        CHECK(lo.gamma == lo.gamma_gram);
        CHECK_THROWS_AS(de_plus_family(pos, lo.t_max + 1), PreconditionError);
        CHECK_THROWS_AS(de_plus_family(pos, lo.t_min - 1), PreconditionError);
    }
}
