// SPDX-License-Identifier: MIT
//
// Picard lattices: construction per degree, the pairing and definiteness tests.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dvdp/catalog.hpp"
#include "dvdp/picard_lattice.hpp"

#include <random>

using namespace dvdp;

TEST_CASE("standard lattices") {
    const auto f3 = standard_lattice(3);
    CHECK(f3.rank == 7);
    CHECK(pair(f3, f3.canonical, f3.canonical) == 3);
    const auto f7 = standard_lattice(7);
    CHECK(f7.rank == 3);
    CHECK(f7.canonical == DivisorClass{-3, 1, 1});
    const auto f1 = standard_lattice(1);
    CHECK(f1.rank == 9);
    for (int i = 1; i < 9; ++i)
        for (int j = 1; j < 9; ++j)
            CHECK(pair(f1, basis_vector(f1, i), basis_vector(f1, j)) == (i == j ? -1 : 0));
    for (int d = 1; d <= 7; ++d) {
        const auto f = standard_lattice(d);
        CHECK(square(f, f.canonical) == d);
        CHECK(f.degree == d);
    }
    CHECK_THROWS_AS(standard_lattice(0), InputError);
    CHECK_THROWS_AS(standard_lattice(8), InputError);
    CHECK_THROWS_AS(lattice_for_degree(9), InputError);
}

TEST_CASE("Hirzebruch lattice") {
    const auto h = hirzebruch_lattice();
    const DivisorClass m{1, 0}, f{0, 1};
    CHECK(h.rank == 2);
    CHECK(pair(h, h.canonical, h.canonical) == 8);
    CHECK(pair(h, h.canonical, m) == 0);
    CHECK(pair(h, h.canonical, f) == -2);
    CHECK(square(h, m) == -2);
    CHECK(pair(h, m, f) == 1);
    CHECK(square(h, f) == 0);
    CHECK(lattice_for_degree(8) == h);
}

TEST_CASE("pairing values") {
    const auto f = standard_lattice(3);
    const auto l = basis_vector(f, 0);
    CHECK(pair(f, l, l) == 1);
    const auto mk = anticanonical(f);
    for (int i = 1; i < f.rank; ++i) CHECK(pair(f, mk, basis_vector(f, i)) == 1);
    CHECK_THROWS_AS(pair(f, DivisorClass{1, 0}, l), InputError);
}

TEST_CASE("-K - M for a degree-1 chain is a (-1)-class") {
    const auto profile = catalog_profile(1, "A3");
    const auto& pt = profile.points.front();
    const auto m = combine({1, 1, 1}, profile.point_roots(pt));
    const auto e = subtract(anticanonical(profile.form), m);
    CHECK(square(profile.form, e) == -1);
}

TEST_CASE("negative definiteness") {
    const auto f = standard_lattice(3);
    CHECK(is_negative_definite(f, {basis_vector(f, 1), basis_vector(f, 2)}));
    CHECK_FALSE(is_negative_definite(f, {basis_vector(f, 0)}));
    const auto profile = catalog_profile(1, "E8");
    CHECK(is_negative_definite(profile.form, profile.simple_roots));
}

TEST_CASE("pairing is symmetric and bilinear on random rational divisors") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (int d = 1; d <= 8; ++d) {
        const auto f = lattice_for_degree(d);
        auto rq = [&] {
            QDivisor v;
            for (int i = 0; i < f.rank; ++i) v.push_back(Rational(num(rng), den(rng)));
            return v;
        };
        for (int trial = 0; trial < 50; ++trial) {
            const auto a = rq(), b = rq(), c = rq();
            const Rational s(num(rng), den(rng));
            QDivisor sa_c(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) sa_c[i] = s * a[i] + c[i];
            CHECK(pair(f, a, b) == pair(f, b, a));
            CHECK(pair(f, sa_c, b) == s * pair(f, a, b) + pair(f, c, b));
        }
    }
}

TEST_CASE("every catalog configuration is negative definite") {
    for (const char* type : {"A8", "D8", "E7+A1", "2D4", "4A2", "A5+A2+A1"}) {
        const auto p = catalog_profile(1, type);
        CHECK(is_negative_definite(p.form, p.simple_roots));
    }
    for (const char* type : {"E7", "A7", "D4+3A1"}) {
        const auto p = catalog_profile(2, type);
        CHECK(is_negative_definite(p.form, p.simple_roots));
    }
}
