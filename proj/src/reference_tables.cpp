// SPDX-License-Identifier: MIT

#include "dvdp/reference_tables.hpp"

namespace dvdp::reference {

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

}  // namespace

const std::vector<ChainSquareEntry>& chain_square_table() {
    static const std::vector<ChainSquareEntry> table = {
        {1, 1, q(-1, 2)},
        {2, 1, q(-2, 3)},  {2, 2, q(-2, 3)},
        {3, 1, q(-3, 4)},  {3, 2, q(-1)},     {3, 3, q(-3, 4)},
        {4, 1, q(-4, 5)},  {4, 2, q(-6, 5)},  {4, 3, q(-6, 5)},  {4, 4, q(-4, 5)},
        {5, 1, q(-5, 6)},  {5, 2, q(-4, 3)},  {5, 3, q(-3, 2)},  {5, 4, q(-4, 3)},  {5, 5, q(-5, 6)},
        {6, 1, q(-6, 7)},  {6, 2, q(-10, 7)}, {6, 3, q(-12, 7)}, {6, 4, q(-12, 7)}, {6, 5, q(-10, 7)},
        {6, 6, q(-6, 7)},
        {7, 1, q(-7, 8)},  {7, 2, q(-3, 2)},  {7, 3, q(-15, 8)}, {7, 4, q(-2)},     {7, 5, q(-15, 8)},
        {7, 6, q(-3, 2)},  {7, 7, q(-7, 8)},
        {8, 1, q(-8, 9)},  {8, 2, q(-14, 9)}, {8, 3, q(-2)},     {8, 4, q(-20, 9)}, {8, 5, q(-20, 9)},
        {8, 6, q(-2)},     {8, 7, q(-14, 9)}, {8, 8, q(-8, 9)},
    };
    return table;
}

const std::vector<CortiRow>& corti_rows() {
    static const std::vector<CortiRow> rows = {
        {2, "A1^+", {1}, q(1), q(2), q(2), std::make_pair(q(0), q(1))},
        {2, "A3^+", {1, 2, 1}, q(2), q(2), q(4), std::nullopt},
        {2, "A4^+", {1, 2, 2, 1}, q(2), q(1), q(4), std::nullopt},
        {2, "(A5^+)'", {1, 2, 3, 2, 1}, q(3), q(2), q(6), std::nullopt},
        {1, "A1^+", {1}, q(2), q(2), q(2), std::nullopt},
        {1, "A2^+", {1, 1}, q(2), q(1), q(2), std::nullopt},
        {1, "A3^+", {1, 2, 1}, q(2), q(2), q(4), std::make_pair(q(1), q(1))},
        {1, "A5^+", {1, 2, 3, 2, 1}, q(3), q(2), q(6), std::nullopt},
        {1, "A6^+", {1, 2, 3, 3, 2, 1}, q(3), q(1), q(6), std::nullopt},
        {1, "(A7^+)'", {1, 2, 3, 4, 3, 2, 1}, q(4), q(2), q(8), std::nullopt},
    };
    return rows;
}

const std::vector<GammaPolynomial>& gamma_polynomials() {
    static const std::vector<GammaPolynomial> rows = {
        {"D5+ at M3uM4", q(4), q(-8), q(6), q(1), q(3, 2), q(2), q(3)},
        {"D5+ at M5", q(2), q(-4), q(4), q(1), q(2), q(2), q(4)},
        {"E6+ at M5uM6", q(6), q(-12), q(8), q(1), q(4, 3), q(2), q(8, 3)},
    };
    return rows;
}

const std::vector<CatalogRow>& list_1_1() {
    static const std::vector<CatalogRow> rows = {
        {"list(1-1)", 8, "A1", {2}, 9, {}},        {"list(1-1)", 6, "A2+A1", {4}, 1, {}},
        {"list(1-1)", 6, "A2", {3}, 6, {}},        {"list(1-1)", 6, "A1(1)", {2}, 1, {}},
        {"list(1-1)", 5, "A4", {5}, 1, {}},        {"list(1-1)", 4, "D5", {6}, 1, {}},
        {"list(1-1)", 4, "A3+2A1", {4, 6}, 10, {}}, {"list(1-1)", 4, "D4", {4}, 6, {}},
        {"list(1-1)", 4, "A3+A1", {5}, 2, {}},     {"list(1-1)", 4, "A2+2A1", {3}, 4, {}},
        {"list(1-1)", 4, "4A1", {4, 5}, 8, {}},    {"list(1-1)", 4, "A3(1)", {3, 4}, 10, {}},
        {"list(1-1)", 4, "3A1", {3}, 5, {}},       {"list(1-1)", 4, "A2", {2}, 4, {}},
        {"list(1-1)", 4, "2A1(1)", {3}, 8, {}},    {"list(1-1)", 4, "A1", {2}, 5, {}},
        {"list(1-1)", 3, "E6", {7}, 1, {}},        {"list(1-1)", 3, "A5+A1", {7}, 2, {}},
        {"list(1-1)", 3, "3A2", {4, 7}, 2, {}},    {"list(1-1)", 3, "A5", {6}, 2, {}},
        {"list(1-1)", 3, "2A2+A1", {4}, 3, {}},    {"list(1-1)", 3, "D4", {3}, 1, {}},
        {"list(1-1)", 3, "2A2", {5}, 7, {}},       {"list(1-1)", 3, "4A1", {3}, 3, {}},
        {"list(1-1)", 3, "A2", {2, 3}, 2, {}},     {"list(1-1)", 3, "A1", {2}, 3, {}},
    };
    return rows;
}

const std::vector<CatalogRow>& list_1_2() {
    static const std::vector<CatalogRow> rows = {
        {"list(1-2)", 4, "4A1", {2, 3}, std::nullopt, {}}, {"list(1-2)", 4, "2A1(1)", {2}, std::nullopt, {}},
        {"list(1-2)", 3, "3A2", {2}, std::nullopt, {}},    {"list(1-2)", 3, "2A2", {3}, std::nullopt, {}},
        {"list(1-2)", 3, "4A1", {2}, std::nullopt, {}},    {"list(1-2)", 3, "3A1", {2}, std::nullopt, {}},
    };
    return rows;
}

const std::vector<CatalogRow>& list_3() {
    static const std::vector<CatalogRow> rows = {
        {"list(3)", 2, "A5+A2", {8}, std::nullopt, {"A5^-", "A2^-"}},
        {"list(3)", 2, "2A3+A1", {8}, std::nullopt, {"A3^-", "A3^-", "A1^+"}},
        {"list(3)", 2, "2A3", {7}, std::nullopt, {"A3^-", "A3^-"}},
        {"list(3)", 2, "A3+3A1", {6}, std::nullopt, {"A3^-", "A1^+"}},
        {"list(3)", 2, "3A2", {5}, std::nullopt, {"A2^-"}},
        {"list(3)", 2, "(A5)'", {6}, std::nullopt, {"A5^-"}},
        {"list(3)", 2, "(A3+2A1)''", {5}, std::nullopt, {"A3^-"}},
        {"list(3)", 2, "A2+3A1", {4}, std::nullopt, {"A2^-"}},
        {"list(3)", 2, "(A3+A1)'", {5}, std::nullopt, {"A3^-", "A1^+"}},
        {"list(3)", 2, "A3", {4}, std::nullopt, {"A3^-"}},
        {"list(3)", 2, "A2", {3}, std::nullopt, {"A2^-"}},
        {"list(3)", 1, "A7+A1", {9}, std::nullopt, {"A7^-", "A1^+"}},
        {"list(3)", 1, "E6+A2", {9}, std::nullopt, {"E6^-", "A2^-"}},
        {"list(3)", 1, "D5+A3", {9}, std::nullopt, {"D5^-", "A3^-"}},
        {"list(3)", 1, "A5+A2+A1", {9}, std::nullopt, {"A5^-", "A2^-", "A1^+"}},
        {"list(3)", 1, "2A4", {9}, std::nullopt, {"A4^-", "A4^-"}},
        {"list(3)", 1, "(A7)'", {8}, std::nullopt, {"A7^-"}},
        {"list(3)", 1, "D5+2A1", {7}, std::nullopt, {"D5^-"}},
        {"list(3)", 1, "A5+A2", {8}, std::nullopt, {"A5^-", "A2^-"}},
        {"list(3)", 1, "E6", {7}, std::nullopt, {"E6^-"}},
        {"list(3)", 1, "(A5+A1)'", {7}, std::nullopt, {"A5^-", "A1^+"}},
        {"list(3)", 1, "D5", {6}, std::nullopt, {"D5^-"}},
        {"list(3)", 1, "A5", {6}, std::nullopt, {"A5^-"}},
        {"list(3)", 1, "A4", {5}, std::nullopt, {"A4^-"}},
    };
    return rows;
}

const std::vector<CatalogRow>& list_2() {
    static const std::vector<CatalogRow> rows = {
        {"list(2)", 2, "D4", {3, 4, 5}, std::nullopt, {}},     {"list(2)", 2, "D4+A1", {5, 6}, std::nullopt, {}},
        {"list(2)", 2, "D4+2A1", {5, 7}, std::nullopt, {}},    {"list(2)", 2, "D4+3A1", {4, 6, 8}, std::nullopt, {}},
        {"list(2)", 2, "A6", {4}, std::nullopt, {}},           {"list(2)", 2, "A7", {5, 8}, std::nullopt, {}},
        {"list(2)", 2, "D5", {5}, std::nullopt, {}},           {"list(2)", 2, "D5+A1", {6}, std::nullopt, {}},
        {"list(2)", 2, "D6", {7}, std::nullopt, {}},           {"list(2)", 2, "D6+A1", {8}, std::nullopt, {}},
        {"list(2)", 2, "E6", {5}, std::nullopt, {}},           {"list(2)", 2, "E7", {8}, std::nullopt, {}},
        {"list(2)", 1, "A8", {5, 9}, std::nullopt, {}},        {"list(2)", 1, "D6", {6, 7}, std::nullopt, {}},
        {"list(2)", 1, "D6+A1", {8}, std::nullopt, {}},        {"list(2)", 1, "D6+2A1", {7, 9}, std::nullopt, {}},
        {"list(2)", 1, "D7", {7}, std::nullopt, {}},           {"list(2)", 1, "D8", {9}, std::nullopt, {}},
        {"list(2)", 1, "E7", {8}, std::nullopt, {}},           {"list(2)", 1, "E7+A1", {9}, std::nullopt, {}},
        {"list(2)", 1, "E8", {9}, std::nullopt, {}},           {"list(2)", 2, "(A5)''", {4}, std::nullopt, {}},
        {"list(2)", 1, "(A7)''", {5}, std::nullopt, {}},
    };
    return rows;
}

std::vector<CatalogRow> all_catalog_rows() {
    std::vector<CatalogRow> out;
    for (const auto* t : {&list_1_1(), &list_1_2(), &list_3(), &list_2()}) out.insert(out.end(), t->begin(), t->end());
    return out;
}

}  // namespace dvdp::reference
