// SPDX-License-Identifier: MIT
//
// Published reference values used as test expectations and by the `tables`
// and `verify` subcommands: the chain self-pairing table, the Corti
// parameter rows, the gamma polynomials of the D_5^+ / E_6^+ families and
// the catalogs of surface types with their Picard ranks and decorations.

#ifndef DVDP_REFERENCE_TABLES_HPP
#define DVDP_REFERENCE_TABLES_HPP

#include "dvdp/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dvdp::reference {

/// One entry (n, j0) -> (M)^2 of the chain table.
struct ChainSquareEntry {
    int n = 0;
    int j0 = 0;
    Rational value;
};

/// The 36 entries for 1 <= j0 <= n <= 8.
const std::vector<ChainSquareEntry>& chain_square_table();

/// One row of the Corti parameter table. `support` lists the coefficients
/// of M on the point's components; `witness` is the separately quoted
/// (u, v) for rows that fail the two-inequality special system.
struct CortiRow {
    int degree = 0;
    std::string label;
    std::vector<int> support;
    Rational alpha, beta, gamma;
    std::optional<std::pair<Rational, Rational>> witness;
};

const std::vector<CortiRow>& corti_rows();

/// gamma = a t^2 + b t + c on [t_min, t_max], with the stated gamma range.
struct GammaPolynomial {
    std::string label;
    Rational a, b, c;
    Rational t_min, t_max;
    Rational gamma_min, gamma_max;
};

const std::vector<GammaPolynomial>& gamma_polynomials();

/// One row of a surface-type catalog.
struct CatalogRow {
    /// "list(1-1)", "list(1-2)", "list(3)" or "list(2)".
    std::string table;
    int degree = 0;
    /// Type name; variants are written "(X)'" / "(X)''" or "X(1)" / "X(2)".
    std::string type;
    /// Admissible values of rho_k of the resolution.
    std::vector<int> rho_values;
    /// Construction case n° (list(1-1) only).
    std::optional<int> construction_case;
    /// Decorated types of the k-rational points (list(3) only), e.g. "A5^-".
    std::vector<std::string> decorations;
};

/// Degree >= 3, with a k-rational singular point.
const std::vector<CatalogRow>& list_1_1();
/// Degree >= 3, without a k-rational singular point.
const std::vector<CatalogRow>& list_1_2();
/// Degree <= 2, types of the if-part of the Minus-decoration clause.
const std::vector<CatalogRow>& list_3();
/// Degree <= 2, types covered by the big-singularity and double-prime clauses.
const std::vector<CatalogRow>& list_2();

/// Every row of the four catalogs.
std::vector<CatalogRow> all_catalog_rows();

}  // namespace dvdp::reference

#endif  // DVDP_REFERENCE_TABLES_HPP
