// SPDX-License-Identifier: MIT
//
// Small dense exact linear algebra over the rationals and overflow-checked
// integer matrix helpers. Matrices are row-major vectors of rows.

#ifndef DVDP_LINALG_HPP
#define DVDP_LINALG_HPP

#include "dvdp/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace dvdp {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;
using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

QVector to_q(const IntVector& v);
QMatrix to_q(const IntMatrix& m);

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector apply(const IntMatrix& m, const IntVector& v);
IntMatrix transpose(const IntMatrix& m);

/// Rank by fraction-exact Gaussian elimination.
std::size_t rank(QMatrix m);

/// Determinant by exact Gaussian elimination; empty matrix gives 1.
Rational determinant(QMatrix m);

/// Solves the square system `a x = b`; empty when `a` is singular.
std::optional<QVector> solve(QMatrix a, QVector b);

/// Inverse of a square matrix; empty when singular.
std::optional<QMatrix> inverse(const QMatrix& a);

/// Leading principal minors det(a[0..k][0..k]) for k = 1..n.
std::vector<Rational> leading_principal_minors(const QMatrix& a);

}  // namespace dvdp

#endif  // DVDP_LINALG_HPP
