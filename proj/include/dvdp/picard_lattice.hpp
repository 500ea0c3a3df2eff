// SPDX-License-Identifier: MIT
//
// Picard lattices of weak del Pezzo surfaces. Degrees 1..7 use the blow-up
// basis (l, e_1, ..., e_{9-d}); degree 8 uses the (M, F) basis of the
// Hirzebruch surface F_2, where M is the negative section and F a fibre.

#ifndef DVDP_PICARD_LATTICE_HPP
#define DVDP_PICARD_LATTICE_HPP

#include "dvdp/linalg.hpp"

#include <cstdint>
#include <vector>

namespace dvdp {

/// Integer coefficient vector in a lattice basis.
using DivisorClass = IntVector;

/// Rational coefficient vector in a lattice basis.
using QDivisor = QVector;

enum class LatticeModel { BlowUp, Hirzebruch };

/// A finite-rank integral lattice with a distinguished canonical class.
struct IntersectionForm {
    int rank = 0;
    IntMatrix gram;
    DivisorClass canonical;
    int degree = 0;
    LatticeModel model = LatticeModel::BlowUp;

    friend bool operator==(const IntersectionForm&, const IntersectionForm&) = default;
};

/// Blow-up model of P^2 at 9-d points; requires 1 <= d <= 7.
IntersectionForm standard_lattice(int d);

/// Lattice of F_2 in the basis (M, F).
IntersectionForm hirzebruch_lattice();

/// standard_lattice(d) for d <= 7 and hirzebruch_lattice() for d == 8.
IntersectionForm lattice_for_degree(int d);

/// Exact bilinear pairing a^T gram b.
std::int64_t pair(const IntersectionForm& form, const DivisorClass& a, const DivisorClass& b);
Rational pair(const IntersectionForm& form, const QDivisor& a, const QDivisor& b);

/// Self-pairing shorthand.
std::int64_t square(const IntersectionForm& form, const DivisorClass& a);

/// The anticanonical class -K.
DivisorClass anticanonical(const IntersectionForm& form);

/// Basis vector number `i` (0-based).
DivisorClass basis_vector(const IntersectionForm& form, int i);

/// True iff the Gram matrix restricted to the span of `basis` is negative
/// definite, decided by the signs of exact leading principal minors.
bool is_negative_definite(const IntersectionForm& form, const std::vector<DivisorClass>& basis);

/// Integer linear combination sum c_i v_i.
DivisorClass combine(const std::vector<std::int64_t>& coeffs, const std::vector<DivisorClass>& vectors);

DivisorClass add(const DivisorClass& a, const DivisorClass& b);
DivisorClass subtract(const DivisorClass& a, const DivisorClass& b);
DivisorClass scale(std::int64_t c, const DivisorClass& a);

/// Rational combination sum c_i v_i.
QDivisor combine_q(const QVector& coeffs, const std::vector<DivisorClass>& vectors);

}  // namespace dvdp

#endif  // DVDP_PICARD_LATTICE_HPP
