// SPDX-License-Identifier: MIT

#include "dvdp/picard_lattice.hpp"

#include <string>

namespace dvdp {

IntersectionForm standard_lattice(int d) {
    if (d < 1 || d > 7) throw InputError("standard_lattice: degree must lie in 1..7, got " + std::to_string(d));
    IntersectionForm form;
    form.rank = 10 - d;
    form.degree = d;
    form.model = LatticeModel::BlowUp;
    form.gram = IntMatrix(form.rank, IntVector(form.rank, 0));
    form.gram[0][0] = 1;
    for (int i = 1; i < form.rank; ++i) form.gram[i][i] = -1;
    form.canonical = DivisorClass(form.rank, 1);
    form.canonical[0] = -3;
    return form;
}

IntersectionForm hirzebruch_lattice() {
    IntersectionForm form;
    form.rank = 2;
    form.degree = 8;
    form.model = LatticeModel::Hirzebruch;
    form.gram = {{-2, 1}, {1, 0}};
    form.canonical = {-2, -4};
    return form;
}

IntersectionForm lattice_for_degree(int d) {
    if (d == 8) return hirzebruch_lattice();
    if (d < 1 || d > 8) throw InputError("degree must lie in 1..8, got " + std::to_string(d));
    return standard_lattice(d);
}

namespace {

void check_length(const IntersectionForm& form, std::size_t a, std::size_t b) {
    if (a != static_cast<std::size_t>(form.rank) || b != static_cast<std::size_t>(form.rank))
        throw InputError("pairing: coefficient length does not match lattice rank " + std::to_string(form.rank));
}

}  // namespace

std::int64_t pair(const IntersectionForm& form, const DivisorClass& a, const DivisorClass& b) {
    check_length(form, a.size(), b.size());
    std::int64_t total = 0;
    for (int i = 0; i < form.rank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < form.rank; ++j) {
            if (form.gram[i][j] == 0 || b[j] == 0) continue;
            total = checked_add(total, checked_mul(checked_mul(a[i], form.gram[i][j]), b[j]));
        }
    }
    return total;
}

Rational pair(const IntersectionForm& form, const QDivisor& a, const QDivisor& b) {
    check_length(form, a.size(), b.size());
    Rational total = 0;
    for (int i = 0; i < form.rank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < form.rank; ++j) {
            if (form.gram[i][j] == 0 || b[j] == 0) continue;
            total += a[i] * form.gram[i][j] * b[j];
        }
    }
    return total;
}

std::int64_t square(const IntersectionForm& form, const DivisorClass& a) { return pair(form, a, a); }

DivisorClass anticanonical(const IntersectionForm& form) { return scale(-1, form.canonical); }

DivisorClass basis_vector(const IntersectionForm& form, int i) {
    if (i < 0 || i >= form.rank) throw PreconditionError("basis_vector: index out of range");
    DivisorClass v(form.rank, 0);
    v[i] = 1;
    return v;
}

bool is_negative_definite(const IntersectionForm& form, const std::vector<DivisorClass>& basis) {
    if (basis.empty()) return false;
    QMatrix g(basis.size(), QVector(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) g[i][j] = pair(form, basis[i], basis[j]);
    const auto minors = leading_principal_minors(g);
    for (std::size_t k = 0; k < minors.size(); ++k) {
        // The k-th minor (size k+1) of a negative definite matrix has sign (-1)^(k+1).
        const bool want_negative = (k % 2) == 0;
        if (want_negative ? !(minors[k] < 0) : !(minors[k] > 0)) return false;
    }
    return true;
}

DivisorClass combine(const std::vector<std::int64_t>& coeffs, const std::vector<DivisorClass>& vectors) {
    if (coeffs.size() != vectors.size()) throw PreconditionError("combine: size mismatch");
    if (vectors.empty()) return {};
    DivisorClass out(vectors[0].size(), 0);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = checked_add(out[j], checked_mul(coeffs[i], vectors[i][j]));
    return out;
}

DivisorClass add(const DivisorClass& a, const DivisorClass& b) {
    if (a.size() != b.size()) throw PreconditionError("add: size mismatch");
    DivisorClass out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
    return out;
}

DivisorClass subtract(const DivisorClass& a, const DivisorClass& b) {
    if (a.size() != b.size()) throw PreconditionError("subtract: size mismatch");
    DivisorClass out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_sub(a[i], b[i]);
    return out;
}

DivisorClass scale(std::int64_t c, const DivisorClass& a) {
    DivisorClass out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_mul(c, a[i]);
    return out;
}

QDivisor combine_q(const QVector& coeffs, const std::vector<DivisorClass>& vectors) {
    if (coeffs.size() != vectors.size()) throw PreconditionError("combine_q: size mismatch");
    if (vectors.empty()) return {};
    QDivisor out(vectors[0].size(), Rational(0));
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += coeffs[i] * vectors[i][j];
    return out;
}

}  // namespace dvdp
