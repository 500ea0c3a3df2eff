// SPDX-License-Identifier: MIT

#include "dvdp/linalg.hpp"

#include <utility>

namespace dvdp {

QVector to_q(const IntVector& v) {
    QVector out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(x);
    return out;
}

QMatrix to_q(const IntMatrix& m) {
    QMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(to_q(row));
    return out;
}

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = b.empty() ? 0 : b[0].size();
    IntMatrix out(n, IntVector(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                out[i][j] = checked_add(out[i][j], checked_mul(a[i][t], b[t][j]));
        }
    return out;
}

IntVector apply(const IntMatrix& m, const IntVector& v) {
    IntVector out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0 && v[j] != 0) out[i] = checked_add(out[i], checked_mul(m[i][j], v[j]));
    return out;
}

IntMatrix transpose(const IntMatrix& m) {
    if (m.empty()) return {};
    IntMatrix out(m[0].size(), IntVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
    return out;
}

std::size_t rank(QMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

Rational determinant(QMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<QVector> solve(QMatrix a, QVector b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw PreconditionError("solve: dimension mismatch");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[c]);
        std::swap(b[pivot], b[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    QVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

std::optional<QMatrix> inverse(const QMatrix& a) {
    const std::size_t n = a.size();
    QMatrix out(n, QVector(n));
    for (std::size_t c = 0; c < n; ++c) {
        QVector e(n, Rational(0));
        e[c] = 1;
        auto col = solve(a, e);
        if (!col) return std::nullopt;
        for (std::size_t r = 0; r < n; ++r) out[r][c] = (*col)[r];
    }
    return out;
}

std::vector<Rational> leading_principal_minors(const QMatrix& a) {
    std::vector<Rational> minors;
    for (std::size_t k = 1; k <= a.size(); ++k) {
        QMatrix sub(k, QVector(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[i][j];
        minors.push_back(determinant(std::move(sub)));
    }
    return minors;
}

}  // namespace dvdp
