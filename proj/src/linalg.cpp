#include "octavia/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace octavia::linalg {

QMatrix to_q(const ZMatrix& m) {
    QMatrix out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (int64_t v : m[i]) out[i].emplace_back(v);
    return out;
}

QMatrix identity(int n) {
    QMatrix out(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
    const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMatrix out(n, std::vector<Rational>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

QMatrix transpose(const QMatrix& a) {
    if (a.empty()) return {};
    QMatrix out(a[0].size(), std::vector<Rational>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
    return out;
}

Rational determinant(QMatrix a) {
    const size_t n = a.size();
    Rational det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            Rational f = a[r][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

std::optional<QMatrix> inverse(QMatrix a) {
    const size_t n = a.size();
    QMatrix inv = identity(static_cast<int>(n));
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational piv = a[c][c];
        for (size_t j = 0; j < n; ++j) {
            a[c][j] = a[c][j] / piv;
            inv[c][j] = inv[c][j] / piv;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Rational f = a[r][c];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

std::vector<Rational> apply(const QMatrix& a, const std::vector<Rational>& x) {
    std::vector<Rational> out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (!a[i][j].is_zero() && !x[j].is_zero()) out[i] += a[i][j] * x[j];
    return out;
}

ZMatrix hermite_rows(ZMatrix rows) {
    if (rows.empty()) return rows;
    const size_t m = rows[0].size();
    ZMatrix basis;
    size_t top = 0;
    for (size_t c = 0; c < m && top < rows.size(); ++c) {
        // Euclid on column c among rows[top..]
        while (true) {
            size_t best = rows.size();
            for (size_t r = top; r < rows.size(); ++r)
                if (rows[r][c] != 0 && (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c])))
                    best = r;
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool done = true;
            for (size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                int64_t q = rows[r][c] / rows[top][c];
                for (size_t j = 0; j < m; ++j) rows[r][j] = narrow(i128(rows[r][j]) - i128(q) * rows[top][j]);
                if (rows[r][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[top][c] == 0) continue;
        if (rows[top][c] < 0)
            for (auto& v : rows[top]) v = -v;
        for (size_t r = 0; r < top; ++r) {
            int64_t q = floor_div(rows[r][c], rows[top][c]);
            for (size_t j = 0; j < m; ++j) rows[r][j] = narrow(i128(rows[r][j]) - i128(q) * rows[top][j]);
        }
        ++top;
    }
    rows.resize(top);
    return rows;
}

}  // namespace octavia::linalg
