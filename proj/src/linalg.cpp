#include "pbw/linalg.hpp"

#include <stdexcept>

namespace pbw {

RatMat mat_identity(std::size_t n) {
    RatMat m(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), m = b[0].size();
    RatMat r(n, RatVec(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    }
    return r;
}

RatVec mat_apply(const RatMat& a, const RatVec& v) {
    RatVec r(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != v.size()) throw std::invalid_argument("mat_apply: shape mismatch");
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    }
    return r;
}

RatMat mat_transpose(const RatMat& a) {
    if (a.empty()) return {};
    RatMat r(a[0].size(), RatVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

RatMat mat_sub(const RatMat& a, const RatMat& b) {
    RatMat r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

RatMat mat_scale(const RatMat& a, const Rational& s) {
    RatMat r = a;
    for (auto& row : r)
        for (auto& x : row) x *= s;
    return r;
}

RatMat mat_pow(const RatMat& a, int e) {
    RatMat acc = mat_identity(a.size()), base = a;
    while (e > 0) {
        if (e & 1) acc = mat_mul(acc, base);
        base = mat_mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool mat_equal(const RatMat& a, const RatMat& b) { return a == b; }

bool mat_is_identity(const RatMat& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != a.size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != Rational(i == j ? 1 : 0)) return false;
    }
    return true;
}

bool mat_is_diagonal(const RatMat& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (i != j && !a[i][j].is_zero()) return false;
    return true;
}

std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t mat_rank(RatMat m) { return rref(m).size(); }

Rational mat_det(RatMat m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        const Rational inv = Rational(1) / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            const Rational f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<RatMat> mat_inverse(const RatMat& m) {
    const std::size_t n = m.size();
    RatMat aug(n, RatVec(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("mat_inverse: not square");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    RatMat inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::optional<RatVec> solve_linear(RatMat a, RatVec b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    RatMat aug(rows, RatVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rref(aug);
    // Inconsistent iff some pivot lands in the constants column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    RatVec x(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

std::vector<RatVec> nullspace(RatMat a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVec char_poly(const RatMat& m) {
    const std::size_t n = m.size();
    // Faddeev-LeVerrier: char(x) = x^n - c1 x^{n-1} - c2 x^{n-2} - ... - cn.
    RatVec coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    RatMat nk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += nk[i][i];
        Rational ck = tr / Rational(static_cast<int>(k));
        coeffs[n - k] = -ck;
        if (k == n) break;
        RatMat adj = nk;
        for (std::size_t i = 0; i < n; ++i) adj[i][i] -= ck;
        nk = mat_mul(m, adj);
    }
    return coeffs;
}

bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.matrix == b.matrix && a.shift == b.shift;
}

AffineMap affine_compose(const AffineMap& f, const AffineMap& g) {
    // x_i -> row_i(g.matrix) . x + g.shift_i, then f applied to each x_j.
    AffineMap r;
    r.matrix = mat_mul(g.matrix, f.matrix);
    r.shift = mat_apply(g.matrix, f.shift);
    for (std::size_t i = 0; i < r.shift.size(); ++i) r.shift[i] += g.shift[i];
    return r;
}

std::vector<NCPoly> affine_images(const AffineMap& phi) {
    const std::size_t n = phi.matrix.size();
    std::vector<NCPoly> images(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::pair<Word, Rational>> raw;
        for (std::size_t j = 0; j < n; ++j)
            if (!phi.matrix[i][j].is_zero()) raw.push_back({{static_cast<Letter>(j)}, phi.matrix[i][j]});
        if (!phi.shift[i].is_zero()) raw.push_back({{}, phi.shift[i]});
        images[i] = make_poly(std::move(raw));
    }
    return images;
}

NCPoly apply_affine_map(const AffineMap& phi, const NCPoly& f) {
    return substitute(f, affine_images(phi));
}

}  // namespace pbw
