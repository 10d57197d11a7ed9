#include "toric/linalg.hpp"

#include "toric/errors.hpp"

namespace toric::linalg {

Matrix to_rational(const IntMatrix& m) {
    Matrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        RationalVector r;
        r.reserve(row.size());
        for (long long v : row) r.emplace_back(static_cast<long>(v));
        out.push_back(std::move(r));
    }
    return out;
}

Echelon rref(Matrix m, std::size_t cols) {
    Echelon out;
    if (!m.empty()) cols = m.front().size();
    for (const auto& row : m)
        if (row.size() != cols) throw DimensionMismatch("ragged matrix");
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::vector<RationalVector> nullspace(const Matrix& m, std::size_t cols) {
    Echelon e = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<long long>> integer_nullspace(const IntMatrix& m, std::size_t cols) {
    std::vector<std::vector<long long>> out;
    for (const auto& v : nullspace(to_rational(m), cols)) {
        std::vector<long long> iv;
        for (const auto& x : primitive_integer(v)) {
            if (!x.fits_slong_p()) throw Error("kernel vector entry exceeds machine integer range");
            iv.push_back(x.get_si());
        }
        out.push_back(std::move(iv));
    }
    return out;
}

std::optional<RationalVector> solve(const Matrix& m, const RationalVector& b, std::size_t cols) {
    if (b.size() != m.size()) throw DimensionMismatch("right-hand side length mismatch");
    Matrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Echelon e = rref(std::move(aug), cols + 1);
    RationalVector x(cols, Rational(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == cols) return std::nullopt;
        x[e.pivots[r]] = e.reduced[r][cols];
    }
    return x;
}

} // namespace toric::linalg
