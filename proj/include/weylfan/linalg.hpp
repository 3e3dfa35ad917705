// Small exact linear algebra over Q: Gaussian elimination, rank, square
// solves, nullspaces, reduced row echelon form, and the integer matrices
// used for Weyl group elements.
#pragma once

#include <optional>

#include "numeric.hpp"

namespace weylfan {

using RatMat = std::vector<RatVec>;  // row-major, rows may be empty

// ---------------------------------------------------------------------------
// Integer matrices (Weyl elements are signed permutations, so plain int
// entries suffice; products never leave {-1,0,1}).
// ---------------------------------------------------------------------------

struct IMat {
    int n = 0;
    std::vector<int> e;  // row-major, n*n entries

    IMat() = default;
    explicit IMat(int dim) : n(dim), e(static_cast<std::size_t>(dim) * dim, 0) {}

    static IMat identity(int dim) {
        IMat m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }

    int& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
    int at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }

    friend bool operator==(const IMat& a, const IMat& b) { return a.n == b.n && a.e == b.e; }
    friend bool operator<(const IMat& a, const IMat& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.e < b.e;
    }
};

inline IMat mul(const IMat& a, const IMat& b) {
    if (a.n != b.n) throw std::invalid_argument("IMat mul: dimension mismatch");
    IMat c(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            int aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < a.n; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

inline IMat transpose(const IMat& a) {
    IMat t(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

inline bool is_orthogonal(const IMat& a) { return mul(transpose(a), a) == IMat::identity(a.n); }

inline IntVec apply(const IMat& m, const IntVec& v) {
    if (static_cast<int>(v.size()) != m.n) throw std::invalid_argument("IMat apply: dimension mismatch");
    IntVec r(v.size(), Int(0));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
    return r;
}

inline RatVec apply(const IMat& m, const RatVec& v) {
    if (static_cast<int>(v.size()) != m.n) throw std::invalid_argument("IMat apply: dimension mismatch");
    RatVec r(v.size(), Rat(0));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
    return r;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det(const IMat& m) {
    int n = m.n;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? Int(1) : Int(sign) * a[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// Rational elimination
// ---------------------------------------------------------------------------

// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<int> rref(RatMat& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int ncols = static_cast<int>(rows[0].size());
    std::size_t r = 0;
    for (int c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rat inv = rows[r][c];
        for (int j = 0; j < ncols; ++j) rows[r][j] /= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (int j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);  // drop zero rows
    return pivots;
}

inline int rank(RatMat rows) { return static_cast<int>(rref(rows).size()); }

inline int rank(const std::vector<IntVec>& rows) {
    RatMat m;
    m.reserve(rows.size());
    for (const IntVec& r : rows) m.push_back(to_rat(r));
    return rank(std::move(m));
}

// Solve the square system A x = b; nullopt when A is singular.
inline std::optional<RatVec> solve_square(const RatMat& a, const RatVec& b) {
    const std::size_t n = a.size();
    if (n == 0) return RatVec{};
    RatMat aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n) throw std::invalid_argument("solve_square: not square");
        aug[i].push_back(b[i]);
    }
    std::vector<int> piv = rref(aug);
    if (piv.size() != n) return std::nullopt;
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

// Basis of {x : r . x = 0 for every row r}, as primitive integer vectors in
// a canonical (RREF-derived) form.
inline std::vector<IntVec> nullspace(const RatMat& rows, int ncols) {
    RatMat m = rows;
    std::vector<int> piv = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<IntVec> basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(ncols, Rat(0));
        v[c] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][c];
        basis.push_back(primitive(v));
    }
    return basis;
}

inline std::vector<IntVec> nullspace(const std::vector<IntVec>& rows, int ncols) {
    RatMat m;
    m.reserve(rows.size());
    for (const IntVec& r : rows) m.push_back(to_rat(r));
    return nullspace(m, ncols);
}

// Canonical primitive-integer basis of the span of the given vectors
// (RREF rows with positive leading entry). Two families span the same
// subspace iff this returns the same list.
inline std::vector<IntVec> span_basis(const std::vector<IntVec>& vecs, int ncols) {
    RatMat m;
    m.reserve(vecs.size());
    for (const IntVec& v : vecs) m.push_back(to_rat(v));
    rref(m);
    std::vector<IntVec> basis;
    basis.reserve(m.size());
    for (const RatVec& r : m) basis.push_back(primitive(r));
    (void)ncols;
    return basis;
}

// Orthogonal projection of v onto the complement of span(basis).
inline RatVec project_off(const RatVec& v, const std::vector<IntVec>& basis) {
    if (basis.empty()) return v;
    const std::size_t d = basis.size();
    RatMat gram(d, RatVec(d));
    RatVec rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) gram[i][j] = Rat(dot(basis[i], basis[j]));
        rhs[i] = dot(basis[i], v);
    }
    auto coef = solve_square(gram, rhs);
    if (!coef) throw std::logic_error("project_off: dependent basis");
    RatVec r = v;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[j] -= (*coef)[i] * Rat(basis[i][j]);
    return r;
}

}  // namespace weylfan
