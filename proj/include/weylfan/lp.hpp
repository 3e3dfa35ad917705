// Exact linear-programming feasibility (phase-I simplex with Bland's rule).
// This is the certificate engine behind cone membership, redundancy
// removal, and full-dimensionality tests.
#pragma once

#include "linalg.hpp"

namespace weylfan {

// Decide whether { y >= 0 : A y = b } is nonempty. A is m x k, exact.
inline bool feasible_nonneg(RatMat a, RatVec b) {
    const std::size_t m = a.size();
    const std::size_t k = m == 0 ? 0 : a[0].size();
    if (m == 0) return true;

    // tableau [A | I | b], artificial basis, minimize sum of artificials
    const std::size_t cols = k + m + 1;
    RatMat t(m, RatVec(cols, Rat(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = b[i] < 0;
        for (std::size_t j = 0; j < k; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
        t[i][k + i] = 1;
        t[i][cols - 1] = flip ? -b[i] : b[i];
        basis[i] = k + i;
    }

    for (;;) {
        // reduced cost of a real column j: -sum of t[i][j] over artificial basis rows
        std::size_t enter = cols;
        for (std::size_t j = 0; j < k; ++j) {
            Rat z = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (basis[i] >= k) z += t[i][j];
            if (z > 0) { enter = j; break; }  // Bland: first improving column
        }
        if (enter == cols) break;

        std::size_t leave = m;
        Rat best = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw std::logic_error("phase-I simplex: unbounded pivot");

        Rat piv = t[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    Rat value = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= k) value += t[i][cols - 1];
    return value == 0;
}

// v in cone(gens)? Exact membership via LP feasibility.
inline bool in_cone(const RatVec& v, const std::vector<IntVec>& gens) {
    if (gens.empty()) return is_zero(v);
    const std::size_t n = v.size();
    RatMat a(n, RatVec(gens.size()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) a[i][j] = Rat(gens[j][i]);
    return feasible_nonneg(std::move(a), v);
}

inline bool in_cone(const IntVec& v, const std::vector<IntVec>& gens) {
    return in_cone(to_rat(v), gens);
}

// Does { x : f . x >= 0 for all f in normals } have nonempty interior in
// dimension n? Equivalently (by homogeneity): is { x : f . x >= 1 } feasible?
inline bool halfspaces_have_interior(const std::vector<IntVec>& normals, int n) {
    if (normals.empty()) return true;
    const std::size_t m = normals.size();
    // variables: x = u - w with u,w >= 0, plus one slack per inequality
    RatMat a(m, RatVec(2 * static_cast<std::size_t>(n) + m, Rat(0)));
    RatVec b(m, Rat(1));
    for (std::size_t i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            a[i][j] = Rat(normals[i][j]);
            a[i][n + j] = -Rat(normals[i][j]);
        }
        a[i][2 * static_cast<std::size_t>(n) + i] = -1;
    }
    return feasible_nonneg(std::move(a), std::move(b));
}

// p in conv(points)? Used by the brute-force hull oracle in the tests and
// kept here so both sides of the dual-route checks share one LP core.
inline bool in_convex_hull(const RatVec& p, const std::vector<RatVec>& points) {
    if (points.empty()) return false;
    const std::size_t n = p.size();
    RatMat a(n + 1, RatVec(points.size()));
    RatVec b(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) a[i][j] = points[j][i];
        b[i] = p[i];
    }
    for (std::size_t j = 0; j < points.size(); ++j) a[n][j] = 1;
    b[n] = 1;
    return feasible_nonneg(std::move(a), std::move(b));
}

}  // namespace weylfan
