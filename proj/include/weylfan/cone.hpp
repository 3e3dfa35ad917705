// Rational polyhedral cones in canonical dual form.
//
// A cone carries both descriptions at all times:
//   rays    - canonical generator set of the cone itself,
//   normals - canonical generator set of the dual cone, i.e. an
//             irredundant inequality description  { x : f . x >= 0 }.
//
// Canonical generator sets are: primitive integer vectors, a +/- pair for
// each vector of the RREF basis of the lineality space, the extreme rays
// of the pointed part (taken inside the orthogonal complement of the
// lineality), lexicographically sorted. Cone equality is therefore plain
// structural comparison, and dualization is the swap of the two lists.
//
// H <-> V conversion is Fourier-Motzkin elimination over exact integers;
// redundancy removal is by one-inequality-at-a-time LP feasibility.
#pragma once

#include <functional>
#include <map>
#include <set>

#include "lp.hpp"

namespace weylfan {

// Canonical generator set of cone(gens) in ambient dimension n.
inline std::vector<IntVec> canonical_generators(const std::vector<IntVec>& gens, int n) {
    std::vector<IntVec> g;
    g.reserve(gens.size());
    for (const IntVec& v : gens) {
        if (static_cast<int>(v.size()) != n) throw std::invalid_argument("generator dimension mismatch");
        IntVec p = primitive(v);
        if (!is_zero(p)) g.push_back(std::move(p));
    }
    g = sorted_unique(std::move(g));
    if (g.empty()) return g;

    // linearly independent generators are extreme and span no lineality
    if (rank(g) == static_cast<int>(g.size())) return g;

    std::vector<IntVec> lin;
    for (const IntVec& v : g)
        if (in_cone(negated(v), g)) lin.push_back(v);
    std::vector<IntVec> lin_basis = span_basis(lin, n);

    std::vector<IntVec> pointed;
    if (lin_basis.empty()) {
        pointed = g;
    } else {
        for (const IntVec& v : g) {
            IntVec p = primitive(project_off(to_rat(v), lin_basis));
            if (!is_zero(p)) pointed.push_back(std::move(p));
        }
        pointed = sorted_unique(std::move(pointed));
    }

    // extreme rays of the pointed part: not in the cone of the others
    std::vector<IntVec> extreme;
    for (std::size_t i = 0; i < pointed.size(); ++i) {
        std::vector<IntVec> others;
        others.reserve(pointed.size() - 1);
        for (std::size_t j = 0; j < pointed.size(); ++j)
            if (j != i) others.push_back(pointed[j]);
        if (!in_cone(pointed[i], others)) extreme.push_back(pointed[i]);
    }

    std::vector<IntVec> out = std::move(extreme);
    for (const IntVec& b : lin_basis) {
        out.push_back(b);
        out.push_back(negated(b));
    }
    return sorted_unique(std::move(out));
}

namespace detail {

// One Fourier-Motzkin elimination round on integer inequality rows.
inline void fm_eliminate_var(std::vector<IntVec>& rows, std::size_t var) {
    std::vector<IntVec> zero, pos, neg;
    for (IntVec& r : rows) {
        if (r[var] == 0)
            zero.push_back(std::move(r));
        else if (r[var] > 0)
            pos.push_back(std::move(r));
        else
            neg.push_back(std::move(r));
    }
    for (const IntVec& p : pos)
        for (const IntVec& q : neg) {
            IntVec c(p.size());
            for (std::size_t k = 0; k < p.size(); ++k) c[k] = p[var] * q[k] - q[var] * p[k];
            c = primitive(std::move(c));
            if (!is_zero(c)) zero.push_back(std::move(c));
        }
    rows = sorted_unique(std::move(zero));
}

// Drop inequality rows implied by the remaining ones (Farkas: a row is
// redundant iff it lies in the cone of the other rows).
inline void drop_redundant_rows(std::vector<IntVec>& rows) {
    for (std::size_t i = rows.size(); i-- > 0;) {
        std::vector<IntVec> others;
        others.reserve(rows.size() - 1);
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (j != i) others.push_back(rows[j]);
        if (in_cone(rows[i], others)) rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
    }
}

// Inequality description of cone(rays): project the system
// { (l, x) : l >= 0, x = sum l_j rays_j } onto x, eliminating the l block.
inline std::vector<IntVec> fm_dual(const std::vector<IntVec>& rays, int n) {
    const std::size_t s = rays.size();
    const std::size_t w = s + static_cast<std::size_t>(n);
    std::vector<IntVec> rows;
    for (std::size_t j = 0; j < s; ++j) {
        IntVec r(w, Int(0));
        r[j] = 1;
        rows.push_back(std::move(r));
    }
    for (int i = 0; i < n; ++i) {
        IntVec r(w, Int(0));
        for (std::size_t j = 0; j < s; ++j) r[j] = -rays[j][i];
        r[s + static_cast<std::size_t>(i)] = 1;
        rows.push_back(primitive(r));
        rows.push_back(primitive(negated(r)));
    }

    std::vector<bool> eliminated(s, false);
    for (std::size_t round = 0; round < s; ++round) {
        // cheapest variable first: fewest pos*neg products
        std::size_t best = s;
        std::size_t best_cost = 0;
        for (std::size_t v = 0; v < s; ++v) {
            if (eliminated[v]) continue;
            std::size_t p = 0, q = 0;
            for (const IntVec& r : rows) {
                if (r[v] > 0) ++p;
                else if (r[v] < 0) ++q;
            }
            std::size_t cost = p * q;
            if (best == s || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        eliminated[best] = true;
        fm_eliminate_var(rows, best);
        if (rows.size() > 48) drop_redundant_rows(rows);
    }

    std::vector<IntVec> out;
    for (const IntVec& r : rows) {
        IntVec x(r.begin() + static_cast<std::ptrdiff_t>(s), r.end());
        if (!is_zero(x)) out.push_back(primitive(std::move(x)));
    }
    return sorted_unique(std::move(out));
}

}  // namespace detail

struct Cone {
    int ambient = 0;
    std::vector<IntVec> rays;     // canonical V-description
    std::vector<IntVec> normals;  // canonical H-description

    friend bool operator==(const Cone& a, const Cone& b) {
        return a.ambient == b.ambient && a.rays == b.rays && a.normals == b.normals;
    }
    friend bool operator<(const Cone& a, const Cone& b) {
        if (a.ambient != b.ambient) return a.ambient < b.ambient;
        if (a.rays != b.rays) return std::lexicographical_compare(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(), [](const IntVec& x, const IntVec& y) { return lex_less(x, y); });
        return std::lexicographical_compare(a.normals.begin(), a.normals.end(), b.normals.begin(), b.normals.end(), [](const IntVec& x, const IntVec& y) { return lex_less(x, y); });
    }
};

// Intrinsic dimension (rank of the generator set).
inline int cone_dim(const Cone& c) { return rank(c.rays); }

inline bool is_strongly_convex(const Cone& c) { return rank(c.normals) == c.ambient; }

inline bool cone_contains(const Cone& c, const RatVec& v) {
    if (static_cast<int>(v.size()) != c.ambient) throw std::invalid_argument("cone_contains: dimension mismatch");
    for (const IntVec& f : c.normals)
        if (dot(f, v) < 0) return false;
    return true;
}

inline bool cone_contains(const Cone& c, const IntVec& v) { return cone_contains(c, to_rat(v)); }

// Mutual-consistency check of the two descriptions; throws on violation.
inline void verify_cone(const Cone& c) {
    for (const IntVec& r : c.rays)
        for (const IntVec& f : c.normals)
            if (dot(f, r) < 0) throw std::logic_error("cone descriptions inconsistent: ray violates facet");
    const int d = rank(c.rays);
    std::set<IntVec> nset(c.normals.begin(), c.normals.end());
    std::vector<IntVec> eq;
    for (const IntVec& f : c.normals)
        if (nset.count(negated(f))) eq.push_back(f);
    if (rank(eq) != c.ambient - d) throw std::logic_error("cone descriptions inconsistent: span mismatch");
}

inline Cone cone_from_generators(const std::vector<IntVec>& gens, int ambient) {
    Cone c;
    c.ambient = ambient;
    c.rays = canonical_generators(gens, ambient);
    c.normals = canonical_generators(detail::fm_dual(c.rays, ambient), ambient);
    verify_cone(c);
    return c;
}

// Cone cut out by { x : f . x >= 0, f in halfspaces }.
inline Cone cone_from_halfspaces(const std::vector<IntVec>& halfspaces, int ambient) {
    Cone c;
    c.ambient = ambient;
    c.normals = canonical_generators(halfspaces, ambient);
    c.rays = canonical_generators(detail::fm_dual(c.normals, ambient), ambient);
    verify_cone(c);
    return c;
}

// The dual swaps the two canonical descriptions.
inline Cone dual_cone(const Cone& c) {
    Cone d;
    d.ambient = c.ambient;
    d.rays = c.normals;
    d.normals = c.rays;
    return d;
}

inline Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("intersect: dimension mismatch");
    std::vector<IntVec> hs = a.normals;
    hs.insert(hs.end(), b.normals.begin(), b.normals.end());
    return cone_from_halfspaces(hs, a.ambient);
}

// All faces of a strongly convex cone, each as sigma cut by a subset of
// its facet hyperplanes; includes the cone itself and the zero face.
inline std::vector<Cone> faces(const Cone& c) {
    if (!is_strongly_convex(c))
        throw std::invalid_argument("faces: cone has lineality; face lattice out of scope");
    // zero patterns of rays against normals
    const std::size_t nr = c.rays.size(), nf = c.normals.size();
    std::vector<std::vector<bool>> vanish(nf, std::vector<bool>(nr));
    for (std::size_t f = 0; f < nf; ++f)
        for (std::size_t r = 0; r < nr; ++r) vanish[f][r] = dot(c.normals[f], c.rays[r]) == 0;

    std::set<std::vector<std::size_t>> subsets;
    std::vector<std::vector<std::size_t>> queue;
    std::vector<std::size_t> full(nr);
    for (std::size_t r = 0; r < nr; ++r) full[r] = r;
    subsets.insert(full);
    queue.push_back(full);
    while (!queue.empty()) {
        std::vector<std::size_t> s = std::move(queue.back());
        queue.pop_back();
        for (std::size_t f = 0; f < nf; ++f) {
            std::vector<std::size_t> t;
            for (std::size_t r : s)
                if (vanish[f][r]) t.push_back(r);
            if (subsets.insert(t).second) queue.push_back(t);
        }
    }

    std::vector<Cone> out;
    out.reserve(subsets.size());
    for (const auto& s : subsets) {
        if (s.size() == nr) {
            out.push_back(c);
            continue;
        }
        std::vector<IntVec> gens;
        gens.reserve(s.size());
        for (std::size_t r : s) gens.push_back(c.rays[r]);
        out.push_back(cone_from_generators(gens, c.ambient));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Facets (codimension-one faces) of a full-dimensional strongly convex
// cone, keyed by their canonical ray sets. One facet per normal.
inline std::vector<std::vector<IntVec>> facet_ray_sets(const Cone& c) {
    std::vector<std::vector<IntVec>> out;
    for (const IntVec& f : c.normals) {
        std::vector<IntVec> rs;
        for (const IntVec& r : c.rays)
            if (dot(f, r) == 0) rs.push_back(r);
        out.push_back(sorted_unique(std::move(rs)));
    }
    return out;
}

// tau a face of sigma?  tau must equal sigma cut by every facet
// hyperplane vanishing on it (the smallest face containing tau).
inline bool is_face_of(const Cone& tau, const Cone& sigma) {
    if (tau.ambient != sigma.ambient) return false;
    if (tau == sigma) return true;
    for (const IntVec& r : tau.rays)
        if (!cone_contains(sigma, r)) return false;
    std::vector<IntVec> active;
    for (const IntVec& f : sigma.normals) {
        bool vanishes = true;
        for (const IntVec& r : tau.rays)
            if (dot(f, r) != 0) { vanishes = false; break; }
        if (vanishes) active.push_back(f);
    }
    std::vector<IntVec> candidate;
    for (const IntVec& r : sigma.rays) {
        bool in_all = true;
        for (const IntVec& f : active)
            if (dot(f, r) != 0) { in_all = false; break; }
        if (in_all) candidate.push_back(r);
    }
    return cone_from_generators(candidate, sigma.ambient) == tau;
}

inline IntVec apply_mat(const IMat& g, const IntVec& v) { return apply(g, v); }

// Image of the cone under an invertible integer matrix. Orthogonal maps
// of full-dimensional pointed cones keep both canonical descriptions up to
// re-sorting; everything else is rebuilt from generators.
inline Cone apply_transform(const IMat& g, const Cone& c) {
    if (g.n != c.ambient) throw std::invalid_argument("apply_transform: dimension mismatch");
    if (det(g) == 0) throw std::invalid_argument("apply_transform: singular matrix");
    if (is_orthogonal(g) && is_strongly_convex(c) && cone_dim(c) == c.ambient) {
        Cone out;
        out.ambient = c.ambient;
        out.rays.reserve(c.rays.size());
        for (const IntVec& r : c.rays) out.rays.push_back(apply(g, r));
        out.normals.reserve(c.normals.size());
        for (const IntVec& f : c.normals) out.normals.push_back(apply(g, f));
        out.rays = sorted_unique(std::move(out.rays));
        out.normals = sorted_unique(std::move(out.normals));
        return out;
    }
    std::vector<IntVec> gens;
    gens.reserve(c.rays.size());
    for (const IntVec& r : c.rays) gens.push_back(apply(g, r));
    return cone_from_generators(gens, c.ambient);
}

inline Cone negated_cone(const Cone& c) {
    IMat m(c.ambient);
    for (int i = 0; i < c.ambient; ++i) m.at(i, i) = -1;
    return apply_transform(m, c);
}

// ---------------------------------------------------------------------------
// Certified convex union
// ---------------------------------------------------------------------------

// Returns true iff the pair is certified interior-disjoint.
using DisjointnessChecker = std::function<bool(const Cone&, const Cone&)>;

inline bool lp_interior_disjoint(const Cone& a, const Cone& b) {
    std::vector<IntVec> hs = a.normals;
    hs.insert(hs.end(), b.normals.begin(), b.normals.end());
    return !halfspaces_have_interior(hs, a.ambient);
}

// Convex hull of a union of full-dimensional cones, certified: the pieces
// must tile the hull (pairwise interior-disjoint, interior facets paired
// exactly twice, boundary facets on the hull boundary). Throws
// nonconvex_union_error when the union is not convex.
inline Cone convex_union(const std::vector<Cone>& pieces, int ambient, const DisjointnessChecker& disjoint = lp_interior_disjoint) {
    if (pieces.empty()) throw std::invalid_argument("convex_union: empty family");
    std::vector<Cone> ps;
    for (const Cone& p : pieces) {
        if (p.ambient != ambient) throw std::invalid_argument("convex_union: dimension mismatch");
        if (cone_dim(p) != ambient) throw std::invalid_argument("convex_union: full-dimensional cones required");
        if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
    }
    if (ps.size() == 1) return ps[0];

    std::vector<IntVec> all_rays;
    std::vector<IntVec> candidates;
    for (const Cone& p : ps) {
        all_rays.insert(all_rays.end(), p.rays.begin(), p.rays.end());
        candidates.insert(candidates.end(), p.normals.begin(), p.normals.end());
    }
    all_rays = sorted_unique(std::move(all_rays));
    candidates = sorted_unique(std::move(candidates));

    // every facet of the hull of a full-dimensional union is supported by
    // a facet hyperplane of one of the pieces
    std::vector<IntVec> valid;
    for (const IntVec& f : candidates) {
        bool ok = true;
        for (const IntVec& r : all_rays)
            if (dot(f, r) < 0) { ok = false; break; }
        if (ok) valid.push_back(f);
    }

    Cone hull;
    hull.ambient = ambient;
    hull.normals = canonical_generators(valid, ambient);
    hull.rays = canonical_generators(detail::fm_dual(hull.normals, ambient), ambient);
    verify_cone(hull);

    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            if (!disjoint(ps[i], ps[j]))
                throw nonconvex_union_error("convex_union: pieces overlap interiorly");

    // pseudo-manifold facet pairing
    std::map<std::vector<IntVec>, int> interior_count;
    for (const Cone& p : ps) {
        for (const std::vector<IntVec>& frays : facet_ray_sets(p)) {
            bool boundary = false;
            for (const IntVec& g : hull.normals) {
                bool vanishes = true;
                for (const IntVec& r : frays)
                    if (dot(g, r) != 0) { vanishes = false; break; }
                if (vanishes) { boundary = true; break; }
            }
            if (!boundary) ++interior_count[frays];
        }
    }
    for (const auto& [frays, count] : interior_count)
        if (count != 2)
            throw nonconvex_union_error("convex_union: union is not convex (unpaired interior facet)");

    return hull;
}

}  // namespace weylfan
