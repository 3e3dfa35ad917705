// Exact scalar and vector arithmetic shared by every module.
//
// All geometry in this library is done over Q with GMP-backed scalars;
// no floating point appears anywhere. Integer vectors are kept in
// primitive form (coordinate gcd 1) wherever a direction rather than a
// magnitude is meant.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylfan {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const IntVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline bool is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

inline IntVec negated(const IntVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

inline RatVec negated(const RatVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// gcd of all coordinates, nonnegative; 0 only for the zero vector
inline Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

// Divide out the content. Direction (sign) is preserved; zero stays zero.
inline IntVec primitive(IntVec v) {
    Int g = content(v);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

// Scale a rational direction to its primitive integer representative.
inline IntVec primitive(const RatVec& v) {
    Int l = 1;
    for (const Rat& x : v) l = boost::multiprecision::lcm(l, denominator(x));
    IntVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = numerator(v[i]) * (l / denominator(v[i]));
    return primitive(std::move(w));
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool lex_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Canonicalize a vector family: primitive, deduplicated, lex-sorted.
inline std::vector<IntVec> sorted_unique(std::vector<IntVec> vs) {
    std::sort(vs.begin(), vs.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

inline std::string to_string(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// Accepts "p" and "p/q"; q must be positive after canonicalization.
inline Rat parse_rat(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

struct element_cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct nonconvex_union_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct fan_axiom_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace weylfan
