#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "plankcover/errors.hpp"

namespace plankcover {

// Default tolerance for geometric predicates. Every predicate that compares
// against it also accepts an explicit tol parameter.
inline constexpr double kDefaultTol = 1e-9;

// Point or direction in R^d, 64-bit coordinates.
using Vec = std::vector<double>;

// w = (u, v) in R^d x R^d. The hat involution swaps the two halves.
struct PairedVector {
    Vec u;
    Vec v;
};

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scaled(const Vec& a, double t) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
    return r;
}

inline void add_in_place(Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

inline void sub_in_place(Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
}

inline Vec zeros(int d) { return Vec(static_cast<std::size_t>(d), 0.0); }

inline Vec axis(int d, int k, double value = 1.0) {
    Vec r = zeros(d);
    r[static_cast<std::size_t>(k)] = value;
    return r;
}

inline bool all_finite(const Vec& a) {
    for (double x : a)
        if (!std::isfinite(x)) return false;
    return true;
}

inline void require_finite(const Vec& a, const char* what) {
    if (!all_finite(a)) throw ArgumentError(std::string(what) + ": non-finite entry");
}

inline void require_same_dim(const Vec& a, const Vec& b, const char* what) {
    if (a.size() != b.size()) throw ArgumentError(std::string(what) + ": dimension mismatch");
}

inline PairedVector hat(const PairedVector& w) { return PairedVector{w.v, w.u}; }

// Inner product on R^d x R^d: <(a,b),(c,d)> = <a,c> + <b,d>.
inline double dot(const PairedVector& a, const PairedVector& b) {
    return dot(a.u, b.u) + dot(a.v, b.v);
}

inline PairedVector sub(const PairedVector& a, const PairedVector& b) {
    return PairedVector{sub(a.u, b.u), sub(a.v, b.v)};
}

inline PairedVector scaled(const PairedVector& a, double t) {
    return PairedVector{scaled(a.u, t), scaled(a.v, t)};
}

}  // namespace plankcover
