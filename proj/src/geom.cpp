#include "plankcover/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plankcover/errors.hpp"
#include "plankcover/lp.hpp"

namespace plankcover {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cross2(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

void check_dim(const Polytope& P, const Vec& x, const char* where) {
    if (static_cast<int>(x.size()) != P.dim)
        throw DimensionError(std::string(where) + ": expected dimension " + std::to_string(P.dim));
}

// One LP per signed axis; any unbounded probe means an unbounded body, an
// infeasible one means the halfspaces describe the empty set.
bool probe_bounded(const Polytope& P) {
    for (int k = 0; k < P.dim; ++k) {
        for (double s : {1.0, -1.0}) {
            LinearProgram lp;
            lp.objective = axis(P.dim, k, s);
            for (const auto& h : P.halfspaces) lp.constraints.push_back({h.a, Rel::Le, h.b});
            auto out = solve(lp);
            if (out.status == LpStatus::Infeasible)
                throw RepresentationError("halfspaces describe an empty set");
            if (out.status == LpStatus::Unbounded) return false;
        }
    }
    return true;
}

std::vector<Vec> vertices_from_halfspaces_2d(const Polytope& P) {
    const auto& hs = P.halfspaces;
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            const Vec& a = hs[i].a;
            const Vec& b = hs[j].a;
            double det = a[0] * b[1] - a[1] * b[0];
            if (std::abs(det) < 1e-12 * std::max(1.0, norm(a) * norm(b))) continue;
            Vec x = {(hs[i].b * b[1] - hs[j].b * a[1]) / det,
                     (a[0] * hs[j].b - b[0] * hs[i].b) / det};
            bool ok = true;
            for (const auto& h : hs)
                if (dot(h.a, x) > h.b + 1e-7 * std::max(1.0, std::abs(h.b))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            bool dup = false;
            for (const auto& p : pts)
                if (norm(sub(p, x)) < 1e-7) {
                    dup = true;
                    break;
                }
            if (!dup) pts.push_back(x);
        }
    }
    return convex_hull_2d(std::move(pts));
}

}  // namespace

std::vector<Vec> convex_hull_2d(std::vector<Vec> pts) {
    for (const auto& p : pts)
        if (p.size() != 2) throw DimensionError("convex_hull_2d: points must be 2-d");
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::size_t n = pts.size();
    if (n < 3) return pts;
    double scale = 1.0;
    for (const auto& p : pts) scale = std::max({scale, std::abs(p[0]), std::abs(p[1])});
    const double eps = 1e-12 * scale * scale;
    std::vector<Vec> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= eps) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross2(hull[k - 2], hull[k - 1], pts[i]) <= eps) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

Polytope from_halfspaces(int dim, std::vector<Halfspace> hs) {
    if (dim < 1) throw DimensionError("from_halfspaces: dimension must be positive");
    if (hs.empty()) throw RepresentationError("from_halfspaces: no halfspaces");
    for (auto& h : hs) {
        if (static_cast<int>(h.a.size()) != dim)
            throw DimensionError("from_halfspaces: normal of wrong dimension");
        require_finite(h.a, "halfspace normal");
        if (!std::isfinite(h.b)) throw RepresentationError("from_halfspaces: non-finite offset");
        if (norm(h.a) < 1e-12) throw RepresentationError("from_halfspaces: zero normal");
    }
    Polytope P{dim, std::move(hs), {}};
    bool bounded = probe_bounded(P);
    if (dim == 2 && bounded) {
        P.vertices = vertices_from_halfspaces_2d(P);
        if (P.vertices.size() < 3)
            throw RepresentationError("from_halfspaces: body is lower-dimensional");
    }
    return P;
}

Polytope from_vertices_2d(const std::vector<Vec>& pts) {
    auto hull = convex_hull_2d(std::vector<Vec>(pts));
    if (hull.size() < 3) throw RepresentationError("from_vertices_2d: points are collinear");
    Polytope P;
    P.dim = 2;
    P.vertices = hull;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Vec& p = hull[i];
        const Vec& q = hull[(i + 1) % hull.size()];
        Vec n = {q[1] - p[1], p[0] - q[0]};  // outward for a counterclockwise ring
        double len = norm(n);
        n = scaled(n, 1.0 / len);
        P.halfspaces.push_back({n, dot(n, p)});
    }
    return P;
}

Polytope make_plank(const Vec& normal, double lo, double hi) {
    if (normal.size() < 1) throw DimensionError("make_plank: empty normal");
    require_finite(normal, "plank normal");
    if (norm(normal) < 1e-12) throw RepresentationError("make_plank: zero normal");
    if (!(lo < hi)) throw RepresentationError("make_plank: lo must be below hi");
    Polytope P;
    P.dim = static_cast<int>(normal.size());
    P.halfspaces.push_back({normal, hi});
    P.halfspaces.push_back({scaled(normal, -1.0), -lo});
    return P;
}

Polytope regular_polygon(int sides, double phase) {
    if (sides < 3) throw ArgumentError("regular_polygon: need at least 3 sides");
    std::vector<Vec> pts;
    const double pi = std::acos(-1.0);
    for (int j = 0; j < sides; ++j) {
        double t = phase + 2.0 * pi * j / sides;
        pts.push_back({std::cos(t), std::sin(t)});
    }
    return from_vertices_2d(pts);
}

Polytope box(int dim, double half_width) {
    if (dim < 1) throw DimensionError("box: dimension must be positive");
    if (!(half_width > 0.0)) throw ArgumentError("box: half_width must be positive");
    std::vector<Halfspace> hs;
    for (int k = 0; k < dim; ++k) {
        hs.push_back({axis(dim, k, 1.0), half_width});
        hs.push_back({axis(dim, k, -1.0), half_width});
    }
    if (dim == 2) return from_halfspaces(2, std::move(hs));
    Polytope P{dim, std::move(hs), {}};
    return P;
}

Polytope regular_simplex(int dim) {
    if (dim < 1) throw DimensionError("regular_simplex: dimension must be positive");
    // Vertex i is the centered, rescaled basis vector e_i of R^{dim+1},
    // expressed in an orthonormal basis of the sum-zero hyperplane.
    std::vector<Vec> verts(static_cast<std::size_t>(dim + 1), zeros(dim));
    double blow = std::sqrt((dim + 1.0) / dim);
    for (int k = 1; k <= dim; ++k) {
        double denom = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
        for (int i = 0; i < k; ++i) verts[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)] = blow * denom;
        verts[static_cast<std::size_t>(k)][static_cast<std::size_t>(k - 1)] = -blow * k * denom;
    }
    Polytope P;
    P.dim = dim;
    P.vertices = verts;
    for (const auto& v : verts) P.halfspaces.push_back({scaled(v, -1.0), 1.0 / dim});
    if (dim == 2) P.vertices = convex_hull_2d(std::move(P.vertices));
    return P;
}

bool is_bounded(const Polytope& P) { return probe_bounded(P); }

bool contains_point(const Polytope& P, const Vec& x, double tol) {
    check_dim(P, x, "contains_point");
    for (const auto& h : P.halfspaces)
        if (dot(h.a, x) > h.b + tol * std::max(1.0, std::abs(h.b))) return false;
    return true;
}

Polytope translate(const Polytope& P, const Vec& t) {
    check_dim(P, t, "translate");
    Polytope Q = P;
    for (auto& h : Q.halfspaces) h.b += dot(h.a, t);
    for (auto& v : Q.vertices) add_in_place(v, t);
    return Q;
}

Polytope scale(const Polytope& P, double s) {
    if (s == 0.0 || !std::isfinite(s)) throw ArgumentError("scale: factor must be finite and nonzero");
    Polytope Q;
    Q.dim = P.dim;
    for (const auto& h : P.halfspaces)
        Q.halfspaces.push_back({scaled(h.a, s < 0 ? -1.0 : 1.0), std::abs(s) * h.b});
    for (const auto& v : P.vertices) Q.vertices.push_back(scaled(v, s));
    if (s < 0 && P.dim == 2 && !Q.vertices.empty())
        Q.vertices = convex_hull_2d(std::move(Q.vertices));  // restore ring orientation
    return Q;
}

SupportEval support(const Polytope& P, const Vec& dir) {
    check_dim(P, dir, "support");
    require_finite(dir, "support direction");
    if (norm(dir) < 1e-12) throw ArgumentError("support: zero direction");
    if (!P.vertices.empty()) {
        SupportEval best{-kInf, {}};
        for (const auto& v : P.vertices) {
            double d = dot(dir, v);
            if (d > best.value) best = {d, v};
        }
        return best;
    }
    LinearProgram lp;
    lp.objective = dir;
    for (const auto& h : P.halfspaces) lp.constraints.push_back({h.a, Rel::Le, h.b});
    auto out = solve(lp);
    if (out.status == LpStatus::Unbounded)
        throw UnboundedError("support: body is unbounded in this direction");
    if (out.status == LpStatus::Infeasible)
        throw RepresentationError("support: halfspaces describe an empty set");
    return {out.value, out.x};
}

double width_in_direction(const Polytope& P, const Vec& dir) {
    return support(P, dir).value + support(P, scaled(dir, -1.0)).value;
}

WidthEval min_width_2d(const Polytope& P) {
    if (P.dim != 2) throw DimensionError("min_width_2d: 2-d bodies only");
    if (P.vertices.size() < 3) throw RepresentationError("min_width_2d: no vertex ring");
    WidthEval best{kInf, {}};
    const auto& vs = P.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Vec& p = vs[i];
        const Vec& q = vs[(i + 1) % vs.size()];
        Vec n = {q[1] - p[1], p[0] - q[0]};
        double len = norm(n);
        if (len < 1e-14) continue;
        n = scaled(n, 1.0 / len);
        double w = width_in_direction(P, n);
        if (w < best.width) best = {w, n};
    }
    return best;
}

HullResult origin_in_hull(const std::vector<Vec>& points, double tol) {
    if (points.empty()) throw ArgumentError("origin_in_hull: no points");
    int d = static_cast<int>(points.front().size());
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != d) throw DimensionError("origin_in_hull: mixed dimensions");
        require_finite(p, "hull point");
    }
    int n = static_cast<int>(points.size());

    LinearProgram lp;
    lp.objective = zeros(n);
    lp.bounds.assign(static_cast<std::size_t>(n), {0.0, kInf});
    for (int k = 0; k < d; ++k) {
        Vec row(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = points[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        lp.constraints.push_back({row, Rel::Eq, 0.0});
    }
    lp.constraints.push_back({Vec(static_cast<std::size_t>(n), 1.0), Rel::Eq, 1.0});

    auto out = solve(lp);
    HullResult res;
    if (out.status == LpStatus::Optimal) {
        res.inside = true;
        res.coefficients = out.x;
        Vec combo = zeros(d);
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            if (out.x[static_cast<std::size_t>(i)] < -1e-12)
                throw AuditError("origin_in_hull: negative convex weight");
            add_in_place(combo, scaled(points[static_cast<std::size_t>(i)], out.x[static_cast<std::size_t>(i)]));
            total += out.x[static_cast<std::size_t>(i)];
        }
        if (norm(combo) > 1e-8 || std::abs(total - 1.0) > 1e-8)
            throw AuditError("origin_in_hull: weights do not reproduce the origin");
        return res;
    }

    // Infeasible: the certificate's equality multipliers give the separator.
    Vec s(out.dual.begin(), out.dual.begin() + d);
    double len = norm(s);
    if (len < 1e-14) throw AuditError("origin_in_hull: degenerate certificate");
    s = scaled(s, 1.0 / len);
    for (const auto& p : points)
        if (dot(s, p) < -tol * std::max(1.0, norm(p)))
            throw AuditError("origin_in_hull: certificate fails to separate");
    res.inside = false;
    res.separator = s;
    return res;
}

std::vector<Vec> minkowski_sum_vertices(const std::vector<std::vector<Vec>>& point_sets) {
    if (point_sets.empty()) throw ArgumentError("minkowski_sum_vertices: no summands");
    std::vector<Vec> acc = {zeros(2)};
    for (const auto& set : point_sets) {
        if (set.empty()) throw ArgumentError("minkowski_sum_vertices: empty summand");
        std::vector<Vec> next;
        for (const auto& p : acc)
            for (const auto& q : set) {
                if (q.size() != 2) throw DimensionError("minkowski_sum_vertices: 2-d points only");
                next.push_back(add(p, q));
            }
        acc = convex_hull_2d(std::move(next));
    }
    return acc;
}

}  // namespace plankcover
