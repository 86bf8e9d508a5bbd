#pragma once

#include <vector>

#include "plankcover/types.hpp"

namespace plankcover {

// Halfspace {x : <a,x> <= b}. The intersection of a body's halfspaces is the
// body; vertices, when present, are derived data.
struct Halfspace {
    Vec a;
    double b = 0.0;
};

struct Polytope {
    int dim = 0;
    std::vector<Halfspace> halfspaces;
    // Populated for bounded 2-d bodies and for factories that know their
    // vertices in closed form. Order: counterclockwise from the
    // lexicographically smallest vertex. Empty for planks.
    std::vector<Vec> vertices;
};

// Factories. All of them reject empty and malformed inputs rather than
// producing a degenerate body.
Polytope from_halfspaces(int dim, std::vector<Halfspace> hs);
Polytope from_vertices_2d(const std::vector<Vec>& pts);
// Slab lo <= <normal,x> <= hi. Unbounded, carries no vertices.
Polytope make_plank(const Vec& normal, double lo, double hi);
// Circumradius 1, vertex angles phase + 2*pi*j/sides.
Polytope regular_polygon(int sides, double phase = 0.0);
Polytope box(int dim, double half_width);
// Centroid at the origin, circumradius 1, pairwise vertex dot -1/dim.
// Inradius 1/dim.
Polytope regular_simplex(int dim);

bool is_bounded(const Polytope& P);
bool contains_point(const Polytope& P, const Vec& x, double tol = kDefaultTol);
Polytope translate(const Polytope& P, const Vec& t);
// Signed homothety about the origin; s < 0 reflects.
Polytope scale(const Polytope& P, double s);

struct SupportEval {
    double value = 0.0;  // h_P(dir) = max <dir,x> over P
    Vec point;           // a maximizer, always a vertex
};
// Scans vertices when available (first maximizer wins), otherwise solves the
// LP over the halfspaces. Throws UnboundedError if h_P(dir) is infinite.
SupportEval support(const Polytope& P, const Vec& dir);

double width_in_direction(const Polytope& P, const Vec& dir);

struct WidthEval {
    double width = 0.0;
    Vec normal;  // unit direction attaining it
};
// Minimal width of a bounded 2-d body; the minimum is attained at an edge
// normal, so this is a sweep over edges.
WidthEval min_width_2d(const Polytope& P);

struct HullResult {
    bool inside = false;
    Vec coefficients;  // convex weights on the points when inside
    Vec separator;     // unit s with <s,p_i> > 0 for all i when not
};
// Decides 0 in conv(points) by LP feasibility; the separator comes from the
// infeasibility certificate and is re-checked before being returned.
HullResult origin_in_hull(const std::vector<Vec>& points, double tol = kDefaultTol);

// Counterclockwise hull from the lexicographically smallest point; collinear
// interior points are dropped. Inputs of size < 3 come back sorted and
// deduplicated.
std::vector<Vec> convex_hull_2d(std::vector<Vec> pts);

// Hull vertices of point-set sums: hull(A_1 + ... + A_m), folded pairwise.
std::vector<Vec> minkowski_sum_vertices(const std::vector<std::vector<Vec>>& point_sets);

}  // namespace plankcover
