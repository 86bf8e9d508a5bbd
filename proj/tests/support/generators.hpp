#pragma once

// Randomized instance builders shared by the unit and acceptance suites.
// Everything is driven by an explicit seed so failures reproduce exactly.

#include <algorithm>
#include <cmath>
#include <random>

#include "plankcover/cover.hpp"
#include "plankcover/geom.hpp"
#include "plankcover/lp.hpp"
#include "plankcover/select.hpp"
#include "plankcover/types.hpp"

namespace testgen {

using Rng = std::mt19937_64;

inline double uniform(Rng& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline int uniform_int(Rng& g, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline plankcover::Vec uniform_vec(Rng& g, int d, double lo, double hi) {
    plankcover::Vec v(static_cast<std::size_t>(d));
    for (double& x : v) x = uniform(g, lo, hi);
    return v;
}

// Feasible and bounded by construction: a box of per-coordinate rows around a
// known interior point, plus a few random cuts kept slack at that point. All
// rows are Le and all variables free, so the dual pairing is just y^T b.
inline plankcover::LinearProgram random_boxed_lp(Rng& g, int min_vars = 2, int max_vars = 6) {
    using namespace plankcover;
    int n = uniform_int(g, min_vars, max_vars);
    Vec x0 = uniform_vec(g, n, -1.0, 1.0);
    LinearProgram lp;
    lp.objective = uniform_vec(g, n, -1.0, 1.0);
    for (int i = 0; i < n; ++i) {
        Vec up = zeros(n), dn = zeros(n);
        up[static_cast<std::size_t>(i)] = 1.0;
        dn[static_cast<std::size_t>(i)] = -1.0;
        lp.constraints.push_back({up, Rel::Le, x0[static_cast<std::size_t>(i)] + uniform(g, 0.2, 2.0)});
        lp.constraints.push_back({dn, Rel::Le, -x0[static_cast<std::size_t>(i)] + uniform(g, 0.2, 2.0)});
    }
    int extra = uniform_int(g, 0, 4);
    for (int k = 0; k < extra; ++k) {
        Vec a = uniform_vec(g, n, -1.0, 1.0);
        lp.constraints.push_back({a, Rel::Le, dot(a, x0) + uniform(g, 0.1, 1.5)});
    }
    return lp;
}

// Classes built so the zero pair is a positive combination by construction:
// the last element cancels the weighted sum of the sampled ones.
inline plankcover::SelectionInstance random_selection_instance(Rng& g, int max_classes,
                                                               int max_class_size, int min_dim,
                                                               int max_dim) {
    using namespace plankcover;
    int n = uniform_int(g, 1, max_classes);
    int d = uniform_int(g, min_dim, max_dim);
    SelectionInstance inst;
    for (int i = 0; i < n; ++i) {
        int s = uniform_int(g, 1, max_class_size);
        std::vector<PairedVector> cls;
        Vec bal_u = zeros(d), bal_v = zeros(d);
        for (int j = 0; j + 1 < s; ++j) {
            PairedVector w{uniform_vec(g, d, -1.0, 1.0), uniform_vec(g, d, -1.0, 1.0)};
            double beta = uniform(g, 0.2, 1.0);
            add_in_place(bal_u, scaled(w.u, beta));
            add_in_place(bal_v, scaled(w.v, beta));
            cls.push_back(std::move(w));
        }
        double beta_last = uniform(g, 0.2, 1.0);
        cls.push_back({scaled(bal_u, -1.0 / beta_last), scaled(bal_v, -1.0 / beta_last)});
        inst.classes.push_back(std::move(cls));
        inst.anchors.push_back({uniform_vec(g, d, -2.0, 2.0), uniform_vec(g, d, -2.0, 2.0)});
    }
    return inst;
}

// d+1 unit directions that keep the origin comfortably inside their hull:
// jittered copies of the regular-simplex vertex directions, re-normalized and
// resampled on the rare draw that unbalances them.
inline std::vector<plankcover::Vec> perturbed_simplex_directions(Rng& g, int d,
                                                                double amp = 0.05) {
    using namespace plankcover;
    auto base = regular_simplex(d).vertices;
    for (;;) {
        std::vector<Vec> dirs;
        for (const auto& v : base) {
            Vec u = add(v, uniform_vec(g, d, -amp, amp));
            dirs.push_back(scaled(u, 1.0 / norm(u)));
        }
        if (origin_in_hull(dirs).inside) return dirs;
    }
}

// Convex hull of random points padded with four axis spikes, so the origin is
// always interior and the LP-facing code sees irregular facet data.
inline plankcover::Polytope random_body_2d(Rng& g) {
    using namespace plankcover;
    std::vector<Vec> pts;
    double r0 = uniform(g, 0.3, 0.8);
    pts.push_back({r0, 0.0});
    pts.push_back({-r0, 0.0});
    pts.push_back({0.0, r0});
    pts.push_back({0.0, -r0});
    int extra = uniform_int(g, 3, 9);
    for (int i = 0; i < extra; ++i) {
        double ang = uniform(g, 0.0, 6.283185307179586);
        double rad = uniform(g, 0.4, 2.0);
        pts.push_back({rad * std::cos(ang), rad * std::sin(ang)});
    }
    return from_vertices_2d(pts);
}

// Slabs across a 64-gon whose normals sit on polygon vertices, so every
// contact pair collapses to the aligned form the witness construction wants.
// The relative widths are drawn to hit `target_sum` exactly with no slab
// thinner than 0.05.
inline plankcover::CoveringInstance random_vertex_plank_cover(Rng& g, double target_sum) {
    using namespace plankcover;
    CoveringInstance inst;
    inst.body = regular_polygon(64);
    int most = static_cast<int>(target_sum / 0.05);
    int k = uniform_int(g, 2, std::min(6, most));
    std::vector<double> rel(static_cast<std::size_t>(k));
    for (;;) {
        double tot = 0.0;
        for (double& r : rel) {
            r = uniform(g, 0.2, 1.0);
            tot += r;
        }
        bool wide_enough = true;
        for (double& r : rel) {
            r *= target_sum / tot;
            if (r < 0.05) wide_enough = false;
        }
        if (wide_enough) break;
    }
    for (int i = 0; i < k; ++i) {
        Vec n = inst.body.vertices[static_cast<std::size_t>(uniform_int(g, 0, 63))];
        double c = uniform(g, -0.3, 0.3);
        CoveringPiece piece;
        if (uniform_int(g, 0, 1) == 0) {
            piece.shape = make_plank(n, c - rel[static_cast<std::size_t>(i)],
                                     c + rel[static_cast<std::size_t>(i)]);
            piece.shift = zeros(2);
        } else {
            piece.shape = make_plank(n, -rel[static_cast<std::size_t>(i)],
                                     rel[static_cast<std::size_t>(i)]);
            piece.shift = scaled(n, c);
        }
        inst.pieces.push_back(std::move(piece));
    }
    return inst;
}

}  // namespace testgen
