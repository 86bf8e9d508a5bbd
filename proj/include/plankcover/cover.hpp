#pragma once

#include <optional>
#include <vector>

#include "plankcover/contact.hpp"
#include "plankcover/geom.hpp"
#include "plankcover/select.hpp"
#include "plankcover/types.hpp"

namespace plankcover {

// B-relative inradius: the largest scale at which a translate of lambda * B
// fits inside C.
double relative_inradius(const Polytope& C, const Polytope& B);

// Width of a slab divided by the width of B in the slab's normal direction.
// Coincides with the relative inradius for slabs; only accepts bodies made of
// exactly two antiparallel halfspaces.
double relative_width(const Polytope& plank, const Polytope& B);

// One claimed covering piece: `shape` in its own frame, placed at
// shape + shift. `anchor`, when present, re-centers the contact pairs (given
// in the frame where the inscribed copy of lambda_i * B sits at the origin);
// leave it empty unless the pairs need a different base point to become
// symmetric.
struct CoveringPiece {
    Polytope shape;
    Vec shift;
    std::optional<Vec> anchor;
};

struct CoveringInstance {
    Polytope body;  // bounded, with the origin in its interior
    std::vector<CoveringPiece> pieces;
};

// Output of the refutation: a point of the body missed by every placed piece,
// together with the numbers that certify it.
struct WitnessReport {
    double scale_sum = 0.0;  // sum of the piece inradii relative to the body
    double epsilon = 0.0;    // inflation used; (1 + epsilon) * scale_sum < 1
    Vec witness;
    double in_body_margin = 0.0;  // min facet slack of the body at the witness
    Vec piece_margins;            // slack past each piece's violated facet, all > 0
    std::vector<int> leaned_facets;  // which facet of each piece is violated
    std::vector<int> chosen;         // selected contact pair per piece
    double symmetry_defect = 0.0;
    Vec piece_scales;
    std::vector<Vec> piece_centers;  // inscribed centers, piece frame
};

// Builds the uncovered point for a family of pieces whose combined relative
// inradius is below 1:
//   1. inscribe lambda_i * B into each piece and extract its contact pairs;
//   2. refuse (RefusalError) when sum lambda_i >= 1;
//   3. rewrite parallel pairs into (u, u) form and insist the cross-piece
//      exchange condition <u_i, v_j> = <u_j, v_i> holds up to 1e-8;
//   4. inflate the pairs by 1 + epsilon, run the selector with anchors
//      (2 x_k, 0), and read the witness off the selected total.
// The returned margins are recomputed from raw halfspace data, not from the
// selector's bookkeeping.
WitnessReport construct_witness(const CoveringInstance& inst,
                                std::optional<double> epsilon_override = {});

// Grid sweep: walks an axis-aligned lattice over the body's bounding box and
// counts lattice points covered by the placed pieces. `probe`, when given, is
// classified the same way (the usual probe is a witness from above). Sampling
// evidence only; a miss on the grid proves nothing.
struct CoverSample {
    int grid_per_axis = 0;
    long total_in_body = 0;
    long covered = 0;
    std::vector<Vec> uncovered;  // first few misses, scan order
    bool probe_in_body = false;
    bool probe_covered = false;
};
CoverSample verify_cover_sample(const CoveringInstance& inst, int grid_per_axis,
                                const std::optional<Vec>& probe = {},
                                double membership_tol = 1e-9);

// Sumset refutation. Each piece carries a menu of outer directions; the menu
// of each piece must hold the origin in its convex hull, and the piece must
// contain the origin in its interior. The witness is a sum of projection
// vectors (one per piece, the projection of 0 onto the supporting hyperplane
// in the chosen direction) that no placed piece holds in its interior. Unlike
// construct_witness, the margins here may legitimately be zero: `grazing`
// marks pieces whose boundary passes through the witness.
struct SumsetPiece {
    Polytope shape;
    Vec shift;
    std::vector<Vec> directions;
};

struct SumsetReport {
    std::vector<std::vector<Vec>> projection_menus;
    std::vector<int> chosen;
    Vec witness;
    Vec piece_margins;  // >= -1e-9, in support-function units of each direction
    std::vector<bool> grazing;
};
SumsetReport sumset_witness(const std::vector<SumsetPiece>& pieces);

// Negative-homothet demo: pieces -lambda_i * T placed at the given shifts
// against the regular simplex T. Refuses when sum lambda_i >= dim, since the
// witness lives in (sum lambda_i / dim) * T. Also recomputes the classic fact
// that the projections of the center onto T's facets span -(1/dim) * T, as a
// self-check on the projection code.
struct SimplexDemo {
    Polytope simplex;
    SumsetReport report;
    double scale_sum = 0.0;
    double containment_scale = 0.0;  // scale_sum / dim
};
SimplexDemo simplex_negative_homothet(int dim, const Vec& lambdas, const std::vector<Vec>& shifts);

}  // namespace plankcover
