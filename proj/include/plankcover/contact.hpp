#pragma once

#include <vector>

#include "plankcover/geom.hpp"
#include "plankcover/types.hpp"

namespace plankcover {

// Largest homothet lambda * B + center that fits inside C, found by the LP
//
//   max lambda  s.t.  <a_j, x> + lambda * h_B(a_j) <= b_j   per facet of C.
//
// C may be unbounded (a plank); B must have finite support values in every
// facet-normal direction of C or the inflation itself is unbounded.
struct FacetContact {
    int facet = 0;          // index into C.halfspaces
    double support_value;   // h_B(a_j)
    Vec support_point;      // where B attains it
    double slack;           // b_j minus the inflated row at the optimum
    double weight;          // LP multiplier; positive only on tight facets
};

struct InscribedHomothet {
    double lambda = 0.0;
    Vec center;
    std::vector<FacetContact> facets;  // one per halfspace of C, in order
    std::vector<int> tight;            // facets with (near) zero slack
};

InscribedHomothet max_inscribed_homothet(const Polytope& C, const Polytope& B);

// The load-bearing part of an optimal inscription. Facet j with a positive
// multiplier contributes the pair
//
//   touch  = lambda * s_j   (contact point, in coordinates centered on the
//                            inscribed copy's center)
//   normal = a_j
//
// and the multipliers certify maximality: sum w_j a_j = 0 and
// sum w_j h_B(a_j) = 1. Requires the origin interior to B along the involved
// normals so every <touch, normal> is positive.
struct ContactPair {
    Vec touch;
    Vec normal;
    double weight;
    int facet;
};

struct ContactSystem {
    double lambda = 0.0;
    Vec center;
    std::vector<ContactPair> pairs;
};

ContactSystem extract_contact_pairs(const Polytope& C, const Polytope& B);

// Largest cross-menu asymmetry max |<u_i, v_j> - <u_j, v_i>| over pairs drawn
// from two distinct menus. The covering construction needs this to vanish
// across every menu pair it feeds to the selector.
double symmetric_condition_defect(const std::vector<std::vector<PairedVector>>& menus);

// True when every pair already has v == u to within tol (relative).
bool is_uu_form(const std::vector<PairedVector>& pairs, double tol = 1e-9);

// Rewrites contact pairs whose normal is a positive multiple of the touch
// point into exact (u, u) form, making the symmetric condition hold by
// construction. Throws PreconditionError on a pair where the two are not
// parallel, since rescaling would then change the geometry.
std::vector<PairedVector> align_to_uu(const std::vector<ContactPair>& pairs, double tol = 1e-9);

}  // namespace plankcover
