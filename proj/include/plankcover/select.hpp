#pragma once

#include <vector>

#include "plankcover/types.hpp"

namespace plankcover {

// One selection class: a finite menu of (u, v) pairs that balances around the
// zero pair, i.e. (0,0) lies in its convex hull. The selector picks exactly
// one pair from each class.
//
// Each class k also carries an anchor (x_k, y_k). The selected pairs w_i and
// the resulting total w = sum w_i satisfy, for every k,
//
//     <u - x_k, v_k> + <v - y_k, u_k>  >=  2 <u_k, v_k>,
//
// which says: measured by the flipped pair (v_k, u_k), the total clears the
// anchor of class k by at least the pair's own self-score. That inequality is
// what the downstream covering constructions cash in.
struct Anchor {
    Vec x;
    Vec y;
};

struct SelectionInstance {
    std::vector<std::vector<PairedVector>> classes;
    std::vector<Anchor> anchors;  // one per class
};

struct SelectionResult {
    std::vector<int> chosen;  // index into each class
    PairedVector total;       // sum of the chosen pairs
    double objective;
    Vec margins;  // per-class slack in the guarantee above; audited nonnegative
    int sweeps;   // coordinate-ascent passes until no swap improved
};

// The functional being maximized over one choice per class:
//
//   sum_{i != j} <u_i, v_j>  -  sum_i <x_i, v_i>  -  sum_j <u_j, y_j>.
//
// Evaluated through the rearrangement <sum u, sum v> - sum_i <u_i, v_i> so a
// full evaluation is linear in the number of classes.
double selection_objective(const SelectionInstance& inst, const std::vector<int>& chosen);

// Greedy coordinate ascent from the all-zeros choice: sweep the classes in
// index order, within a class take the best strict improvement (ties to the
// lowest index), stop after a full sweep with no change. Any such local
// maximum already carries the guarantee; margins are checked before returning
// and a negative one raises AuditError.
SelectionResult select_colourful(const SelectionInstance& inst);

// Recomputes the guarantee margins of a choice by direct expansion, sharing no
// code with the margin bookkeeping inside select_colourful.
Vec verify_guarantee(const SelectionInstance& inst, const std::vector<int>& chosen);

// Sign selection against slabs: given unit directions u_k, widths w_k > 0 and
// levels m_k, flips signs so that u = sum eps_i w_i u_i lands at distance at
// least w_k from every level, |<u, u_k> - m_k| >= w_k.
struct BangResult {
    std::vector<int> signs;  // +1 or -1 per direction
    Vec direction;           // the signed combination u
    Vec margins;             // |<u, u_k> - m_k| - w_k, audited nonnegative
};
BangResult select_bang(const std::vector<Vec>& directions, const Vec& widths, const Vec& levels);

// Direction selection against balls: pick one direction per menu so that
// u = sum r_i u_i clears every chosen ball, <u - o_k, u_k> >= r_k |u_k|^2.
// Each menu must balance around zero.
struct KadetsResult {
    std::vector<int> chosen;
    Vec point;    // the combination u
    Vec margins;  // <u - o_k, u_k> - r_k |u_k|^2, audited nonnegative
};
KadetsResult select_kadets(const std::vector<std::vector<Vec>>& direction_menus, const Vec& radii,
                           const std::vector<Vec>& centers);

}  // namespace plankcover
