#pragma once

#include <limits>
#include <vector>

#include "plankcover/types.hpp"

namespace plankcover {

enum class Rel { Le, Eq, Ge };

struct LinearConstraint {
    Vec row;
    Rel rel = Rel::Le;
    double rhs = 0.0;
};

struct VarBound {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
};

// maximize <objective, x> subject to the constraints and per-variable bounds.
// An empty bounds list means every variable is free.
struct LinearProgram {
    Vec objective;
    std::vector<LinearConstraint> constraints;
    std::vector<VarBound> bounds;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

// When status == Optimal, dual holds one multiplier per constraint, signed so
// that stationarity reads c = A^T y + (bound multipliers): y >= 0 for Le rows,
// y <= 0 for Ge rows, free for Eq rows. When status == Infeasible, dual holds
// a Farkas certificate y with <y, a_j> combining to a direction that strictly
// separates (see origin_in_hull for the intended use).
struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    Vec x;
    double value = 0.0;
    Vec dual;
    std::vector<int> basis;
};

// Dense primal simplex, two-phase, Bland's pivoting rule throughout.
// Design envelope: at most 64 variables and 512 constraints. Equality rows are
// handled as two opposing inequalities. On Optimal the outcome is audited:
// primal, dual and complementary-slackness residuals must all be <= 1e-8, else
// an AuditError is thrown. Deterministic: identical inputs give identical
// outcomes, including the final basis.
LpOutcome solve(const LinearProgram& lp, bool verbose = false);

}  // namespace plankcover
