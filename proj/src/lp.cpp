#include "plankcover/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "plankcover/errors.hpp"

namespace plankcover {
namespace {

constexpr int kMaxVars = 64;
constexpr int kMaxConstraints = 512;
constexpr double kRcTol = 1e-9;
constexpr double kPivotTol = 1e-11;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxPivots = 200000;

// Internal rows are all "<=". Each remembers which original constraint it came
// from and with which sign, so primal duals and Farkas certificates can be
// mapped back. Rows with orig < 0 encode variable upper bounds.
struct RowOrigin {
    int orig = -1;
    double sign = 1.0;
};

// Internal columns are nonnegative. x_orig = sum of sign * x_col + offset.
struct ColOrigin {
    int var = -1;
    double sign = 1.0;
};

struct Tableau {
    int rows = 0;
    int cols = 0;  // structural + slack + artificial
    int n_struct = 0;
    int n_slack = 0;
    std::vector<std::vector<double>> a;
    Vec rhs;
    std::vector<int> basis;
    Vec zrow;
    double zval = 0.0;
    std::vector<char> active;  // artificials go inactive in phase 2

    int slack_col(int r) const { return n_struct + r; }
    bool is_artificial(int c) const { return c >= n_struct + n_slack; }
};

void recompute_objective(Tableau& t, const Vec& cost) {
    t.zrow.assign(static_cast<std::size_t>(t.cols), 0.0);
    t.zval = 0.0;
    for (int c = 0; c < t.cols; ++c) t.zrow[c] = -cost[c];
    for (int r = 0; r < t.rows; ++r) {
        double cb = cost[t.basis[r]];
        if (cb == 0.0) continue;
        for (int c = 0; c < t.cols; ++c) t.zrow[c] += cb * t.a[r][c];
        t.zval += cb * t.rhs[r];
    }
}

void pivot(Tableau& t, int prow, int pcol) {
    double piv = t.a[prow][pcol];
    double inv = 1.0 / piv;
    for (int c = 0; c < t.cols; ++c) t.a[prow][c] *= inv;
    t.rhs[prow] *= inv;
    t.a[prow][pcol] = 1.0;
    for (int r = 0; r < t.rows; ++r) {
        if (r == prow) continue;
        double f = t.a[r][pcol];
        if (f == 0.0) continue;
        for (int c = 0; c < t.cols; ++c) t.a[r][c] -= f * t.a[prow][c];
        t.a[r][pcol] = 0.0;
        t.rhs[r] -= f * t.rhs[prow];
        if (t.rhs[r] < 0.0 && t.rhs[r] > -kPivotTol) t.rhs[r] = 0.0;
    }
    double f = t.zrow[pcol];
    if (f != 0.0) {
        for (int c = 0; c < t.cols; ++c) t.zrow[c] -= f * t.a[prow][c];
        t.zrow[pcol] = 0.0;
        t.zval -= f * t.rhs[prow];
    }
    t.basis[prow] = pcol;
}

// Bland's rule: entering = lowest-index column with negative reduced cost,
// leaving = lowest basis index among minimal ratios. Returns Optimal or
// Unbounded; feasibility is the caller's concern.
LpStatus run_simplex(Tableau& t, int* pivots, bool verbose) {
    for (;;) {
        int enter = -1;
        for (int c = 0; c < t.cols; ++c) {
            if (!t.active[c]) continue;
            if (t.zrow[c] < -kRcTol) {
                enter = c;
                break;
            }
        }
        if (enter < 0) return LpStatus::Optimal;

        int leave = -1;
        double best_ratio = kInf;
        for (int r = 0; r < t.rows; ++r) {
            double coef = t.a[r][enter];
            if (coef <= kPivotTol) continue;
            double ratio = t.rhs[r] / coef;
            if (leave < 0 || ratio < best_ratio - kPivotTol) {
                best_ratio = ratio;
                leave = r;
            } else if (ratio <= best_ratio + kPivotTol && t.basis[r] < t.basis[leave]) {
                best_ratio = std::min(best_ratio, ratio);
                leave = r;
            }
        }
        if (leave < 0) return LpStatus::Unbounded;

        pivot(t, leave, enter);
        if (++*pivots > kMaxPivots)
            throw DegeneracyError("simplex: pivot limit exceeded (" +
                                  std::to_string(t.rows) + " rows, " +
                                  std::to_string(t.n_struct) + " structural columns)");
        if (verbose)
            std::fprintf(stderr, "lp: pivot %d enter=%d leave=%d z=%.17g\n", *pivots, enter,
                         t.basis[leave], t.zval);
    }
}

}  // namespace

LpOutcome solve(const LinearProgram& lp, bool verbose) {
    const int nv = static_cast<int>(lp.objective.size());
    const int nc = static_cast<int>(lp.constraints.size());
    if (nv < 1) throw ArgumentError("lp: no variables");
    if (nv > kMaxVars || nc > kMaxConstraints)
        throw CapacityError("lp: size exceeds design envelope (" + std::to_string(nv) + " vars, " +
                            std::to_string(nc) + " constraints)");
    if (!lp.bounds.empty() && static_cast<int>(lp.bounds.size()) != nv)
        throw ArgumentError("lp: bounds length mismatch");
    require_finite(lp.objective, "lp objective");
    for (const auto& con : lp.constraints) {
        if (static_cast<int>(con.row.size()) != nv) throw ArgumentError("lp: row length mismatch");
        require_finite(con.row, "lp row");
        if (!std::isfinite(con.rhs)) throw ArgumentError("lp: non-finite rhs");
    }

    auto bound_of = [&](int i) -> VarBound {
        return lp.bounds.empty() ? VarBound{} : lp.bounds[static_cast<std::size_t>(i)];
    };

    // Column mapping: shifted column for finite lower bounds, split pair for
    // free variables.
    std::vector<ColOrigin> col_origin;
    std::vector<double> col_offset_of_var(static_cast<std::size_t>(nv), 0.0);
    std::vector<int> var_first_col(static_cast<std::size_t>(nv), -1);
    std::vector<bool> var_split(static_cast<std::size_t>(nv), false);
    for (int i = 0; i < nv; ++i) {
        VarBound b = bound_of(i);
        if (b.lower > b.upper) {
            LpOutcome out;
            out.status = LpStatus::Infeasible;
            return out;
        }
        var_first_col[i] = static_cast<int>(col_origin.size());
        if (std::isfinite(b.lower)) {
            col_origin.push_back({i, 1.0});
            col_offset_of_var[i] = b.lower;
        } else {
            var_split[i] = true;
            col_origin.push_back({i, 1.0});
            col_origin.push_back({i, -1.0});
        }
    }
    const int n_struct = static_cast<int>(col_origin.size());

    // Internal rows: constraint copies first, then upper-bound rows.
    std::vector<RowOrigin> row_origin;
    std::vector<Vec> raw_rows;
    Vec raw_rhs;
    auto push_row = [&](const Vec& coef_by_var, double rhs, int orig, double sign) {
        Vec row(static_cast<std::size_t>(n_struct), 0.0);
        double adj = rhs;
        for (int i = 0; i < nv; ++i) {
            double c = coef_by_var[static_cast<std::size_t>(i)];
            if (c == 0.0) continue;
            int fc = var_first_col[i];
            row[static_cast<std::size_t>(fc)] += c;
            if (var_split[i])
                row[static_cast<std::size_t>(fc + 1)] -= c;
            else
                adj -= c * col_offset_of_var[i];
        }
        raw_rows.push_back(std::move(row));
        raw_rhs.push_back(adj);
        row_origin.push_back({orig, sign});
    };
    for (int j = 0; j < nc; ++j) {
        const auto& con = lp.constraints[static_cast<std::size_t>(j)];
        if (con.rel == Rel::Le || con.rel == Rel::Eq) push_row(con.row, con.rhs, j, 1.0);
        if (con.rel == Rel::Ge || con.rel == Rel::Eq)
            push_row(scaled(con.row, -1.0), -con.rhs, j, -1.0);
    }
    for (int i = 0; i < nv; ++i) {
        VarBound b = bound_of(i);
        if (std::isfinite(b.upper)) {
            Vec e = zeros(nv);
            e[static_cast<std::size_t>(i)] = 1.0;
            push_row(e, b.upper, -1 - i, 1.0);
        }
    }
    const int m = static_cast<int>(raw_rows.size());

    // Assemble tableau. Rows with negative rhs are negated and given an
    // artificial basic variable for phase 1.
    std::vector<int> negated(static_cast<std::size_t>(m), 0);
    std::vector<int> art_of_row(static_cast<std::size_t>(m), -1);
    int n_art = 0;
    for (int r = 0; r < m; ++r)
        if (raw_rhs[static_cast<std::size_t>(r)] < 0.0) {
            negated[static_cast<std::size_t>(r)] = 1;
            art_of_row[static_cast<std::size_t>(r)] = n_art++;
        }

    Tableau t;
    t.rows = m;
    t.n_struct = n_struct;
    t.n_slack = m;
    t.cols = n_struct + m + n_art;
    t.a.assign(static_cast<std::size_t>(m), Vec(static_cast<std::size_t>(t.cols), 0.0));
    t.rhs.assign(static_cast<std::size_t>(m), 0.0);
    t.basis.assign(static_cast<std::size_t>(m), -1);
    t.active.assign(static_cast<std::size_t>(t.cols), 1);
    for (int r = 0; r < m; ++r) {
        double sg = negated[static_cast<std::size_t>(r)] ? -1.0 : 1.0;
        for (int c = 0; c < n_struct; ++c)
            t.a[r][static_cast<std::size_t>(c)] = sg * raw_rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        t.a[r][static_cast<std::size_t>(t.slack_col(r))] = sg;
        t.rhs[r] = sg * raw_rhs[static_cast<std::size_t>(r)];
        if (art_of_row[static_cast<std::size_t>(r)] >= 0) {
            int ac = n_struct + m + art_of_row[static_cast<std::size_t>(r)];
            t.a[r][static_cast<std::size_t>(ac)] = 1.0;
            t.basis[r] = ac;
        } else {
            t.basis[r] = t.slack_col(r);
        }
    }

    int pivots = 0;
    double rhs_scale = 1.0;
    for (double b : t.rhs) rhs_scale = std::max(rhs_scale, std::abs(b));

    if (n_art > 0) {
        Vec phase1(static_cast<std::size_t>(t.cols), 0.0);
        for (int c = n_struct + m; c < t.cols; ++c) phase1[static_cast<std::size_t>(c)] = -1.0;
        recompute_objective(t, phase1);
        LpStatus st = run_simplex(t, &pivots, verbose);
        (void)st;  // phase 1 objective is bounded above by 0
        if (t.zval < -1e-9 * rhs_scale) {
            // Farkas certificate from the phase-1 objective row over the slack
            // columns, mapped back per original constraint.
            LpOutcome out;
            out.status = LpStatus::Infeasible;
            out.dual.assign(static_cast<std::size_t>(nc), 0.0);
            for (int r = 0; r < m; ++r) {
                int orig = row_origin[static_cast<std::size_t>(r)].orig;
                if (orig < 0) continue;
                double y = t.zrow[static_cast<std::size_t>(t.slack_col(r))];
                out.dual[static_cast<std::size_t>(orig)] +=
                    row_origin[static_cast<std::size_t>(r)].sign * y;
            }
            return out;
        }
        // Drive leftover artificials out of the basis where possible.
        for (int r = 0; r < m; ++r) {
            if (!t.is_artificial(t.basis[r])) continue;
            int pcol = -1;
            for (int c = 0; c < n_struct + m; ++c)
                if (std::abs(t.a[r][static_cast<std::size_t>(c)]) > kPivotTol) {
                    pcol = c;
                    break;
                }
            if (pcol >= 0) pivot(t, r, pcol);
        }
        for (int c = n_struct + m; c < t.cols; ++c) t.active[static_cast<std::size_t>(c)] = 0;
    }

    Vec phase2(static_cast<std::size_t>(t.cols), 0.0);
    for (int c = 0; c < n_struct; ++c) {
        const ColOrigin& co = col_origin[static_cast<std::size_t>(c)];
        phase2[static_cast<std::size_t>(c)] = co.sign * lp.objective[static_cast<std::size_t>(co.var)];
    }
    recompute_objective(t, phase2);
    LpStatus st = run_simplex(t, &pivots, verbose);
    if (st == LpStatus::Unbounded) {
        LpOutcome out;
        out.status = LpStatus::Unbounded;
        return out;
    }

    LpOutcome out;
    out.status = LpStatus::Optimal;
    out.x.assign(static_cast<std::size_t>(nv), 0.0);
    for (int i = 0; i < nv; ++i) out.x[static_cast<std::size_t>(i)] = col_offset_of_var[static_cast<std::size_t>(i)];
    for (int r = 0; r < m; ++r) {
        int c = t.basis[r];
        if (c >= n_struct) continue;
        const ColOrigin& co = col_origin[static_cast<std::size_t>(c)];
        out.x[static_cast<std::size_t>(co.var)] += co.sign * t.rhs[static_cast<std::size_t>(r)];
    }
    out.value = dot(lp.objective, out.x);
    out.basis = t.basis;
    std::sort(out.basis.begin(), out.basis.end());

    out.dual.assign(static_cast<std::size_t>(nc), 0.0);
    for (int r = 0; r < m; ++r) {
        int orig = row_origin[static_cast<std::size_t>(r)].orig;
        if (orig < 0) continue;
        double y = t.zrow[static_cast<std::size_t>(t.slack_col(r))];
        if (std::abs(y) < 1e-13) y = 0.0;
        out.dual[static_cast<std::size_t>(orig)] += row_origin[static_cast<std::size_t>(r)].sign * y;
    }

    // Post-solve audit: primal feasibility, stationarity with sign conditions,
    // complementary slackness. A failure here is a solver bug, not bad input.
    const double tol = 1e-8;
    for (int j = 0; j < nc; ++j) {
        const auto& con = lp.constraints[static_cast<std::size_t>(j)];
        double ax = dot(con.row, out.x);
        double scale = std::max(1.0, std::abs(con.rhs));
        double viol = 0.0;
        if (con.rel == Rel::Le) viol = ax - con.rhs;
        else if (con.rel == Rel::Ge) viol = con.rhs - ax;
        else viol = std::abs(ax - con.rhs);
        if (viol > tol * scale)
            throw AuditError("lp: primal residual " + std::to_string(viol) + " at constraint " +
                             std::to_string(j));
        double y = out.dual[static_cast<std::size_t>(j)];
        if (con.rel == Rel::Le && y < -tol) throw AuditError("lp: dual sign at Le constraint");
        if (con.rel == Rel::Ge && y > tol) throw AuditError("lp: dual sign at Ge constraint");
        if (con.rel != Rel::Eq && std::abs(y * (con.rhs - ax)) > tol * std::max(1.0, std::abs(y)) * scale)
            throw AuditError("lp: complementary slackness residual at constraint " + std::to_string(j));
    }
    Vec r_station = lp.objective;
    for (int j = 0; j < nc; ++j) {
        double y = out.dual[static_cast<std::size_t>(j)];
        if (y == 0.0) continue;
        const auto& con = lp.constraints[static_cast<std::size_t>(j)];
        for (int i = 0; i < nv; ++i)
            r_station[static_cast<std::size_t>(i)] -= y * con.row[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < nv; ++i) {
        VarBound b = bound_of(i);
        double mu = r_station[static_cast<std::size_t>(i)];
        double xi = out.x[static_cast<std::size_t>(i)];
        double scale = std::max(1.0, std::abs(mu));
        bool at_lower = std::isfinite(b.lower) && xi <= b.lower + 1e-9 * std::max(1.0, std::abs(b.lower));
        bool at_upper = std::isfinite(b.upper) && xi >= b.upper - 1e-9 * std::max(1.0, std::abs(b.upper));
        if (!at_lower && !at_upper && std::abs(mu) > tol * scale)
            throw AuditError("lp: stationarity residual " + std::to_string(mu) + " at variable " +
                             std::to_string(i));
        if (at_lower && !at_upper && mu > tol * scale)
            throw AuditError("lp: bound multiplier sign at lower bound, variable " + std::to_string(i));
        if (at_upper && !at_lower && mu < -tol * scale)
            throw AuditError("lp: bound multiplier sign at upper bound, variable " + std::to_string(i));
    }

    if (verbose)
        std::fprintf(stderr, "lp: optimal value=%.17g pivots=%d rows=%d cols=%d\n", out.value,
                     pivots, t.rows, t.cols);
    return out;
}

}  // namespace plankcover
