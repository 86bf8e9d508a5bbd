#include "plankcover/select.hpp"

#include <cmath>
#include <string>

#include "plankcover/errors.hpp"
#include "plankcover/geom.hpp"

namespace plankcover {
namespace {

constexpr double kMarginTol = 1e-9;
constexpr int kMaxSweeps = 10000;

int instance_dim(const SelectionInstance& inst) {
    if (inst.classes.empty()) throw ArgumentError("selection: no classes");
    if (inst.anchors.size() != inst.classes.size())
        throw ArgumentError("selection: need exactly one anchor per class");
    if (inst.classes.front().empty()) throw ArgumentError("selection: empty class");
    int d = static_cast<int>(inst.classes.front().front().u.size());
    if (d < 1) throw DimensionError("selection: zero-dimensional pairs");
    for (const auto& cls : inst.classes) {
        if (cls.empty()) throw ArgumentError("selection: empty class");
        for (const auto& w : cls) {
            if (static_cast<int>(w.u.size()) != d || static_cast<int>(w.v.size()) != d)
                throw DimensionError("selection: mixed pair dimensions");
            require_finite(w.u, "class element");
            require_finite(w.v, "class element");
        }
    }
    for (const auto& a : inst.anchors) {
        if (static_cast<int>(a.x.size()) != d || static_cast<int>(a.y.size()) != d)
            throw DimensionError("selection: anchor of wrong dimension");
        require_finite(a.x, "anchor");
        require_finite(a.y, "anchor");
    }
    return d;
}

void require_balanced_classes(const SelectionInstance& inst, int d) {
    for (std::size_t i = 0; i < inst.classes.size(); ++i) {
        std::vector<Vec> flat;
        for (const auto& w : inst.classes[i]) {
            Vec p(static_cast<std::size_t>(2 * d));
            for (int t = 0; t < d; ++t) {
                p[static_cast<std::size_t>(t)] = w.u[static_cast<std::size_t>(t)];
                p[static_cast<std::size_t>(d + t)] = w.v[static_cast<std::size_t>(t)];
            }
            flat.push_back(std::move(p));
        }
        if (!origin_in_hull(flat).inside)
            throw PreconditionError("selection: class " + std::to_string(i) +
                                    " does not balance around the zero pair");
    }
}

PairedVector chosen_total(const SelectionInstance& inst, const std::vector<int>& chosen, int d) {
    PairedVector t{zeros(d), zeros(d)};
    for (std::size_t i = 0; i < inst.classes.size(); ++i) {
        const auto& w = inst.classes[i][static_cast<std::size_t>(chosen[i])];
        add_in_place(t.u, w.u);
        add_in_place(t.v, w.v);
    }
    return t;
}

}  // namespace

double selection_objective(const SelectionInstance& inst, const std::vector<int>& chosen) {
    int d = instance_dim(inst);
    if (chosen.size() != inst.classes.size())
        throw ArgumentError("selection: choice vector of wrong length");
    Vec su = zeros(d), sv = zeros(d);
    double self_terms = 0.0, anchor_terms = 0.0;
    for (std::size_t i = 0; i < inst.classes.size(); ++i) {
        int j = chosen[i];
        if (j < 0 || j >= static_cast<int>(inst.classes[i].size()))
            throw ArgumentError("selection: choice index out of range");
        const auto& w = inst.classes[i][static_cast<std::size_t>(j)];
        add_in_place(su, w.u);
        add_in_place(sv, w.v);
        self_terms += dot(w.u, w.v);
        anchor_terms += dot(inst.anchors[i].x, w.v) + dot(w.u, inst.anchors[i].y);
    }
    return dot(su, sv) - self_terms - anchor_terms;
}

SelectionResult select_colourful(const SelectionInstance& inst) {
    int d = instance_dim(inst);
    require_balanced_classes(inst, d);
    const std::size_t n = inst.classes.size();

    std::vector<int> chosen(n, 0);
    double value = selection_objective(inst, chosen);
    int sweeps = 0;
    for (bool improved = true; improved;) {
        improved = false;
        if (++sweeps > kMaxSweeps)
            throw DegeneracyError("selection: ascent failed to stabilize");
        for (std::size_t i = 0; i < n; ++i) {
            int best = chosen[i];
            double best_value = value;
            int keep = chosen[i];
            for (int j = 0; j < static_cast<int>(inst.classes[i].size()); ++j) {
                if (j == keep) continue;
                chosen[i] = j;
                double cand = selection_objective(inst, chosen);
                if (cand > best_value) {
                    best_value = cand;
                    best = j;
                }
            }
            chosen[i] = best;
            if (best != keep) {
                value = best_value;
                improved = true;
            }
        }
    }

    SelectionResult res;
    res.chosen = chosen;
    res.total = chosen_total(inst, chosen, d);
    res.objective = value;
    res.sweeps = sweeps;
    res.margins.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& wk = inst.classes[k][static_cast<std::size_t>(chosen[k])];
        PairedVector z{inst.anchors[k].x, inst.anchors[k].y};
        res.margins[k] = dot(sub(res.total, z), hat(wk)) - dot(wk, hat(wk));
        if (!(res.margins[k] >= -kMarginTol))
            throw AuditError("selection: guarantee margin " + std::to_string(res.margins[k]) +
                             " at class " + std::to_string(k));
    }
    return res;
}

Vec verify_guarantee(const SelectionInstance& inst, const std::vector<int>& chosen) {
    int d = instance_dim(inst);
    if (chosen.size() != inst.classes.size())
        throw ArgumentError("selection: choice vector of wrong length");
    PairedVector total = chosen_total(inst, chosen, d);
    Vec margins(inst.classes.size());
    for (std::size_t k = 0; k < inst.classes.size(); ++k) {
        const auto& wk = inst.classes[k][static_cast<std::size_t>(chosen[k])];
        const auto& a = inst.anchors[k];
        double m = 0.0;
        for (int t = 0; t < d; ++t) {
            m += (total.u[static_cast<std::size_t>(t)] - a.x[static_cast<std::size_t>(t)]) *
                 wk.v[static_cast<std::size_t>(t)];
            m += (total.v[static_cast<std::size_t>(t)] - a.y[static_cast<std::size_t>(t)]) *
                 wk.u[static_cast<std::size_t>(t)];
        }
        for (int t = 0; t < d; ++t)
            m -= 2.0 * wk.u[static_cast<std::size_t>(t)] * wk.v[static_cast<std::size_t>(t)];
        margins[k] = m;
    }
    return margins;
}

BangResult select_bang(const std::vector<Vec>& directions, const Vec& widths, const Vec& levels) {
    const std::size_t n = directions.size();
    if (n == 0) throw ArgumentError("bang: no directions");
    if (widths.size() != n || levels.size() != n)
        throw ArgumentError("bang: directions, widths and levels must align");
    int d = static_cast<int>(directions.front().size());
    for (const auto& u : directions) {
        if (static_cast<int>(u.size()) != d) throw DimensionError("bang: mixed dimensions");
        require_finite(u, "bang direction");
        if (std::abs(norm(u) - 1.0) > 1e-9) throw ArgumentError("bang: directions must be unit");
    }
    for (double w : widths)
        if (!(w > 0.0) || !std::isfinite(w)) throw ArgumentError("bang: widths must be positive");
    require_finite(levels, "bang levels");

    SelectionInstance inst;
    for (std::size_t i = 0; i < n; ++i) {
        Vec wu = scaled(directions[i], widths[i]);
        inst.classes.push_back({{wu, wu}, {scaled(wu, -1.0), scaled(wu, -1.0)}});
        Vec anchor = scaled(directions[i], levels[i]);
        inst.anchors.push_back({anchor, anchor});
    }
    auto sel = select_colourful(inst);

    BangResult res;
    res.direction = sel.total.u;
    res.signs.resize(n);
    res.margins.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        res.signs[k] = sel.chosen[k] == 0 ? 1 : -1;
        res.margins[k] = std::abs(dot(res.direction, directions[k]) - levels[k]) - widths[k];
        if (!(res.margins[k] >= -kMarginTol))
            throw AuditError("bang: margin " + std::to_string(res.margins[k]) + " at direction " +
                             std::to_string(k));
    }
    return res;
}

KadetsResult select_kadets(const std::vector<std::vector<Vec>>& direction_menus, const Vec& radii,
                           const std::vector<Vec>& centers) {
    const std::size_t n = direction_menus.size();
    if (n == 0) throw ArgumentError("kadets: no direction menus");
    if (radii.size() != n || centers.size() != n)
        throw ArgumentError("kadets: menus, radii and centers must align");
    int d = static_cast<int>(centers.front().size());
    for (double r : radii)
        if (!(r > 0.0) || !std::isfinite(r)) throw ArgumentError("kadets: radii must be positive");

    SelectionInstance inst;
    for (std::size_t i = 0; i < n; ++i) {
        if (direction_menus[i].empty()) throw ArgumentError("kadets: empty direction menu");
        std::vector<PairedVector> cls;
        for (const auto& u : direction_menus[i]) {
            if (static_cast<int>(u.size()) != d) throw DimensionError("kadets: mixed dimensions");
            require_finite(u, "kadets direction");
            Vec ru = scaled(u, radii[i]);
            cls.push_back({ru, ru});
        }
        inst.classes.push_back(std::move(cls));
        require_finite(centers[i], "kadets center");
        inst.anchors.push_back({centers[i], centers[i]});
    }
    auto sel = select_colourful(inst);  // rejects menus that do not balance

    KadetsResult res;
    res.chosen = sel.chosen;
    res.point = sel.total.u;
    res.margins.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Vec& uk = direction_menus[k][static_cast<std::size_t>(sel.chosen[k])];
        res.margins[k] = dot(sub(res.point, centers[k]), uk) - radii[k] * dot(uk, uk);
        if (!(res.margins[k] >= -kMarginTol))
            throw AuditError("kadets: margin " + std::to_string(res.margins[k]) + " at menu " +
                             std::to_string(k));
    }
    return res;
}

}  // namespace plankcover
