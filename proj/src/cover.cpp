#include "plankcover/cover.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "plankcover/errors.hpp"

namespace plankcover {
namespace {

constexpr double kSymTol = 1e-8;

void require_origin_interior(const Polytope& B, const char* who) {
    for (const auto& h : B.halfspaces)
        if (h.b <= 1e-9 * norm(h.a))
            throw PreconditionError(std::string(who) + ": origin must be interior to the body");
}

bool pair_is_parallel(const ContactPair& p, double tol = 1e-9) {
    double tn = norm(p.touch), nn = norm(p.normal);
    if (tn < 1e-12 || nn < 1e-12) return false;
    return dot(p.touch, p.normal) / (tn * nn) >= 1.0 - tol;
}

}  // namespace

double relative_inradius(const Polytope& C, const Polytope& B) {
    return max_inscribed_homothet(C, B).lambda;
}

double relative_width(const Polytope& plank, const Polytope& B) {
    if (plank.halfspaces.size() != 2)
        throw RepresentationError("relative_width: not a slab (need exactly two halfspaces)");
    const auto& h0 = plank.halfspaces[0];
    const auto& h1 = plank.halfspaces[1];
    Vec n0 = scaled(h0.a, 1.0 / norm(h0.a));
    Vec n1 = scaled(h1.a, 1.0 / norm(h1.a));
    if (norm(add(n0, n1)) > 1e-9)
        throw RepresentationError("relative_width: halfspace normals are not antiparallel");
    // widths measured against a common normal scale cancel it out
    double plank_width = h0.b / norm(h0.a) + h1.b / norm(h1.a);
    if (plank_width <= 0.0) throw RepresentationError("relative_width: slab has no interior");
    return plank_width / width_in_direction(B, n0);
}

WitnessReport construct_witness(const CoveringInstance& inst,
                                std::optional<double> epsilon_override) {
    const Polytope& B = inst.body;
    if (inst.pieces.empty()) throw ArgumentError("witness: no pieces");
    if (!is_bounded(B)) throw PreconditionError("witness: the covered body must be bounded");
    require_origin_interior(B, "witness");
    const int d = B.dim;
    const std::size_t n = inst.pieces.size();

    WitnessReport rep;
    std::vector<ContactSystem> systems;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& piece = inst.pieces[i];
        if (piece.shape.dim != d || static_cast<int>(piece.shift.size()) != d)
            throw DimensionError("witness: piece dimension mismatch");
        require_finite(piece.shift, "piece shift");
        systems.push_back(extract_contact_pairs(piece.shape, B));
        rep.piece_scales.push_back(systems.back().lambda);
        rep.piece_centers.push_back(systems.back().center);
    }
    double lambda = 0.0;
    for (double s : rep.piece_scales) lambda += s;
    rep.scale_sum = lambda;
    if (lambda >= 1.0 - 1e-12)
        throw RefusalError("inradius-sum",
                           "witness: pieces inscribe a combined scale of " +
                               std::to_string(lambda) +
                               "; the construction needs the sum below 1");

    double eps = epsilon_override ? *epsilon_override : 0.5 * (1.0 / lambda - 1.0);
    if (!(eps > 0.0) || !((1.0 + eps) * lambda < 1.0))
        throw ArgumentError("witness: epsilon must be positive with (1+eps)*scale_sum < 1");
    rep.epsilon = eps;

    // Contact pairs per piece, re-anchored and in (u, u) form where the
    // geometry allows it.
    std::vector<std::vector<PairedVector>> menus(n);
    std::vector<std::vector<int>> menu_facets(n);
    Vec anchor_total = zeros(d);
    for (std::size_t i = 0; i < n; ++i) {
        Vec oi = zeros(d);
        if (inst.pieces[i].anchor) {
            oi = *inst.pieces[i].anchor;
            if (static_cast<int>(oi.size()) != d)
                throw DimensionError("witness: anchor dimension mismatch");
            require_finite(oi, "piece anchor");
        }
        add_in_place(anchor_total, oi);
        for (const auto& p : systems[i].pairs) {
            ContactPair shifted = p;
            shifted.touch = sub(p.touch, oi);
            PairedVector pv = pair_is_parallel(shifted)
                                  ? PairedVector{shifted.touch, shifted.touch}
                                  : PairedVector{shifted.touch, shifted.normal};
            menus[i].push_back(std::move(pv));
            menu_facets[i].push_back(p.facet);
        }
    }
    rep.symmetry_defect = symmetric_condition_defect(menus);
    if (rep.symmetry_defect > kSymTol)
        throw PreconditionError("witness: contact pairs break the exchange condition by " +
                                std::to_string(rep.symmetry_defect) +
                                "; this construction does not apply");

    Vec offset = scaled(anchor_total, 1.0 + eps);

    SelectionInstance sel;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<PairedVector> cls;
        for (const auto& pv : menus[i]) cls.push_back(scaled(pv, 1.0 + eps));
        sel.classes.push_back(std::move(cls));
        Vec oi = inst.pieces[i].anchor ? *inst.pieces[i].anchor : zeros(d);
        // x_i = shift + inscribed center + anchor - offset; the anchor enters
        // the engine doubled in the first slot
        Vec xi = add(add(inst.pieces[i].shift, systems[i].center), sub(oi, offset));
        sel.anchors.push_back({scaled(xi, 2.0), zeros(d)});
    }
    auto chosen = select_colourful(sel);
    rep.chosen = chosen.chosen;
    rep.witness = add(chosen.total.u, offset);

    // Certify from raw halfspace data: the witness must sit past the chosen
    // facet of every placed piece, and inside the body.
    rep.piece_margins.resize(n);
    rep.leaned_facets.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        int facet = menu_facets[k][static_cast<std::size_t>(chosen.chosen[k])];
        rep.leaned_facets[k] = facet;
        const auto& hs = inst.pieces[k].shape.halfspaces[static_cast<std::size_t>(facet)];
        double viol = dot(hs.a, sub(rep.witness, inst.pieces[k].shift)) - hs.b;
        rep.piece_margins[k] = viol / norm(hs.a);
        if (!(rep.piece_margins[k] > 0.0))
            throw AuditError("witness: piece " + std::to_string(k) +
                             " still reaches the witness (margin " +
                             std::to_string(rep.piece_margins[k]) + ")");
    }
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& h : B.halfspaces)
        worst = std::min(worst, (h.b - dot(h.a, rep.witness)) / norm(h.a));
    rep.in_body_margin = worst;
    if (rep.in_body_margin < -1e-9)
        throw AuditError("witness: point escapes the body by " + std::to_string(-worst));
    return rep;
}

CoverSample verify_cover_sample(const CoveringInstance& inst, int grid_per_axis,
                                const std::optional<Vec>& probe, double membership_tol) {
    const Polytope& B = inst.body;
    if (grid_per_axis < 2) throw ArgumentError("cover check: need at least a 2-point grid");
    if (!(membership_tol > 0.0)) throw ArgumentError("cover check: tolerance must be positive");
    const int d = B.dim;
    if (static_cast<long>(std::pow(static_cast<double>(grid_per_axis), d)) > 20'000'000L)
        throw CapacityError("cover check: grid too fine for this dimension");

    std::vector<Polytope> placed;
    for (const auto& p : inst.pieces) placed.push_back(translate(p.shape, p.shift));

    Vec lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        hi[static_cast<std::size_t>(k)] = support(B, axis(d, k, 1.0)).value;
        lo[static_cast<std::size_t>(k)] = -support(B, axis(d, k, -1.0)).value;
    }

    auto covered_by_any = [&](const Vec& x) {
        for (const auto& c : placed)
            if (contains_point(c, x, membership_tol)) return true;
        return false;
    };

    CoverSample out;
    out.grid_per_axis = grid_per_axis;
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    for (;;) {
        Vec x(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) {
            double t = static_cast<double>(idx[static_cast<std::size_t>(k)]) / (grid_per_axis - 1);
            x[static_cast<std::size_t>(k)] =
                lo[static_cast<std::size_t>(k)] +
                t * (hi[static_cast<std::size_t>(k)] - lo[static_cast<std::size_t>(k)]);
        }
        if (contains_point(B, x, membership_tol)) {
            ++out.total_in_body;
            if (covered_by_any(x)) ++out.covered;
            else if (out.uncovered.size() < 16) out.uncovered.push_back(x);
        }
        int k = d - 1;
        while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == grid_per_axis) idx[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
    }
    if (probe) {
        out.probe_in_body = contains_point(B, *probe, membership_tol);
        out.probe_covered = covered_by_any(*probe);
    }
    return out;
}

SumsetReport sumset_witness(const std::vector<SumsetPiece>& pieces) {
    if (pieces.empty()) throw ArgumentError("sumset: no pieces");
    const int d = pieces.front().shape.dim;
    const std::size_t n = pieces.size();

    SumsetReport rep;
    std::vector<std::vector<double>> menu_support(n);
    SelectionInstance sel;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& piece = pieces[i];
        if (piece.shape.dim != d || static_cast<int>(piece.shift.size()) != d)
            throw DimensionError("sumset: piece dimension mismatch");
        if (piece.directions.empty()) throw ArgumentError("sumset: piece without directions");
        if (!origin_in_hull(piece.directions).inside)
            throw PreconditionError("sumset: direction menu " + std::to_string(i) +
                                    " does not surround the origin");
        std::vector<Vec> projections;
        std::vector<PairedVector> cls;
        for (const auto& v : piece.directions) {
            double nv = norm(v);
            if (nv < 1e-12) throw ArgumentError("sumset: zero direction");
            double h = support(piece.shape, v).value;
            if (h <= 1e-9 * nv)
                throw PreconditionError("sumset: piece " + std::to_string(i) +
                                        " does not hold the origin in its interior");
            Vec proj = scaled(v, h / (nv * nv));
            cls.push_back({proj, proj});
            projections.push_back(std::move(proj));
            menu_support[i].push_back(h);
        }
        rep.projection_menus.push_back(std::move(projections));
        sel.classes.push_back(std::move(cls));
        sel.anchors.push_back({piece.shift, piece.shift});
    }

    auto chosen = select_colourful(sel);
    rep.chosen = chosen.chosen;
    rep.witness = chosen.total.u;

    rep.piece_margins.resize(n);
    rep.grazing.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& v = pieces[k].directions[static_cast<std::size_t>(chosen.chosen[k])];
        double h = menu_support[k][static_cast<std::size_t>(chosen.chosen[k])];
        double m = (dot(v, sub(rep.witness, pieces[k].shift)) - h) / norm(v);
        rep.piece_margins[k] = m;
        rep.grazing[k] = std::abs(m) <= 1e-9;
        if (m < -1e-9)
            throw AuditError("sumset: piece " + std::to_string(k) +
                             " holds the witness strictly inside (margin " + std::to_string(m) +
                             ")");
    }
    return rep;
}

SimplexDemo simplex_negative_homothet(int dim, const Vec& lambdas,
                                      const std::vector<Vec>& shifts) {
    if (lambdas.empty()) throw ArgumentError("simplex demo: no scales");
    if (shifts.size() != lambdas.size())
        throw ArgumentError("simplex demo: scales and shifts must align");
    for (double l : lambdas)
        if (!(l > 0.0) || !std::isfinite(l))
            throw ArgumentError("simplex demo: scales must be positive");

    SimplexDemo demo;
    demo.simplex = regular_simplex(dim);
    for (double l : lambdas) demo.scale_sum += l;
    demo.containment_scale = demo.scale_sum / dim;
    if (demo.scale_sum >= static_cast<double>(dim))
        throw RefusalError("scale-sum",
                           "simplex demo: combined scale " + std::to_string(demo.scale_sum) +
                               " reaches the dimension; the bound permits coverings, so no "
                               "witness is obtainable");

    // Self-check on the projection arithmetic: the projections of the center
    // onto the simplex's own facets are the vertices of -(1/dim) * simplex.
    auto shrunk = scale(demo.simplex, -1.0 / dim);
    for (const auto& vtx : demo.simplex.vertices) {
        Vec proj = scaled(vtx, -1.0 / dim);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& w : shrunk.vertices) best = std::min(best, norm(sub(proj, w)));
        if (best > 1e-9) throw AuditError("simplex demo: facet projections drift");
    }

    std::vector<SumsetPiece> pieces;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        SumsetPiece p;
        p.shape = scale(demo.simplex, -lambdas[i]);
        p.shift = shifts[i];
        // outer facet normals of the negative homothet = vertex directions of
        // the simplex itself
        p.directions = demo.simplex.vertices;
        pieces.push_back(std::move(p));
    }
    demo.report = sumset_witness(pieces);

    if (!contains_point(demo.simplex, demo.report.witness, 1e-9))
        throw AuditError("simplex demo: witness left the simplex");
    return demo;
}

}  // namespace plankcover
