#include "plankcover/contact.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "plankcover/errors.hpp"
#include "plankcover/lp.hpp"

namespace plankcover {
namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlackTol = 1e-8;
constexpr double kWeightTol = 1e-9;
}  // namespace

InscribedHomothet max_inscribed_homothet(const Polytope& C, const Polytope& B) {
    if (C.dim != B.dim) throw DimensionError("inscribe: dimension mismatch");
    const int d = C.dim;

    std::vector<SupportEval> sup;
    for (const auto& h : C.halfspaces) sup.push_back(support(B, h.a));

    // variables: center (free), then lambda >= 0
    LinearProgram lp;
    lp.objective = zeros(d + 1);
    lp.objective[static_cast<std::size_t>(d)] = 1.0;
    lp.bounds.assign(static_cast<std::size_t>(d + 1), {-kInf, kInf});
    lp.bounds[static_cast<std::size_t>(d)] = {0.0, kInf};
    for (std::size_t j = 0; j < C.halfspaces.size(); ++j) {
        Vec row = C.halfspaces[j].a;
        row.push_back(sup[j].value);
        lp.constraints.push_back({std::move(row), Rel::Le, C.halfspaces[j].b});
    }
    auto out = solve(lp);
    if (out.status == LpStatus::Unbounded)
        throw UnboundedError("inscribe: homothet grows without bound");
    if (out.status == LpStatus::Infeasible)
        throw RepresentationError("inscribe: outer body is empty");

    InscribedHomothet res;
    res.lambda = out.value;
    res.center = Vec(out.x.begin(), out.x.begin() + d);
    for (std::size_t j = 0; j < C.halfspaces.size(); ++j) {
        const auto& hs = C.halfspaces[j];
        double row_val = dot(hs.a, res.center) + res.lambda * sup[j].value;
        FacetContact fc;
        fc.facet = static_cast<int>(j);
        fc.support_value = sup[j].value;
        fc.support_point = sup[j].point;
        fc.slack = hs.b - row_val;
        fc.weight = out.dual[j];
        res.facets.push_back(std::move(fc));
        if (res.facets.back().slack <= kSlackTol * std::max(1.0, std::abs(hs.b)))
            res.tight.push_back(static_cast<int>(j));
    }

    // A positive multiplier on a slack facet would contradict the LP's own
    // audit; a tight set empty at a finite optimum would too. Re-check the
    // maximality certificate in contact terms.
    if (res.tight.empty()) throw AuditError("inscribe: finite optimum with no tight facet");
    Vec normal_sum = zeros(d);
    double inflate_sum = 0.0;
    for (const auto& fc : res.facets) {
        add_in_place(normal_sum, scaled(C.halfspaces[static_cast<std::size_t>(fc.facet)].a, fc.weight));
        inflate_sum += fc.weight * fc.support_value;
        double b = C.halfspaces[static_cast<std::size_t>(fc.facet)].b;
        if (fc.weight > kWeightTol && fc.slack > 1e-7 * std::max(1.0, std::abs(b)))
            throw AuditError("inscribe: load-bearing facet is not tight");
    }
    if (norm(normal_sum) > 1e-8)
        throw AuditError("inscribe: weighted normals do not cancel");
    if (res.lambda > kWeightTol && std::abs(inflate_sum - 1.0) > 1e-8)
        throw AuditError("inscribe: multipliers do not certify maximality");
    return res;
}

ContactSystem extract_contact_pairs(const Polytope& C, const Polytope& B) {
    auto ins = max_inscribed_homothet(C, B);
    if (ins.lambda <= kWeightTol)
        throw DegeneracyError("contact: inscribed copy has no positive scale");

    ContactSystem sys;
    sys.lambda = ins.lambda;
    sys.center = ins.center;
    for (const auto& fc : ins.facets) {
        if (fc.weight <= kWeightTol) continue;
        if (fc.support_value <= 1e-12)
            throw PreconditionError(
                "contact: origin must be interior to the inscribed body (nonpositive support "
                "value on a load-bearing facet)");
        ContactPair p;
        p.touch = scaled(fc.support_point, ins.lambda);
        p.normal = C.halfspaces[static_cast<std::size_t>(fc.facet)].a;
        p.weight = fc.weight;
        p.facet = fc.facet;
        if (dot(p.touch, p.normal) <= 0.0)
            throw AuditError("contact: nonpositive self-score on a contact pair");
        sys.pairs.push_back(std::move(p));
    }
    if (sys.pairs.empty()) throw AuditError("contact: no load-bearing facets at a positive scale");
    return sys;
}

double symmetric_condition_defect(const std::vector<std::vector<PairedVector>>& menus) {
    double worst = 0.0;
    for (std::size_t i = 0; i < menus.size(); ++i)
        for (std::size_t j = i + 1; j < menus.size(); ++j)
            for (const auto& a : menus[i])
                for (const auto& b : menus[j])
                    worst = std::max(worst, std::abs(dot(a.u, b.v) - dot(b.u, a.v)));
    return worst;
}

bool is_uu_form(const std::vector<PairedVector>& pairs, double tol) {
    for (const auto& p : pairs)
        if (norm(sub(p.u, p.v)) > tol * std::max(1.0, norm(p.u))) return false;
    return true;
}

std::vector<PairedVector> align_to_uu(const std::vector<ContactPair>& pairs, double tol) {
    std::vector<PairedVector> out;
    for (const auto& p : pairs) {
        double tn = norm(p.touch), nn = norm(p.normal);
        double cos_gap = dot(p.touch, p.normal) / (tn * nn);
        if (tn < 1e-12 || nn < 1e-12 || cos_gap < 1.0 - tol)
            throw PreconditionError(
                "contact: normal is not a positive multiple of its touch point; "
                "refusing to rescale");
        out.push_back({p.touch, p.touch});
    }
    return out;
}

}  // namespace plankcover
