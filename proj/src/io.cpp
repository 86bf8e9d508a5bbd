#include "plankcover/io.hpp"

#include <fstream>

#include "plankcover/errors.hpp"

namespace plankcover {
namespace {

const Json& need(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ArgumentError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ArgumentError(where + ": missing \"" + key + "\"");
    return *it;
}

double need_number(const Json& j, const char* key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_number()) throw ArgumentError(where + "." + key + ": expected a number");
    return v.get<double>();
}

int need_integer(const Json& j, const char* key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_number_integer()) throw ArgumentError(where + "." + key + ": expected an integer");
    return v.get<int>();
}

Vec as_vec(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ArgumentError(where + ": expected a non-empty array of numbers");
    Vec v;
    v.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number()) throw ArgumentError(where + ": expected numbers");
        v.push_back(e.get<double>());
    }
    return v;
}

const Json& need_array(const Json& j, const char* key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_array() || v.empty())
        throw ArgumentError(where + "." + key + ": expected a non-empty array");
    return v;
}

CoveringInstance read_covering_instance(const Json& j) {
    CoveringInstance inst;
    inst.body = read_polytope(need(j, "B", "instance"), "B");
    const Json& pieces = need_array(j, "pieces", "instance");
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        std::string where = "pieces[" + std::to_string(i) + "]";
        CoveringPiece piece;
        piece.shape = read_polytope(need(pieces[i], "C", where), where + ".C");
        piece.shift = as_vec(need(pieces[i], "shift", where), where + ".shift");
        if (pieces[i].is_object() && pieces[i].contains("o"))
            piece.anchor = as_vec(pieces[i].at("o"), where + ".o");
        inst.pieces.push_back(std::move(piece));
    }
    return inst;
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open input file: " + path);
    return Json::parse(in);
}

Polytope read_polytope(const Json& j, const std::string& where) {
    int dim = need_integer(j, "dim", where);
    const Json& hs = need_array(j, "halfspaces", where);
    std::vector<Halfspace> rows;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        std::string hw = where + ".halfspaces[" + std::to_string(i) + "]";
        Halfspace h;
        h.a = as_vec(need(hs[i], "a", hw), hw + ".a");
        h.b = need_number(hs[i], "b", hw);
        rows.push_back(std::move(h));
    }
    Polytope P = from_halfspaces(dim, std::move(rows));
    // A vertex list is useful for bodies in three or more dimensions, where
    // construction cannot recover it. Each listed point must at least lie in
    // the body; completeness is the caller's responsibility.
    if (P.vertices.empty() && j.is_object() && j.contains("vertices")) {
        const Json& vs = j.at("vertices");
        if (!vs.is_array()) throw ArgumentError(where + ".vertices: expected an array");
        for (std::size_t i = 0; i < vs.size(); ++i) {
            std::string vw = where + ".vertices[" + std::to_string(i) + "]";
            Vec v = as_vec(vs[i], vw);
            if (static_cast<int>(v.size()) != dim)
                throw ArgumentError(vw + ": wrong dimension");
            if (!contains_point(P, v, 1e-7))
                throw ArgumentError(vw + ": listed vertex lies outside the body");
            P.vertices.push_back(std::move(v));
        }
    }
    return P;
}

SelectionInstance read_selection_instance(const Json& j) {
    SelectionInstance inst;
    const Json& classes = need_array(j, "classes", "instance");
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::string cw = "classes[" + std::to_string(i) + "]";
        if (!classes[i].is_array() || classes[i].empty())
            throw ArgumentError(cw + ": expected a non-empty array of pairs");
        std::vector<PairedVector> cls;
        for (std::size_t k = 0; k < classes[i].size(); ++k) {
            std::string pw = cw + "[" + std::to_string(k) + "]";
            PairedVector p;
            p.u = as_vec(need(classes[i][k], "u", pw), pw + ".u");
            p.v = as_vec(need(classes[i][k], "v", pw), pw + ".v");
            cls.push_back(std::move(p));
        }
        inst.classes.push_back(std::move(cls));
    }
    const Json& anchors = need_array(j, "anchors", "instance");
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        std::string aw = "anchors[" + std::to_string(i) + "]";
        Anchor a;
        a.x = as_vec(need(anchors[i], "x", aw), aw + ".x");
        a.y = as_vec(need(anchors[i], "y", aw), aw + ".y");
        inst.anchors.push_back(std::move(a));
    }
    return inst;
}

BangInput read_bang_input(const Json& j) {
    BangInput in;
    const Json& slabs = need_array(j, "slabs", "instance");
    for (std::size_t i = 0; i < slabs.size(); ++i) {
        std::string sw = "slabs[" + std::to_string(i) + "]";
        in.directions.push_back(as_vec(need(slabs[i], "u", sw), sw + ".u"));
        in.widths.push_back(need_number(slabs[i], "w", sw));
        in.levels.push_back(need_number(slabs[i], "m", sw));
    }
    return in;
}

KadetsInput read_kadets_input(const Json& j) {
    KadetsInput in;
    const Json& balls = need_array(j, "balls", "instance");
    for (std::size_t i = 0; i < balls.size(); ++i) {
        std::string bw = "balls[" + std::to_string(i) + "]";
        in.centers.push_back(as_vec(need(balls[i], "o", bw), bw + ".o"));
        in.radii.push_back(need_number(balls[i], "r", bw));
        const Json& menu = need_array(balls[i], "menu", bw);
        std::vector<Vec> dirs;
        for (std::size_t k = 0; k < menu.size(); ++k)
            dirs.push_back(as_vec(menu[k], bw + ".menu[" + std::to_string(k) + "]"));
        in.menus.push_back(std::move(dirs));
    }
    return in;
}

BodyPairInput read_body_pair(const Json& j) {
    BodyPairInput in;
    in.C = read_polytope(need(j, "C", "instance"), "C");
    in.B = read_polytope(need(j, "B", "instance"), "B");
    return in;
}

WitnessInput read_witness_input(const Json& j) {
    WitnessInput in;
    in.instance = read_covering_instance(j);
    if (j.is_object() && j.contains("epsilon")) {
        const Json& e = j.at("epsilon");
        if (!e.is_number()) throw ArgumentError("epsilon: expected a number");
        in.epsilon = e.get<double>();
    }
    return in;
}

std::vector<SumsetPiece> read_sumset_input(const Json& j) {
    std::vector<SumsetPiece> pieces;
    const Json& arr = need_array(j, "pieces", "instance");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string pw = "pieces[" + std::to_string(i) + "]";
        SumsetPiece piece;
        piece.shape = read_polytope(need(arr[i], "C", pw), pw + ".C");
        piece.shift = as_vec(need(arr[i], "shift", pw), pw + ".shift");
        const Json& dirs = need_array(arr[i], "directions", pw);
        for (std::size_t k = 0; k < dirs.size(); ++k)
            piece.directions.push_back(
                as_vec(dirs[k], pw + ".directions[" + std::to_string(k) + "]"));
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

SimplexInput read_simplex_input(const Json& j) {
    SimplexInput in;
    in.dim = need_integer(j, "dim", "instance");
    in.lambdas = as_vec(need(j, "lambdas", "instance"), "lambdas");
    const Json& shifts = need_array(j, "shifts", "instance");
    for (std::size_t i = 0; i < shifts.size(); ++i)
        in.shifts.push_back(as_vec(shifts[i], "shifts[" + std::to_string(i) + "]"));
    return in;
}

VerifyInput read_verify_input(const Json& j) {
    VerifyInput in;
    in.instance = read_covering_instance(j);
    in.grid = need_integer(j, "grid", "instance");
    if (j.is_object() && j.contains("probe")) in.probe = as_vec(j.at("probe"), "probe");
    return in;
}

Json vec_json(const Vec& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(x);
    return a;
}

namespace {

Json vec_list_json(const std::vector<Vec>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(vec_json(v));
    return a;
}

}  // namespace

Json polytope_json(const Polytope& P) {
    Json j;
    j["dim"] = P.dim;
    Json hs = Json::array();
    for (const auto& h : P.halfspaces) hs.push_back({{"a", vec_json(h.a)}, {"b", h.b}});
    j["halfspaces"] = std::move(hs);
    if (!P.vertices.empty()) j["vertices"] = vec_list_json(P.vertices);
    return j;
}

Json selection_result_json(const SelectionResult& r) {
    Json j;
    j["chosen"] = r.chosen;
    j["total"] = {{"u", vec_json(r.total.u)}, {"v", vec_json(r.total.v)}};
    j["objective"] = r.objective;
    j["margins"] = vec_json(r.margins);
    j["sweeps"] = r.sweeps;
    return j;
}

Json bang_result_json(const BangResult& r) {
    Json j;
    j["signs"] = r.signs;
    j["direction"] = vec_json(r.direction);
    j["margins"] = vec_json(r.margins);
    return j;
}

Json kadets_result_json(const KadetsResult& r) {
    Json j;
    j["chosen"] = r.chosen;
    j["point"] = vec_json(r.point);
    j["margins"] = vec_json(r.margins);
    return j;
}

Json inscribed_json(const InscribedHomothet& h) {
    Json j;
    j["lambda"] = h.lambda;
    j["center"] = vec_json(h.center);
    Json facets = Json::array();
    for (const auto& fc : h.facets)
        facets.push_back({{"facet", fc.facet},
                          {"support_value", fc.support_value},
                          {"support_point", vec_json(fc.support_point)},
                          {"slack", fc.slack},
                          {"weight", fc.weight}});
    j["facets"] = std::move(facets);
    j["tight"] = h.tight;
    return j;
}

Json contact_system_json(const ContactSystem& s) {
    Json j;
    j["lambda"] = s.lambda;
    j["center"] = vec_json(s.center);
    Json pairs = Json::array();
    for (const auto& p : s.pairs)
        pairs.push_back({{"touch", vec_json(p.touch)},
                         {"normal", vec_json(p.normal)},
                         {"weight", p.weight},
                         {"facet", p.facet}});
    j["pairs"] = std::move(pairs);
    return j;
}

Json witness_report_json(const WitnessReport& r) {
    Json j;
    j["scale_sum"] = r.scale_sum;
    j["epsilon"] = r.epsilon;
    j["witness"] = vec_json(r.witness);
    j["in_body_margin"] = r.in_body_margin;
    j["piece_margins"] = vec_json(r.piece_margins);
    j["leaned_facets"] = r.leaned_facets;
    j["chosen"] = r.chosen;
    j["symmetry_defect"] = r.symmetry_defect;
    j["piece_scales"] = vec_json(r.piece_scales);
    j["piece_centers"] = vec_list_json(r.piece_centers);
    return j;
}

Json cover_sample_json(const CoverSample& s) {
    Json j;
    j["grid_per_axis"] = s.grid_per_axis;
    j["total_in_body"] = s.total_in_body;
    j["covered"] = s.covered;
    j["uncovered"] = vec_list_json(s.uncovered);
    j["probe_in_body"] = s.probe_in_body;
    j["probe_covered"] = s.probe_covered;
    return j;
}

Json sumset_report_json(const SumsetReport& r) {
    Json j;
    Json menus = Json::array();
    for (const auto& m : r.projection_menus) menus.push_back(vec_list_json(m));
    j["projection_menus"] = std::move(menus);
    j["chosen"] = r.chosen;
    j["witness"] = vec_json(r.witness);
    j["piece_margins"] = vec_json(r.piece_margins);
    Json grazing = Json::array();
    for (bool g : r.grazing) grazing.push_back(g);
    j["grazing"] = std::move(grazing);
    return j;
}

Json simplex_demo_json(const SimplexDemo& d) {
    Json j;
    j["simplex"] = polytope_json(d.simplex);
    j["scale_sum"] = d.scale_sum;
    j["containment_scale"] = d.containment_scale;
    j["report"] = sumset_report_json(d.report);
    return j;
}

}  // namespace plankcover
