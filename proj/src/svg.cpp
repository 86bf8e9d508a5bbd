#include "plankcover/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "plankcover/errors.hpp"

namespace plankcover {
namespace {

// Everything is drawn by clipping the padded scene rectangle against the
// shape's halfspaces, so slabs and other unbounded pieces need no special
// handling. The scene fit only looks at vertex rings and marked points;
// shapes without vertices ride along inside whatever box the rest spans.

struct Drawable {
    Polytope shape;
    const char* role;
};

struct Marker {
    Vec at;
    const char* role;
};

struct Segment {
    Vec from, to;
    const char* role;
};

constexpr double kCanvas = 1000.0;
constexpr double kInset = 40.0;  // margin between the scene box and the canvas edge

const char* kStyle =
    "  <style>\n"
    "    .body  { fill: #eef3f8; stroke: #34495e; stroke-width: 3; }\n"
    "    .piece { fill: #e74c3c; fill-opacity: 0.18; stroke: #c0392b; stroke-width: 2; }\n"
    "    .inscribed { fill: #2980b9; fill-opacity: 0.25; stroke: #2471a3; stroke-width: 2; }\n"
    "    .witness { fill: #1e8449; stroke: #145a32; stroke-width: 2; }\n"
    "    .touch { fill: #7d3c98; }\n"
    "    .normal { stroke: #7d3c98; stroke-width: 3; }\n"
    "  </style>\n";

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", x);
    // avoid the two spellings of zero
    if (std::string(buf) == "-0.000") return "0.000";
    return buf;
}

// Clip a convex polygon (counterclockwise ring) by <a, x> <= b.
std::vector<Vec> clip_halfplane(const std::vector<Vec>& ring, const Vec& a, double b) {
    std::vector<Vec> out;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec& p = ring[i];
        const Vec& q = ring[(i + 1) % n];
        double fp = dot(a, p) - b;
        double fq = dot(a, q) - b;
        if (fp <= 0.0) out.push_back(p);
        if ((fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0)) {
            double t = fp / (fp - fq);
            out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
        }
    }
    return out;
}

class Scene {
  public:
    void shape(Polytope P, const char* role) { shapes_.push_back({std::move(P), role}); }
    void mark(Vec p, const char* role) { markers_.push_back({std::move(p), role}); }
    void segment(Vec a, Vec b, const char* role) {
        segments_.push_back({std::move(a), std::move(b), role});
    }

    std::string render() const {
        double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
        double hi_x = -lo_x, hi_y = -lo_x;
        auto grow = [&](const Vec& p) {
            lo_x = std::min(lo_x, p[0]);
            hi_x = std::max(hi_x, p[0]);
            lo_y = std::min(lo_y, p[1]);
            hi_y = std::max(hi_y, p[1]);
        };
        for (const auto& d : shapes_)
            for (const auto& v : d.shape.vertices) grow(v);
        for (const auto& m : markers_) grow(m.at);
        for (const auto& s : segments_) grow(s.from), grow(s.to);
        if (!(hi_x > lo_x) || !(hi_y > lo_y)) {
            lo_x = lo_y = -1.0;
            hi_x = hi_y = 1.0;
        }
        double pad = 0.08 * std::max(hi_x - lo_x, hi_y - lo_y);
        lo_x -= pad, lo_y -= pad, hi_x += pad, hi_y += pad;

        double scale = (kCanvas - 2.0 * kInset) / std::max(hi_x - lo_x, hi_y - lo_y);
        double cx = 0.5 * (lo_x + hi_x), cy = 0.5 * (lo_y + hi_y);
        auto sx = [&](double x) { return kCanvas / 2.0 + scale * (x - cx); };
        auto sy = [&](double y) { return kCanvas / 2.0 - scale * (y - cy); };

        // the scene box, as a ring, is the universe every shape is clipped to
        std::vector<Vec> box = {{lo_x, lo_y}, {hi_x, lo_y}, {hi_x, hi_y}, {lo_x, hi_y}};

        std::string out;
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
        out += kStyle;
        for (const auto& d : shapes_) {
            std::vector<Vec> ring = box;
            for (const auto& h : d.shape.halfspaces) {
                ring = clip_halfplane(ring, h.a, h.b);
                if (ring.empty()) break;
            }
            if (ring.size() < 3) continue;  // shape misses the scene entirely
            out += "  <polygon class=\"" + std::string(d.role) + "\" points=\"";
            for (std::size_t i = 0; i < ring.size(); ++i) {
                if (i) out += " ";
                out += num(sx(ring[i][0])) + "," + num(sy(ring[i][1]));
            }
            out += "\"/>\n";
        }
        for (const auto& s : segments_)
            out += "  <line class=\"" + std::string(s.role) + "\" x1=\"" + num(sx(s.from[0])) +
                   "\" y1=\"" + num(sy(s.from[1])) + "\" x2=\"" + num(sx(s.to[0])) + "\" y2=\"" +
                   num(sy(s.to[1])) + "\"/>\n";
        for (const auto& m : markers_)
            out += "  <circle class=\"" + std::string(m.role) + "\" cx=\"" + num(sx(m.at[0])) +
                   "\" cy=\"" + num(sy(m.at[1])) + "\" r=\"8\"/>\n";
        out += "</svg>\n";
        return out;
    }

  private:
    std::vector<Drawable> shapes_;
    std::vector<Marker> markers_;
    std::vector<Segment> segments_;
};

void require_planar(int dim, const char* cmd) {
    if (dim != 2)
        throw DimensionError(std::string(cmd) + ": figures can only be drawn in dimension 2");
}

}  // namespace

std::string svg_contact_scene(const Polytope& C, const Polytope& B, const ContactSystem& sys) {
    require_planar(C.dim, "contact figure");
    Scene sc;
    sc.shape(C, "piece");
    sc.shape(translate(scale(B, sys.lambda), sys.center), "inscribed");
    double span = 0.0;
    for (const auto& v : B.vertices) span = std::max(span, norm(v));
    for (const auto& p : sys.pairs) {
        Vec at = add(p.touch, sys.center);
        sc.mark(at, "touch");
        Vec dir = scaled(p.normal, 0.35 * span * sys.lambda / norm(p.normal));
        sc.segment(at, add(at, dir), "normal");
    }
    return sc.render();
}

std::string svg_witness_scene(const CoveringInstance& inst,
                              const std::optional<Vec>& witness) {
    require_planar(inst.body.dim, "witness figure");
    Scene sc;
    sc.shape(inst.body, "body");
    for (const auto& p : inst.pieces) sc.shape(translate(p.shape, p.shift), "piece");
    if (witness) sc.mark(*witness, "witness");
    return sc.render();
}

std::string svg_sumset_scene(const std::vector<SumsetPiece>& pieces, const Vec& witness) {
    if (pieces.empty()) throw ArgumentError("sumset figure: no pieces");
    require_planar(pieces.front().shape.dim, "sumset figure");
    Scene sc;
    for (const auto& p : pieces) sc.shape(translate(p.shape, p.shift), "piece");
    sc.mark(witness, "witness");
    return sc.render();
}

std::string svg_simplex_scene(const SimplexDemo& demo, const Vec& lambdas,
                              const std::vector<Vec>& shifts) {
    require_planar(demo.simplex.dim, "simplex figure");
    if (lambdas.size() != shifts.size())
        throw ArgumentError("simplex figure: scales and shifts must align");
    Scene sc;
    sc.shape(demo.simplex, "body");
    for (std::size_t i = 0; i < shifts.size(); ++i)
        sc.shape(translate(scale(demo.simplex, -lambdas[i]), shifts[i]), "piece");
    sc.mark(demo.report.witness, "witness");
    return sc.render();
}

}  // namespace plankcover
