#include "plankcover/geom.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "doctest.h"
#include "generators.hpp"
#include "plankcover/errors.hpp"

using namespace plankcover;

namespace {
const double kPi = std::acos(-1.0);

// 2-d membership oracle: the origin lies in the hull iff the vertex directions
// leave no angular gap larger than pi. Returns nullopt when the verdict is too
// close to call.
std::optional<bool> origin_in_hull_2d_oracle(const std::vector<Vec>& pts) {
    std::vector<double> ang;
    for (const auto& p : pts) {
        if (norm(p) < 1e-9) return true;  // origin is itself a point
        ang.push_back(std::atan2(p[1], p[0]));
    }
    std::sort(ang.begin(), ang.end());
    double gap = ang.front() + 2 * kPi - ang.back();
    for (std::size_t i = 1; i < ang.size(); ++i) gap = std::max(gap, ang[i] - ang[i - 1]);
    if (std::abs(gap - kPi) < 1e-6) return std::nullopt;
    return gap < kPi;
}
}  // namespace

TEST_CASE("unit square ring order and support ties") {
    auto P = from_vertices_2d({{1.0, 1.0}, {0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
    REQUIRE(P.vertices.size() == 4);
    CHECK(P.vertices[0] == Vec{0.0, 0.0});
    CHECK(P.vertices[1] == Vec{1.0, 0.0});
    CHECK(P.vertices[2] == Vec{1.0, 1.0});
    CHECK(P.vertices[3] == Vec{0.0, 1.0});

    // two maximizers in direction (1,0); the first along the ring wins
    auto s = support(P, {1.0, 0.0});
    CHECK(s.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.point == Vec{1.0, 0.0});

    CHECK(contains_point(P, {0.5, 0.5}));
    CHECK(!contains_point(P, {1.1, 0.5}));
}

TEST_CASE("halfspace square recovers its vertices") {
    std::vector<Halfspace> hs = {{{1.0, 0.0}, 1.0}, {{-1.0, 0.0}, 1.0}, {{0.0, 1.0}, 1.0}, {{0.0, -1.0}, 1.0}};
    auto P = from_halfspaces(2, hs);
    REQUIRE(P.vertices.size() == 4);
    CHECK(norm(sub(P.vertices[0], {-1.0, -1.0})) <= 1e-9);
    CHECK(norm(sub(P.vertices[1], {1.0, -1.0})) <= 1e-9);
    CHECK(norm(sub(P.vertices[2], {1.0, 1.0})) <= 1e-9);
    CHECK(norm(sub(P.vertices[3], {-1.0, 1.0})) <= 1e-9);
    CHECK(is_bounded(P));
}

TEST_CASE("empty and degenerate halfspace systems are rejected") {
    std::vector<Halfspace> empty_set = {{{1.0, 0.0}, -1.0}, {{-1.0, 0.0}, -1.0},
                                        {{0.0, 1.0}, 1.0},  {{0.0, -1.0}, 1.0}};
    CHECK_THROWS_AS(from_halfspaces(2, empty_set), RepresentationError);

    // pinched to a segment
    std::vector<Halfspace> flat = {{{1.0, 0.0}, 0.0}, {{-1.0, 0.0}, 0.0},
                                   {{0.0, 1.0}, 1.0}, {{0.0, -1.0}, 1.0}};
    CHECK_THROWS_AS(from_halfspaces(2, flat), RepresentationError);

    CHECK_THROWS_AS(from_vertices_2d({{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}}), RepresentationError);
}

TEST_CASE("planks are unbounded slabs") {
    auto P = make_plank({0.6, 0.8}, -0.5, 1.5);
    CHECK(P.vertices.empty());
    CHECK(!is_bounded(P));
    CHECK(width_in_direction(P, {0.6, 0.8}) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(contains_point(P, {0.0, 0.0}));
    CHECK(!contains_point(P, {2.0, 2.0}));  // <n,x> = 2.8 > 1.5
    CHECK_THROWS_AS(support(P, {0.8, -0.6}), UnboundedError);
    CHECK_THROWS_AS(make_plank({0.6, 0.8}, 1.5, -0.5), RepresentationError);
}

TEST_CASE("regular polygons have the textbook widths") {
    auto hex = regular_polygon(6);
    REQUIRE(hex.vertices.size() == 6);
    for (const auto& v : hex.vertices) CHECK(norm(v) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(width_in_direction(hex, {1.0, 0.0}) == doctest::Approx(2.0).epsilon(1e-9));
    auto w = min_width_2d(hex);
    CHECK(w.width == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));

    auto sixty_four = regular_polygon(64);
    auto w64 = min_width_2d(sixty_four);
    CHECK(w64.width == doctest::Approx(2.0 * std::cos(kPi / 64)).epsilon(1e-9));
}

TEST_CASE("right triangle minimal width is the hypotenuse height") {
    auto T = from_vertices_2d({{0.0, 0.0}, {4.0, 0.0}, {0.0, 3.0}});
    auto w = min_width_2d(T);
    CHECK(w.width == doctest::Approx(12.0 / 5.0).epsilon(1e-12));
    CHECK(w.normal[0] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(w.normal[1] == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("regular simplex invariants across dimensions") {
    for (int d = 1; d <= 6; ++d) {
        auto S = regular_simplex(d);
        REQUIRE(static_cast<int>(S.vertices.size()) == d + 1);
        Vec centroid = zeros(d);
        for (const auto& v : S.vertices) {
            CHECK(norm(v) == doctest::Approx(1.0).epsilon(1e-12));
            add_in_place(centroid, v);
            CHECK(contains_point(S, v, 1e-9));
        }
        CHECK(norm(centroid) <= 1e-12);
        for (std::size_t i = 0; i < S.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < S.vertices.size(); ++j)
                CHECK(dot(S.vertices[i], S.vertices[j]) == doctest::Approx(-1.0 / d).epsilon(1e-12));
        CHECK(contains_point(S, zeros(d)));
        // distance from the center to each facet is the inradius 1/d
        auto h = support(S, scaled(S.vertices[0], -1.0));
        CHECK(h.value == doctest::Approx(1.0 / d).epsilon(1e-9));
    }
}

TEST_CASE("translate and scale act on both representations") {
    auto T = from_vertices_2d({{0.0, 0.0}, {2.0, 0.0}, {0.0, 2.0}});
    auto T2 = translate(T, {1.0, -1.0});
    CHECK(contains_point(T2, {1.0, -1.0}));
    CHECK(!contains_point(T2, {0.0, 0.0}, 1e-9));
    CHECK(norm(sub(support(T2, {1.0, 0.0}).point, {3.0, -1.0})) <= 1e-12);

    auto H = scale(T, 0.5);
    CHECK(support(H, {1.0, 0.0}).value == doctest::Approx(1.0).epsilon(1e-12));

    // reflection: h_{-K}(v) = h_K(-v)
    auto R = scale(T, -1.0);
    for (const Vec& dir : {Vec{1.0, 0.0}, Vec{0.3, -0.9}, Vec{-1.0, -1.0}})
        CHECK(support(R, dir).value ==
              doctest::Approx(support(T, scaled(dir, -1.0)).value).epsilon(1e-12));
    // ring order restored after the flip
    CHECK(R.vertices[0] == Vec{-2.0, 0.0});
}

TEST_CASE("origin membership: hand-picked cases") {
    auto in3 = origin_in_hull({{1.0, 0.0}, {-1.0, 1.0}, {-1.0, -1.0}});
    CHECK(in3.inside);
    double sum = 0.0;
    for (double c : in3.coefficients) sum += c;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));

    auto out3 = origin_in_hull({{1.0, 0.2}, {2.0, -0.5}, {1.5, 1.0}});
    REQUIRE(!out3.inside);
    REQUIRE(out3.separator.size() == 2);
    CHECK(norm(out3.separator) == doctest::Approx(1.0).epsilon(1e-9));
    for (const Vec& p : {Vec{1.0, 0.2}, Vec{2.0, -0.5}, Vec{1.5, 1.0}})
        CHECK(dot(out3.separator, p) > 0.0);

    auto S = regular_simplex(4);
    auto inS = origin_in_hull(S.vertices);
    CHECK(inS.inside);
    for (double c : inS.coefficients) CHECK(c == doctest::Approx(0.2).epsilon(1e-7));
}

TEST_CASE("origin membership agrees with the angular-gap oracle") {
    testgen::Rng g(44021);
    int checked = 0;
    while (checked < 200) {
        int n = testgen::uniform_int(g, 3, 8);
        std::vector<Vec> pts;
        for (int i = 0; i < n; ++i) pts.push_back(testgen::uniform_vec(g, 2, -1.0, 1.0));
        auto expect = origin_in_hull_2d_oracle(pts);
        if (!expect) continue;
        auto got = origin_in_hull(pts);
        CHECK(got.inside == *expect);
        if (!got.inside)
            for (const auto& p : pts) CHECK(dot(got.separator, p) >= -1e-9);
        ++checked;
    }
}

TEST_CASE("minkowski sums of squares and differences") {
    std::vector<Vec> sq = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
    auto two = minkowski_sum_vertices({sq, sq});
    REQUIRE(two.size() == 4);
    CHECK(two[0] == Vec{0.0, 0.0});
    CHECK(two[2] == Vec{2.0, 2.0});

    // K + (-K) always holds the origin
    std::vector<Vec> tri = {{0.3, 0.1}, {1.2, 0.4}, {0.5, 1.1}};
    std::vector<Vec> neg;
    for (const auto& p : tri) neg.push_back(scaled(p, -1.0));
    auto diff = minkowski_sum_vertices({tri, neg});
    CHECK(origin_in_hull(diff).inside);
}
