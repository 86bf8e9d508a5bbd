#include "plankcover/select.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "plankcover/errors.hpp"

using namespace plankcover;

namespace {

// The functional written exactly as its definition reads, quadratic loop and
// all. The fast path must agree with this.
double naive_objective(const SelectionInstance& inst, const std::vector<int>& chosen) {
    double f = 0.0;
    std::size_t n = inst.classes.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& wi = inst.classes[i][static_cast<std::size_t>(chosen[i])];
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& wj = inst.classes[j][static_cast<std::size_t>(chosen[j])];
            f += dot(wi.u, wj.v);
        }
        f -= dot(inst.anchors[i].x, wi.v);
        f -= dot(wi.u, inst.anchors[i].y);
    }
    return f;
}

// Odometer over all configurations; returns false after the last one.
bool next_config(std::vector<int>& c, const SelectionInstance& inst) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (++c[i] < static_cast<int>(inst.classes[i].size())) return true;
        c[i] = 0;
    }
    return false;
}

}  // namespace

TEST_CASE("rearranged objective equals the double loop") {
    testgen::Rng g(71201);
    for (int trial = 0; trial < 300; ++trial) {
        auto inst = testgen::random_selection_instance(g, 6, 4, 1, 4);
        std::vector<int> chosen;
        for (const auto& cls : inst.classes)
            chosen.push_back(testgen::uniform_int(g, 0, static_cast<int>(cls.size()) - 1));
        double fast = selection_objective(inst, chosen);
        double slow = naive_objective(inst, chosen);
        CHECK(std::abs(fast - slow) <= 1e-10 * std::max(1.0, std::abs(slow)));
    }
}

TEST_CASE("ascent stops at a single-swap local maximum with sound margins") {
    testgen::Rng g(320647);
    for (int trial = 0; trial < 150; ++trial) {
        auto inst = testgen::random_selection_instance(g, 5, 4, 1, 4);
        auto res = select_colourful(inst);

        double f = selection_objective(inst, res.chosen);
        CHECK(f == res.objective);
        for (std::size_t i = 0; i < inst.classes.size(); ++i) {
            auto alt = res.chosen;
            for (int j = 0; j < static_cast<int>(inst.classes[i].size()); ++j) {
                alt[i] = j;
                CHECK(selection_objective(inst, alt) <= f + 1e-12 * std::max(1.0, std::abs(f)));
            }
        }

        auto recheck = verify_guarantee(inst, res.chosen);
        REQUIRE(recheck.size() == res.margins.size());
        for (std::size_t k = 0; k < recheck.size(); ++k) {
            CHECK(std::abs(recheck[k] - res.margins[k]) <= 1e-12 * std::max(1.0, std::abs(recheck[k])));
            CHECK(recheck[k] >= -1e-9);
        }
    }
}

TEST_CASE("every local maximum carries the guarantee, exhaustively") {
    testgen::Rng g(98411);
    for (int trial = 0; trial < 60; ++trial) {
        auto inst = testgen::random_selection_instance(g, 3, 3, 1, 3);
        std::vector<int> config(inst.classes.size(), 0);
        do {
            double f = selection_objective(inst, config);
            bool local_max = true;
            for (std::size_t i = 0; i < inst.classes.size() && local_max; ++i) {
                auto alt = config;
                for (int j = 0; j < static_cast<int>(inst.classes[i].size()); ++j) {
                    alt[i] = j;
                    if (selection_objective(inst, alt) > f) {
                        local_max = false;
                        break;
                    }
                }
            }
            if (local_max)
                for (double m : verify_guarantee(inst, config)) CHECK(m >= -1e-9);
        } while (next_config(config, inst));
    }
}

TEST_CASE("single balanced class sits exactly on the boundary") {
    SelectionInstance inst;
    inst.classes.push_back({{{1.0, 0.0}, {1.0, 0.0}}, {{-1.0, 0.0}, {-1.0, 0.0}}});
    inst.anchors.push_back({zeros(2), zeros(2)});
    auto res = select_colourful(inst);
    CHECK(res.chosen == std::vector<int>{0});
    CHECK(res.margins[0] == 0.0);
    CHECK(res.objective == 0.0);
}

TEST_CASE("margins scale exactly by the square of a power-of-two factor") {
    testgen::Rng g(5150);
    auto inst = testgen::random_selection_instance(g, 4, 3, 2, 3);
    for (auto& a : inst.anchors) {
        a.x = zeros(static_cast<int>(a.x.size()));
        a.y = zeros(static_cast<int>(a.y.size()));
    }
    auto base = select_colourful(inst);

    SelectionInstance half = inst;
    for (auto& cls : half.classes)
        for (auto& w : cls) {
            w.u = scaled(w.u, 0.5);
            w.v = scaled(w.v, 0.5);
        }
    auto res = select_colourful(half);
    REQUIRE(res.chosen == base.chosen);
    for (std::size_t k = 0; k < res.margins.size(); ++k)
        CHECK(res.margins[k] == 0.25 * base.margins[k]);
}

TEST_CASE("sign selection clears every slab level") {
    testgen::Rng g(60301);
    for (int trial = 0; trial < 200; ++trial) {
        int d = testgen::uniform_int(g, 2, 6);
        int n = testgen::uniform_int(g, 1, 12);
        std::vector<Vec> dirs;
        Vec widths, levels;
        for (int i = 0; i < n; ++i) {
            Vec u = testgen::uniform_vec(g, d, -1.0, 1.0);
            while (norm(u) < 1e-3) u = testgen::uniform_vec(g, d, -1.0, 1.0);
            dirs.push_back(scaled(u, 1.0 / norm(u)));
            widths.push_back(testgen::uniform(g, 1e-3, 2.0));
            levels.push_back(testgen::uniform(g, -3.0, 3.0));
        }
        auto res = select_bang(dirs, widths, levels);
        Vec rebuilt = zeros(d);
        for (int i = 0; i < n; ++i)
            add_in_place(rebuilt, scaled(dirs[static_cast<std::size_t>(i)],
                                         res.signs[static_cast<std::size_t>(i)] * widths[static_cast<std::size_t>(i)]));
        CHECK(norm(sub(rebuilt, res.direction)) <= 1e-12);
        for (double m : res.margins) CHECK(m >= -1e-9);
    }
}

TEST_CASE("one slab pushes away from a positive level") {
    auto res = select_bang({{1.0, 0.0}}, {0.4}, {0.7});
    CHECK(res.signs == std::vector<int>{-1});
    CHECK(res.margins[0] == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("direction menus clear every chosen ball") {
    testgen::Rng g(771203);
    for (int trial = 0; trial < 120; ++trial) {
        int d = testgen::uniform_int(g, 2, 6);
        int n = testgen::uniform_int(g, 1, 8);
        std::vector<std::vector<Vec>> menus;
        Vec radii;
        std::vector<Vec> centers;
        for (int i = 0; i < n; ++i) {
            menus.push_back(testgen::perturbed_simplex_directions(g, d));
            radii.push_back(testgen::uniform(g, 1e-3, 1.0));
            centers.push_back(testgen::uniform_vec(g, d, -2.0, 2.0));
        }
        auto res = select_kadets(menus, radii, centers);
        Vec rebuilt = zeros(d);
        for (int i = 0; i < n; ++i)
            add_in_place(rebuilt, scaled(menus[static_cast<std::size_t>(i)][static_cast<std::size_t>(res.chosen[i])],
                                         radii[static_cast<std::size_t>(i)]));
        CHECK(norm(sub(rebuilt, res.point)) <= 1e-12);
        for (double m : res.margins) CHECK(m >= -1e-9);
    }
}

TEST_CASE("bad inputs are refused before any work") {
    SelectionInstance skew;
    skew.classes.push_back({{{1.0, 0.0}, {1.0, 0.0}}});  // hull misses the zero pair
    skew.anchors.push_back({zeros(2), zeros(2)});
    CHECK_THROWS_AS(select_colourful(skew), PreconditionError);

    CHECK_THROWS_AS(select_bang({{2.0, 0.0}}, {1.0}, {0.0}), ArgumentError);
    CHECK_THROWS_AS(select_bang({{1.0, 0.0}}, {-1.0}, {0.0}), ArgumentError);
    CHECK_THROWS_AS(select_bang({{1.0, 0.0}}, {1.0, 2.0}, {0.0}), ArgumentError);
    CHECK_THROWS_AS(select_kadets({{{1.0, 0.0}}}, {1.0}, {{0.0, 0.0}}), PreconditionError);
}

TEST_CASE("selection is deterministic run to run") {
    testgen::Rng g(140286);
    for (int trial = 0; trial < 40; ++trial) {
        auto inst = testgen::random_selection_instance(g, 5, 4, 1, 4);
        auto a = select_colourful(inst);
        auto b = select_colourful(inst);
        CHECK(a.chosen == b.chosen);
        CHECK(a.objective == b.objective);
        CHECK(a.margins == b.margins);
        CHECK(a.sweeps == b.sweeps);
    }
}
