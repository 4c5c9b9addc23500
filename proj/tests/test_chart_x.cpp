#include "bing/chart_dynamics.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace bing;

TEST_CASE("surface points reflect in the equator plane") {
    auto q = x_map(2, 3, 4, XPoint::surface(0, 0, 1));
    CHECK(q.chart == XPoint::Chart::Surface);
    CHECK(q.x == 0);
    CHECK(q.y == 0);
    CHECK(q.z == -1);
}

TEST_CASE("disk points conjugate") {
    auto q = x_map(2, 3, 4, XPoint::disk(XPoint::Chart::DiskA, {0, 0.5}));
    CHECK(q.chart == XPoint::Chart::DiskA);
    CHECK(q.x == 0);
    CHECK(q.y == -0.5);
}

TEST_CASE("chart constructors validate membership") {
    CHECK_THROWS_AS(XPoint::surface(1, 0, 0), std::invalid_argument);  // x > 4/5
    CHECK_THROWS_AS(XPoint::surface(0.5, 0.5, 0.5), std::invalid_argument);  // off sphere
    CHECK_THROWS_AS(XPoint::disk(XPoint::Chart::DiskB, {2, 0}), std::invalid_argument);
}

TEST_CASE("boundary compatibility is exact") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    for (int i = 0; i < 1000; ++i) {
        const double t = angle(rng);
        const std::complex<double> w{std::cos(t), std::sin(t)};
        auto via_disk = x_glue(XPoint::Chart::DiskA, 2, 3, 4, std::conj(w));
        auto via_surface = x_glue(XPoint::Chart::DiskA, 2, 3, 4, w);
        via_surface[2] = -via_surface[2];
        for (int c = 0; c < 3; ++c)
            CHECK(std::fabs(via_disk[c] - via_surface[c]) < 1e-12);
    }
    CHECK(x_boundary_residual(2, 3, 4, 1000) < 1e-12);
    CHECK(x_boundary_residual(2, 2, 3, 1000) < 1e-12);
    CHECK(x_boundary_residual(2, 3, 4, 1000, ExecPolicy::serial) ==
          x_boundary_residual(2, 3, 4, 1000, ExecPolicy::parallel));
}

TEST_CASE("a lone sampled arc has chi 1") {
    SampledGraph g;
    std::vector<SampledGraph::Key> diameter;
    for (int k = 0; k < 100; ++k)
        diameter.push_back({1, -1.0 + 2.0 * k / 99.0, 0, 0});
    g.add_path(diameter);
    auto comps = g.components(1e-9);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].chi == 1);
}

TEST_CASE("a sampled closed loop has chi 0") {
    SampledGraph g;
    std::vector<SampledGraph::Key> loop;
    for (int k = 0; k <= 64; ++k) {
        const double t = 6.283185307179586 * k / 64;
        loop.push_back({0, std::cos(t), std::sin(t), 0});
    }
    g.add_path(loop);  // first and last key coincide and merge
    auto comps = g.components(1e-9);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].chi == 0);
}

TEST_CASE("fixed components of the triangle models are homotopy circles") {
    for (auto [l, m, n] : std::vector<std::array<int, 3>>{
             {2, 3, 3}, {2, 3, 4}, {2, 3, 5}, {2, 2, 3}, {2, 2, 4}}) {
        CAPTURE(l);
        CAPTURE(m);
        CAPTURE(n);
        auto comps = x_fixed_components(l, m, n, 128);
        CHECK_FALSE(comps.empty());
        for (const auto& c : comps) {
            CHECK(c.estimated_chi == 0);
            CHECK(c.sampled_vertices == c.sampled_edges);
        }
    }
}

TEST_CASE("component counts depend on the parities") {
    // all even degrees: each diameter closes onto its own boundary point
    auto even = x_fixed_components(2, 2, 4, 128);
    // S4 data: two components as in the depicted fixed set
    auto s4 = x_fixed_components(2, 3, 4, 128);
    CHECK(s4.size() == 2);
    CHECK(even.size() == 3);
}

TEST_CASE("x nielsen summaries") {
    for (auto [l, m, n] :
         std::vector<std::array<int, 3>>{{2, 3, 4}, {2, 3, 5}, {2, 2, 3}}) {
        auto s = x_nielsen_summary(l, m, n, 128);
        CHECK(s.nielsen_number == 0);
        for (auto idx : s.component_indices)
            CHECK(idx == 0);
        CHECK_FALSE(s.index_hypotheses.empty());
    }
}

TEST_CASE("resolution preconditions") {
    CHECK_THROWS_AS(x_fixed_components(2, 3, 4, 16), std::invalid_argument);
    CHECK_THROWS_AS(x_fixed_components(1, 3, 4, 128), std::invalid_argument);
}

TEST_CASE("euler characteristic of the triangle model") {
    CHECK(x_euler_characteristic() == 2);
}
