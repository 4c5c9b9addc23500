#include "bing/chart_dynamics.hpp"

#include "bing/homology.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace bing;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("torus points rotate by pi and reflect") {
    auto q = kp_map(2, 3, KPPoint::torus(0.5, 1.25));
    CHECK(q.chart == KPPoint::Chart::Torus);
    CHECK(q.x == doctest::Approx(0.5 + kPi).epsilon(1e-12));
    CHECK(q.y == doctest::Approx(kPi - 1.25).epsilon(1e-12));
}

TEST_CASE("disk centers are fixed, interiors double") {
    auto a0 = kp_map(2, 3, KPPoint::disk_a(0.0));
    CHECK(a0.chart == KPPoint::Chart::DiskA);
    CHECK(kp_residual(2, 3, KPPoint::disk_a(0.0)) == 0.0);
    CHECK(kp_residual(2, 3, KPPoint::disk_b(0.0)) == 0.0);

    auto a = kp_map(2, 3, KPPoint::disk_a(0.25));
    CHECK(a.chart == KPPoint::Chart::DiskA);
    CHECK(a.x == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(a.y == doctest::Approx(0.0).epsilon(1e-14));

    auto b = kp_map(2, 3, KPPoint::disk_b(std::complex<double>(0.1, 0.2)));
    CHECK(b.chart == KPPoint::Chart::DiskB);
    CHECK(b.x == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(b.y == doctest::Approx(-0.4).epsilon(1e-14));
}

TEST_CASE("annulus points land on the torus") {
    auto q = kp_map(2, 3, KPPoint::disk_a(0.75));
    CHECK(q.chart == KPPoint::Chart::Torus);
    CHECK(q.x == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(q.y == doctest::Approx(kPi / 2).epsilon(1e-12));
}

TEST_CASE("invalid chart points are rejected") {
    CHECK_THROWS_AS(kp_map(2, 3, KPPoint::disk_a(std::complex<double>(1.5, 0))),
                    std::invalid_argument);
    CHECK_THROWS_AS(kp_map(1, 3, KPPoint::disk_a(0.0)), std::invalid_argument);
}

TEST_CASE("seam residuals vanish") {
    CHECK(kp_seam_residual(2, 3, 1000) < 1e-12);
    CHECK(kp_seam_residual(5, 7, 1000) < 1e-12);
    CHECK(kp_seam_residual(2, 2, 8) < 1e-12);
}

TEST_CASE("gluing soundness on random boundary points") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {5, 7}}) {
        for (int i = 0; i < 200; ++i) {
            const double t = angle(rng);
            const std::complex<double> dir{std::cos(t), std::sin(t)};
            KPPoint via_disk_a = kp_map(m, n, KPPoint::disk_a(dir));
            KPPoint via_torus_a = kp_map(m, n, KPPoint::torus(m * t, 0));
            CHECK(kp_chart_distance(m, n, via_disk_a, via_torus_a) < 1e-10);

            KPPoint via_disk_b = kp_map(m, n, KPPoint::disk_b(dir));
            KPPoint via_torus_b = kp_map(m, n, KPPoint::torus(0, n * t));
            CHECK(kp_chart_distance(m, n, via_disk_b, via_torus_b) < 1e-10);
        }
    }
}

TEST_CASE("fixed point search finds exactly the two disk centers") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {4, 6}}) {
        auto fps = kp_fixed_points(m, n, 64, 1e-9);
        REQUIRE(fps.size() == 2);
        CHECK(fps[0].chart == KPPoint::Chart::DiskA);
        CHECK(std::abs(fps[0].z()) < 1e-7);
        CHECK(fps[1].chart == KPPoint::Chart::DiskB);
        CHECK(std::abs(fps[1].z()) < 1e-7);
    }
}

TEST_CASE("the torus chart has no fixed points") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    for (int i = 0; i < 500; ++i) {
        KPPoint p = KPPoint::torus(angle(rng), angle(rng));
        CHECK(kp_residual(3, 4, p) >= kPi - 1e-12);
    }
}

TEST_CASE("grid certification: no spurious fixed points at resolution 256") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {5, 7}}) {
        auto scan = kp_grid_scan(m, n, 256, 0.05);
        CHECK(scan.min_residual_excluded > 1e-2);
    }
}

TEST_CASE("grid scans are identical under both execution policies") {
    auto serial = kp_grid_scan(2, 3, 64, 0.05, ExecPolicy::serial);
    auto parallel = kp_grid_scan(2, 3, 64, 0.05, ExecPolicy::parallel);
    CHECK(serial.min_residual_excluded == parallel.min_residual_excluded);
    REQUIRE(serial.candidates.size() == parallel.candidates.size());
    for (std::size_t i = 0; i < serial.candidates.size(); ++i) {
        CHECK(serial.candidates[i].point.chart == parallel.candidates[i].point.chart);
        CHECK(serial.candidates[i].point.x == parallel.candidates[i].point.x);
        CHECK(serial.candidates[i].point.y == parallel.candidates[i].point.y);
        CHECK(serial.candidates[i].residual == parallel.candidates[i].residual);
    }
    CHECK(kp_seam_residual(2, 3, 997, ExecPolicy::serial) ==
          kp_seam_residual(2, 3, 997, ExecPolicy::parallel));
}

TEST_CASE("fixed point indices at the disk centers") {
    auto f = [](const KPPoint& p) { return kp_map(2, 3, p); };
    auto ia = fixed_point_index(f, KPPoint::disk_a(0.0), 0.1, 720);
    CHECK(ia.index == 1);
    CHECK(ia.winding_defect < 1e-6);
    auto ib = fixed_point_index(f, KPPoint::disk_b(0.0), 0.1, 720);
    CHECK(ib.index == -1);
    CHECK(ib.winding_defect < 1e-6);
}

TEST_CASE("index of the constant map is +1") {
    auto constant = [](const KPPoint&) { return KPPoint::disk_a(0.0); };
    auto r = fixed_point_index(constant, KPPoint::disk_a(0.0), 0.1, 64);
    CHECK(r.index == 1);
}

TEST_CASE("indices are stable under halving the radius") {
    auto f = [](const KPPoint& p) { return kp_map(5, 7, p); };
    int prev = fixed_point_index(f, KPPoint::disk_b(0.0), 0.2, 512).index;
    for (double r = 0.1; r > 0.01; r /= 2)
        CHECK(fixed_point_index(f, KPPoint::disk_b(0.0), r, 512).index == prev);
}

TEST_CASE("index guards") {
    auto f = [](const KPPoint& p) { return kp_map(2, 3, p); };
    CHECK_THROWS_AS(fixed_point_index(f, KPPoint::torus(0, 0), 0.1, 64),
                    std::invalid_argument);
    CHECK_THROWS_AS(fixed_point_index(f, KPPoint::disk_a(0.0), 0.9, 64),
                    NumericalCheckError);  // image reaches the annulus branch
    auto id = [](const KPPoint& p) { return p; };
    CHECK_THROWS_AS(fixed_point_index(id, KPPoint::disk_a(0.0), 0.1, 64),
                    NumericalCheckError);  // every circle point is fixed
}

TEST_CASE("nielsen path identities") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 5}}) {
        auto rep = kp_nielsen_path_check(m, n, 100);
        CHECK(rep.eq1_max_err < 1e-12);
        CHECK(rep.eq2_max_err < 1e-12);
        CHECK(rep.eq3_max_err < 1e-12);
    }
    // the endpoint of the middle path lands at the torus basepoint
    KPPoint end = kp_map(2, 3, KPPoint::disk_a(0.5));
    CHECK(kp_chart_distance(2, 3, end, KPPoint::torus(0, 0)) < 1e-12);
}

TEST_CASE("nielsen summary") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {6, 10}}) {
        auto s = kp_nielsen_summary(m, n, 64);
        CHECK(s.fixed_points.size() == 2);
        CHECK(s.classes == 1);
        CHECK(s.class_index_sum == 0);
        CHECK(s.nielsen_number == 0);
    }
}

TEST_CASE("index sum matches the chain-level Lefschetz number") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {5, 7}}) {
        auto s = kp_nielsen_summary(m, n, 64);
        bigint lambda =
            lefschetz_number(standard_complex(build_Rd(m, n, 1)), r1_selfmap_chain_data());
        CHECK(bigint(s.class_index_sum) == lambda);
        CHECK(lambda == 0);
    }
}
