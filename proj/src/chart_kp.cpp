#include "bing/chart_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bing {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2 * kPi;
constexpr double kRefineCap = 0.45;     // annulus residual floor is 1/2
constexpr double kClusterRadius = 1e-6;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0)
        a += kTwoPi;
    return a;
}

double angular_dist(double a, double b) {
    double d = std::fabs(wrap_angle(a) - wrap_angle(b));
    return std::min(d, kTwoPi - d);
}

double torus_dist(double t1, double p1, double t2, double p2) {
    return std::max(angular_dist(t1, t2), angular_dist(p1, p2));
}

void check_m_n(int m, int n) {
    if (m < 2 || n < 2)
        throw std::invalid_argument("chart maps require m, n >= 2");
}

// Boundary image of a disk point of modulus 1 on the torus.
void kp_glue(int m, int n, const KPPoint& p, double& theta, double& psi) {
    double arg = std::atan2(p.y, p.x);
    if (p.chart == KPPoint::Chart::DiskA) {
        theta = wrap_angle(m * arg);
        psi = 0;
    } else {
        theta = 0;
        psi = wrap_angle(n * arg);
    }
}

}  // namespace

KPPoint KPPoint::torus(double theta, double psi) {
    return {Chart::Torus, wrap_angle(theta), wrap_angle(psi)};
}

KPPoint KPPoint::disk_a(std::complex<double> z) {
    return {Chart::DiskA, z.real(), z.imag()};
}

KPPoint KPPoint::disk_b(std::complex<double> z) {
    return {Chart::DiskB, z.real(), z.imag()};
}

std::string to_string(const KPPoint& p) {
    std::ostringstream os;
    switch (p.chart) {
        case KPPoint::Chart::Torus:
            os << "Torus(" << p.x << ", " << p.y << ")";
            break;
        case KPPoint::Chart::DiskA:
            os << "DiskA(" << p.x << (p.y < 0 ? " - " : " + ") << std::fabs(p.y) << "i)";
            break;
        case KPPoint::Chart::DiskB:
            os << "DiskB(" << p.x << (p.y < 0 ? " - " : " + ") << std::fabs(p.y) << "i)";
            break;
    }
    return os.str();
}

KPPoint kp_map(int m, int n, const KPPoint& p) {
    check_m_n(m, n);
    switch (p.chart) {
        case KPPoint::Chart::Torus:
            return KPPoint::torus(p.x + kPi, kPi - p.y);
        case KPPoint::Chart::DiskA: {
            const double r = std::abs(p.z());
            if (r > 1 + 1e-12)
                throw std::invalid_argument("disk point outside the unit disk");
            if (r < 0.5)
                return KPPoint::disk_a(2.0 * p.z());
            const double lift = kPi * (2 * r - 1);
            return KPPoint::torus(m * std::atan2(p.y, p.x) + lift, lift);
        }
        case KPPoint::Chart::DiskB: {
            const double r = std::abs(p.z());
            if (r > 1 + 1e-12)
                throw std::invalid_argument("disk point outside the unit disk");
            if (r < 0.5)
                return KPPoint::disk_b(2.0 * std::conj(p.z()));
            const double lift = kPi * (2 * r - 1);
            return KPPoint::torus(lift, -n * std::atan2(p.y, p.x) + lift);
        }
    }
    throw std::invalid_argument("invalid chart tag");
}

double kp_chart_distance(int m, int n, const KPPoint& p, const KPPoint& q) {
    check_m_n(m, n);
    if (p.chart == q.chart) {
        if (p.chart == KPPoint::Chart::Torus)
            return torus_dist(p.x, p.y, q.x, q.y);
        return std::abs(p.z() - q.z());
    }
    // Cross-chart distances go through the seams: each disk point pays its
    // distance to the boundary, then the glued images are compared on the
    // torus.
    double defect = 0;
    double pt = p.x, pp = p.y, qt = q.x, qp = q.y;
    if (p.chart != KPPoint::Chart::Torus) {
        defect += std::fabs(1 - std::abs(p.z()));
        kp_glue(m, n, p, pt, pp);
    }
    if (q.chart != KPPoint::Chart::Torus) {
        defect += std::fabs(1 - std::abs(q.z()));
        kp_glue(m, n, q, qt, qp);
    }
    return defect + torus_dist(pt, pp, qt, qp);
}

double kp_residual(int m, int n, const KPPoint& p) {
    return kp_chart_distance(m, n, kp_map(m, n, p), p);
}

namespace {

double seam_residual_at(int m, int n, std::size_t j, std::size_t samples) {
    const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(samples);
    const std::complex<double> dir{std::cos(t), std::sin(t)};
    double worst = 0;

    // Inner seam |z| = 1/2: inner branch against annulus branch.
    {
        const std::complex<double> z = 0.5 * dir;
        KPPoint inner = KPPoint::disk_a(2.0 * z);
        KPPoint annulus =
            KPPoint::torus(m * std::atan2(z.imag(), z.real()), 0.0);  // lift = 0 at r = 1/2
        worst = std::max(worst, kp_chart_distance(m, n, inner, annulus));

        KPPoint inner_b = KPPoint::disk_b(2.0 * std::conj(z));
        KPPoint annulus_b = KPPoint::torus(0.0, -n * std::atan2(z.imag(), z.real()));
        worst = std::max(worst, kp_chart_distance(m, n, inner_b, annulus_b));
    }
    // Outer seam |z| = 1: disk representative against torus representative.
    {
        KPPoint a_disk = kp_map(m, n, KPPoint::disk_a(dir));
        KPPoint a_torus = kp_map(m, n, KPPoint::torus(m * t, 0.0));
        worst = std::max(worst, kp_chart_distance(m, n, a_disk, a_torus));

        KPPoint b_disk = kp_map(m, n, KPPoint::disk_b(dir));
        KPPoint b_torus = kp_map(m, n, KPPoint::torus(0.0, n * t));
        worst = std::max(worst, kp_chart_distance(m, n, b_disk, b_torus));
    }
    return worst;
}

}  // namespace

double kp_seam_residual(int m, int n, std::size_t samples, ExecPolicy policy) {
    check_m_n(m, n);
    if (samples < 8)
        throw std::invalid_argument("seam check requires at least 8 samples");
    double worst = 0;
    if (policy == ExecPolicy::serial) {
        for (std::size_t j = 0; j < samples; ++j)
            worst = std::max(worst, seam_residual_at(m, n, j, samples));
        return worst;
    }
#ifdef _OPENMP
#pragma omp parallel for reduction(max : worst) schedule(static)
#endif
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(samples); ++j)
        worst = std::max(worst, seam_residual_at(m, n, static_cast<std::size_t>(j), samples));
    return worst;
}

namespace {

// Chart grids for the scan. Chart 0 = torus over [0,2pi)^2, charts 1 and 2 =
// disks over [-1,1]^2 with cells outside the closed disk skipped.
KPPoint grid_point(int chart, std::size_t i, std::size_t j, std::size_t grid) {
    if (chart == 0) {
        const double step = kTwoPi / static_cast<double>(grid);
        return KPPoint::torus(static_cast<double>(i) * step, static_cast<double>(j) * step);
    }
    const double step = 2.0 / static_cast<double>(grid - 1);
    const double x = -1.0 + static_cast<double>(i) * step;
    const double y = -1.0 + static_cast<double>(j) * step;
    return chart == 1 ? KPPoint::disk_a({x, y}) : KPPoint::disk_b({x, y});
}

bool grid_point_valid(int chart, std::size_t i, std::size_t j, std::size_t grid) {
    if (chart == 0)
        return true;
    const double step = 2.0 / static_cast<double>(grid - 1);
    const double x = -1.0 + static_cast<double>(i) * step;
    const double y = -1.0 + static_cast<double>(j) * step;
    return x * x + y * y <= 1.0;
}

struct ChartGrid {
    int chart;
    std::vector<double> residual;  // grid x grid, +inf where invalid
};

ChartGrid scan_chart(int m, int n, int chart, std::size_t grid, ExecPolicy policy) {
    ChartGrid cg{chart, std::vector<double>(grid * grid,
                                            std::numeric_limits<double>::infinity())};
    auto fill_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < grid; ++j)
            if (grid_point_valid(chart, i, j, grid))
                cg.residual[i * grid + j] = kp_residual(m, n, grid_point(chart, i, j, grid));
    };
    if (policy == ExecPolicy::serial) {
        for (std::size_t i = 0; i < grid; ++i)
            fill_row(i);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(grid); ++i)
            fill_row(static_cast<std::size_t>(i));
    }
    return cg;
}

bool is_local_min(const ChartGrid& cg, std::size_t grid, std::size_t i, std::size_t j) {
    const double here = cg.residual[i * grid + j];
    if (!std::isfinite(here))
        return false;
    const bool wrap = cg.chart == 0;
    for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
            if (di == 0 && dj == 0)
                continue;
            std::ptrdiff_t ni = static_cast<std::ptrdiff_t>(i) + di;
            std::ptrdiff_t nj = static_cast<std::ptrdiff_t>(j) + dj;
            if (wrap) {
                ni = (ni + static_cast<std::ptrdiff_t>(grid)) % static_cast<std::ptrdiff_t>(grid);
                nj = (nj + static_cast<std::ptrdiff_t>(grid)) % static_cast<std::ptrdiff_t>(grid);
            } else if (ni < 0 || nj < 0 || ni >= static_cast<std::ptrdiff_t>(grid) ||
                       nj >= static_cast<std::ptrdiff_t>(grid)) {
                continue;
            }
            double there = cg.residual[static_cast<std::size_t>(ni) * grid +
                                       static_cast<std::size_t>(nj)];
            if (there < here)
                return false;
        }
    return true;
}

}  // namespace

KPGridScan kp_grid_scan(int m, int n, std::size_t grid, double exclude_radius,
                        ExecPolicy policy) {
    check_m_n(m, n);
    if (grid < 32)
        throw std::invalid_argument("grid must be at least 32");

    KPGridScan out;
    out.min_residual_excluded = std::numeric_limits<double>::infinity();
    const KPPoint center_a = KPPoint::disk_a(0.0);
    const KPPoint center_b = KPPoint::disk_b(0.0);

    for (int chart = 0; chart < 3; ++chart) {
        ChartGrid cg = scan_chart(m, n, chart, grid, policy);
        for (std::size_t i = 0; i < grid; ++i)
            for (std::size_t j = 0; j < grid; ++j) {
                const double r = cg.residual[i * grid + j];
                if (!std::isfinite(r))
                    continue;
                KPPoint p = grid_point(chart, i, j, grid);
                if (exclude_radius <= 0 ||
                    (kp_chart_distance(m, n, p, center_a) > exclude_radius &&
                     kp_chart_distance(m, n, p, center_b) > exclude_radius))
                    out.min_residual_excluded = std::min(out.min_residual_excluded, r);
                if (r < kRefineCap && is_local_min(cg, grid, i, j))
                    out.candidates.push_back({p, r});
            }
    }
    return out;
}

namespace {

bool kp_less(const KPPoint& a, const KPPoint& b) {
    if (a.chart != b.chart)
        return a.chart < b.chart;
    if (a.x != b.x)
        return a.x < b.x;
    return a.y < b.y;
}

// Coordinatewise bisection: probe +-step along each chart coordinate, keep
// the best, halve the step when no probe improves.
KPPoint refine_candidate(int m, int n, KPPoint p, double initial_step, double& residual) {
    double step = initial_step;
    residual = kp_residual(m, n, p);
    int iterations = 0;
    while (step > 1e-14 && iterations < 20000) {
        ++iterations;
        KPPoint best = p;
        double best_r = residual;
        const double dx[4] = {step, -step, 0, 0};
        const double dy[4] = {0, 0, step, -step};
        for (int k = 0; k < 4; ++k) {
            KPPoint q = p;
            q.x += dx[k];
            q.y += dy[k];
            if (q.chart == KPPoint::Chart::Torus) {
                q.x = wrap_angle(q.x);
                q.y = wrap_angle(q.y);
            } else if (q.x * q.x + q.y * q.y > 1.0) {
                continue;
            }
            double r = kp_residual(m, n, q);
            if (r < best_r) {
                best_r = r;
                best = q;
            }
        }
        if (best_r < residual) {
            p = best;
            residual = best_r;
        } else {
            step /= 2;
        }
    }
    return p;
}

}  // namespace

std::vector<KPPoint> kp_fixed_points(int m, int n, std::size_t grid, double tol,
                                     ExecPolicy policy) {
    if (tol <= 0)
        throw std::invalid_argument("tolerance must be positive");
    KPGridScan scan = kp_grid_scan(m, n, grid, 0.0, policy);

    struct Found {
        KPPoint point;
        double residual;
    };
    std::vector<Found> accepted;
    const double cell = 2.0 / static_cast<double>(grid - 1);
    for (const auto& cand : scan.candidates) {
        double residual = 0;
        KPPoint p = refine_candidate(m, n, cand.point, cell, residual);
        if (residual < tol)
            accepted.push_back({p, residual});
    }

    std::sort(accepted.begin(), accepted.end(),
              [](const Found& a, const Found& b) { return kp_less(a.point, b.point); });
    std::vector<Found> merged;
    for (const Found& f : accepted) {
        bool absorbed = false;
        for (Found& g : merged)
            if (f.point.chart == g.point.chart &&
                kp_chart_distance(m, n, f.point, g.point) < kClusterRadius) {
                if (f.residual < g.residual)
                    g = f;
                absorbed = true;
                break;
            }
        if (!absorbed)
            merged.push_back(f);
    }
    std::sort(merged.begin(), merged.end(),
              [](const Found& a, const Found& b) { return kp_less(a.point, b.point); });

    std::vector<KPPoint> out;
    out.reserve(merged.size());
    for (const Found& f : merged)
        out.push_back(f.point);
    return out;
}

IndexReport fixed_point_index(const std::function<KPPoint(const KPPoint&)>& map,
                              const KPPoint& p, double radius, std::size_t samples) {
    if (p.chart == KPPoint::Chart::Torus)
        throw std::invalid_argument("index circles are only defined inside disk charts");
    if (radius <= 0 || samples < 16)
        throw std::invalid_argument("index computation needs radius > 0 and samples >= 16");
    if (std::abs(p.z()) + radius > 1)
        throw std::invalid_argument("index circle leaves the disk chart");

    std::vector<std::complex<double>> displacement(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
        KPPoint q = p;
        q.x += radius * std::cos(t);
        q.y += radius * std::sin(t);
        KPPoint fq = map(q);
        if (fq.chart != q.chart)
            throw NumericalCheckError(
                "image of the index circle leaves the chart; no gluing pullback applies");
        displacement[k] = q.z() - fq.z();
        if (std::abs(displacement[k]) < 1e-13)
            throw NumericalCheckError("index circle passes through a fixed point");
    }
    double total = 0;
    for (std::size_t k = 0; k < samples; ++k) {
        const std::complex<double> ratio =
            displacement[(k + 1) % samples] / displacement[k];
        total += std::atan2(ratio.imag(), ratio.real());
    }
    const double turns = total / kTwoPi;
    const int index = static_cast<int>(std::lround(turns));
    const double defect = std::fabs(total - kTwoPi * index);
    if (defect > 0.25)
        throw NumericalCheckError("winding number drifted beyond the guard band");
    return {p, index, radius, samples, defect};
}

PathCheckReport kp_nielsen_path_check(int m, int n, std::size_t samples) {
    check_m_n(m, n);
    if (samples < 16)
        throw std::invalid_argument("path check requires at least 16 samples");
    PathCheckReport rep;
    for (std::size_t k = 0; k <= samples; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(samples);
        // gamma_a * delta_a traverses the real diameter of disk A at unit
        // speed; similarly on disk B.
        KPPoint concat_a = KPPoint::disk_a(t);
        KPPoint f_gamma_a = kp_map(m, n, KPPoint::disk_a(t / 2));
        rep.eq1_max_err =
            std::max(rep.eq1_max_err, kp_chart_distance(m, n, concat_a, f_gamma_a));

        KPPoint concat_b = KPPoint::disk_b(1 - t);
        KPPoint f_gamma_b = kp_map(m, n, KPPoint::disk_b(0.5 - t / 2));
        rep.eq2_max_err =
            std::max(rep.eq2_max_err, kp_chart_distance(m, n, concat_b, f_gamma_b));

        KPPoint f_delta_a = kp_map(m, n, KPPoint::disk_a(0.5 + t / 2));
        KPPoint f_delta_b = kp_map(m, n, KPPoint::disk_b(0.5 + t / 2));
        rep.eq3_max_err =
            std::max(rep.eq3_max_err, kp_chart_distance(m, n, f_delta_a, f_delta_b));
    }
    return rep;
}

KPNielsenSummary kp_nielsen_summary(int m, int n, std::size_t grid) {
    KPNielsenSummary s;
    s.fixed_points = kp_fixed_points(m, n, grid, 1e-9);
    if (s.fixed_points.size() != 2 ||
        s.fixed_points[0].chart != KPPoint::Chart::DiskA ||
        s.fixed_points[1].chart != KPPoint::Chart::DiskB)
        throw NumericalCheckError("fixed point search did not find exactly the two disk centers");

    auto f = [m, n](const KPPoint& p) { return kp_map(m, n, p); };
    for (const KPPoint& p : s.fixed_points) {
        s.indices.push_back(fixed_point_index(f, p, 0.1, 720));
        s.class_index_sum += s.indices.back().index;
    }
    s.paths = kp_nielsen_path_check(m, n, 256);
    s.seam_residual = kp_seam_residual(m, n, 1000);

    const double path_err =
        std::max({s.paths.eq1_max_err, s.paths.eq2_max_err, s.paths.eq3_max_err});
    if (path_err > 1e-10)
        throw NumericalCheckError("Nielsen path identities drifted beyond tolerance");
    if (s.seam_residual > 1e-10)
        throw NumericalCheckError("seam residual beyond tolerance");
    if (s.class_index_sum != 0)
        throw NumericalCheckError("fixed point indices do not cancel");

    // The verified path joins the two fixed points inside one class; with
    // index sum 0 that class is inessential.
    s.classes = 1;
    s.nielsen_number = 0;
    return s;
}

}  // namespace bing
