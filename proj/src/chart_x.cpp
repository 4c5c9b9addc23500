#include "bing/chart_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace bing {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2 * kPi;
constexpr double kMergeTol = 1e-9;

void check_lmn(int l, int m, int n) {
    if (l < 2 || m < 2 || n < 2)
        throw std::invalid_argument("X(l,m,n) requires degrees >= 2");
}

std::complex<double> cpow(std::complex<double> w, int k) {
    std::complex<double> r{1, 0};
    for (int i = 0; i < k; ++i)
        r *= w;
    return r;
}

int chart_degree(XPoint::Chart c, int l, int m, int n) {
    switch (c) {
        case XPoint::Chart::DiskA:
            return l;
        case XPoint::Chart::DiskB:
            return m;
        case XPoint::Chart::DiskC:
            return n;
        default:
            throw std::invalid_argument("surface points have no attaching degree");
    }
}

}  // namespace

XPoint XPoint::surface(double x, double y, double z) {
    XPoint p;
    p.chart = Chart::Surface;
    p.x = x;
    p.y = y;
    p.z = z;
    const double norm = x * x + y * y + z * z;
    if (std::fabs(norm - 1) > 1e-9 || x > 0.8 + 1e-9 || std::fabs(y) > 0.8 + 1e-9)
        throw std::invalid_argument("point is not on the surface band");
    return p;
}

XPoint XPoint::disk(Chart c, std::complex<double> w) {
    if (c == Chart::Surface)
        throw std::invalid_argument("disk constructor used with surface tag");
    if (std::abs(w) > 1 + 1e-12)
        throw std::invalid_argument("disk point outside the unit disk");
    XPoint p;
    p.chart = c;
    p.x = w.real();
    p.y = w.imag();
    return p;
}

std::string to_string(const XPoint& p) {
    std::ostringstream os;
    switch (p.chart) {
        case XPoint::Chart::Surface:
            os << "Surface(" << p.x << ", " << p.y << ", " << p.z << ")";
            return os.str();
        case XPoint::Chart::DiskA:
            os << "DiskA";
            break;
        case XPoint::Chart::DiskB:
            os << "DiskB";
            break;
        case XPoint::Chart::DiskC:
            os << "DiskC";
            break;
    }
    os << "(" << p.x << (p.y < 0 ? " - " : " + ") << std::fabs(p.y) << "i)";
    return os.str();
}

std::array<double, 3> x_glue(XPoint::Chart chart, int l, int m, int n,
                             std::complex<double> w) {
    check_lmn(l, m, n);
    const std::complex<double> wk = cpow(w, chart_degree(chart, l, m, n));
    switch (chart) {
        case XPoint::Chart::DiskA:
            return {0.6 * wk.real(), -0.8, 0.6 * wk.imag()};
        case XPoint::Chart::DiskB:
            return {0.8, 0.6 * wk.real(), 0.6 * wk.imag()};
        case XPoint::Chart::DiskC:
            return {-0.6 * wk.real(), 0.8, 0.6 * wk.imag()};
        default:
            throw std::invalid_argument("surface points have no gluing image");
    }
}

XPoint x_map(int l, int m, int n, const XPoint& p) {
    check_lmn(l, m, n);
    if (p.chart == XPoint::Chart::Surface)
        return XPoint::surface(p.x, p.y, -p.z);
    return XPoint::disk(p.chart, std::conj(p.w()));
}

namespace {

double disk_boundary_residual(int l, int m, int n, XPoint::Chart chart, double t) {
    const std::complex<double> w{std::cos(t), std::sin(t)};
    // Disk branch: conjugate, then glue.
    const auto via_disk = x_glue(chart, l, m, n, std::conj(w));
    // Surface branch: glue, then reflect.
    auto via_surface = x_glue(chart, l, m, n, w);
    via_surface[2] = -via_surface[2];
    double s = 0;
    for (int i = 0; i < 3; ++i)
        s += (via_disk[i] - via_surface[i]) * (via_disk[i] - via_surface[i]);
    return std::sqrt(s);
}

}  // namespace

double x_boundary_residual(int l, int m, int n, std::size_t samples_per_disk,
                           ExecPolicy policy) {
    check_lmn(l, m, n);
    if (samples_per_disk < 8)
        throw std::invalid_argument("boundary check requires at least 8 samples per disk");
    const XPoint::Chart charts[3] = {XPoint::Chart::DiskA, XPoint::Chart::DiskB,
                                     XPoint::Chart::DiskC};
    double worst = 0;
    auto sample = [&](std::size_t j) {
        const auto chart = charts[j % 3];
        const double t =
            kTwoPi * static_cast<double>(j / 3) / static_cast<double>(samples_per_disk);
        return disk_boundary_residual(l, m, n, chart, t);
    };
    const std::size_t total = 3 * samples_per_disk;
    if (policy == ExecPolicy::serial) {
        for (std::size_t j = 0; j < total; ++j)
            worst = std::max(worst, sample(j));
        return worst;
    }
#ifdef _OPENMP
#pragma omp parallel for reduction(max : worst) schedule(static)
#endif
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(total); ++j)
        worst = std::max(worst, sample(static_cast<std::size_t>(j)));
    return worst;
}

// ---------------------------------------------------------------------------
// Sampled graph
// ---------------------------------------------------------------------------

void SampledGraph::add_path(const std::vector<Key>& points) {
    if (points.size() < 2)
        throw std::invalid_argument("a sampled path needs at least two points");
    const std::size_t base = points_.size();
    points_.insert(points_.end(), points.begin(), points.end());
    for (std::size_t i = 1; i < points.size(); ++i)
        edges_.emplace_back(base + i - 1, base + i);
}

namespace {

struct Dsu {
    std::vector<std::size_t> parent;
    explicit Dsu(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    }
    void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<SampledGraph::Component> SampledGraph::components(double merge_tol) const {
    Dsu clusters(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j) {
            if (points_[i].tag != points_[j].tag)
                continue;
            const double da = points_[i].a - points_[j].a;
            const double db = points_[i].b - points_[j].b;
            const double dc = points_[i].c - points_[j].c;
            if (da * da + db * db + dc * dc <= merge_tol * merge_tol)
                clusters.join(i, j);
        }

    // Vertices are clusters; edges connect cluster roots. Parallel edges and
    // self-loops are genuine cycles of the sampled curve and must count.
    Dsu comps(points_.size());
    for (const auto& [u, v] : edges_)
        comps.join(clusters.find(u), clusters.find(v));

    std::vector<std::size_t> comp_index(points_.size(), SIZE_MAX);
    std::vector<Component> out;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (clusters.find(i) != i)
            continue;  // count each cluster once, at its root
        std::size_t root = comps.find(i);
        if (comp_index[root] == SIZE_MAX) {
            comp_index[root] = out.size();
            out.push_back({});
        }
        ++out[comp_index[root]].vertices;
    }
    for (const auto& [u, v] : edges_) {
        std::size_t root = comps.find(clusters.find(u));
        ++out[comp_index[root]].edges;
    }
    for (Component& c : out)
        c.chi = static_cast<std::int64_t>(c.vertices) - static_cast<std::int64_t>(c.edges);
    return out;
}

// ---------------------------------------------------------------------------
// Fixed set of the reflection map
// ---------------------------------------------------------------------------

namespace {

SampledGraph::Key surface_key(double x, double y, double z) {
    return {0, x, y, z};
}

// Disk samples use their own tag; a sample on the boundary circle is
// represented by its glued surface image so seams meet exactly.
SampledGraph::Key disk_key(XPoint::Chart chart, int l, int m, int n, double w) {
    if (std::fabs(std::fabs(w) - 1) < 1e-12) {
        auto g = x_glue(chart, l, m, n, {w, 0});
        return surface_key(g[0], g[1], g[2]);
    }
    return {static_cast<int>(chart), w, 0, 0};
}

}  // namespace

std::vector<FixedComponentReport> x_fixed_components(int l, int m, int n,
                                                     std::size_t resolution) {
    check_lmn(l, m, n);
    if (resolution < 64)
        throw std::invalid_argument("resolution must be at least 64");

    SampledGraph graph;

    // The z = 0 band of the surface: three closed arcs of the equator,
    // delimited by the three boundary circles.
    const double t1 = std::acos(0.8);
    const double s1 = std::asin(0.8);
    const double arcs[3][2] = {
        {t1, s1}, {kPi - s1, kPi + s1}, {kTwoPi - s1, kTwoPi - t1}};
    for (const auto& arc : arcs) {
        const double len = arc[1] - arc[0];
        const std::size_t count = std::max<std::size_t>(
            2, static_cast<std::size_t>(std::lround(static_cast<double>(resolution) * len / kTwoPi)) + 1);
        std::vector<SampledGraph::Key> pts;
        pts.reserve(count);
        for (std::size_t k = 0; k < count; ++k) {
            const double t =
                arc[0] + len * static_cast<double>(k) / static_cast<double>(count - 1);
            pts.push_back(surface_key(std::cos(t), std::sin(t), 0));
        }
        graph.add_path(pts);
    }

    // The real diameter of each disk.
    const XPoint::Chart charts[3] = {XPoint::Chart::DiskA, XPoint::Chart::DiskB,
                                     XPoint::Chart::DiskC};
    for (const auto chart : charts) {
        std::vector<SampledGraph::Key> pts;
        pts.reserve(resolution);
        for (std::size_t k = 0; k < resolution; ++k) {
            const double w =
                -1 + 2 * static_cast<double>(k) / static_cast<double>(resolution - 1);
            pts.push_back(disk_key(chart, l, m, n, w));
        }
        graph.add_path(pts);
    }

    // Samples must be spaced far above the merge tolerance or seam clusters
    // would be ambiguous.
    const double spacing = 2.0 / static_cast<double>(resolution - 1);
    if (spacing < 100 * kMergeTol)
        throw NumericalCheckError("resolution too fine to keep seam clusters separated");

    auto comps = graph.components(kMergeTol);
    std::vector<FixedComponentReport> out;
    for (std::size_t i = 0; i < comps.size(); ++i)
        out.push_back({i, comps[i].vertices, comps[i].edges, comps[i].chi});
    return out;
}

XNielsenSummary x_nielsen_summary(int l, int m, int n, std::size_t resolution) {
    XNielsenSummary s;
    s.components = x_fixed_components(l, m, n, resolution);
    for (const auto& c : s.components)
        s.component_indices.push_back(c.estimated_chi);
    s.index_hypotheses = {
        "each fixed class F has a compact neighborhood K with f(K) inside K",
        "K deformation retracts to F and F lies in the interior of K",
        "F = K intersected with Fix(f); then index(f,F) = chi(F)",
    };
    for (std::int64_t idx : s.component_indices)
        if (idx != 0)
            throw NumericalCheckError("a fixed component has nonzero sampled chi");
    s.nielsen_number = 0;
    return s;
}

int x_euler_characteristic() {
    const int sphere_minus_three_disks = 2 - 3;
    return sphere_minus_three_disks + 3;
}

}  // namespace bing
