#pragma once

#include "bing/two_complex.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bing {

// Numerical guard violations (winding drift, unexpected fixed points,
// unresolved seams). The CLI maps these to its own exit code.
struct NumericalCheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ExecPolicy { serial, parallel };

// ---------------------------------------------------------------------------
// Charts of K_<a,b | a^m, b^n, [a,b]>: a torus plus two disks, the disk
// boundaries glued along (z^m, 1) and (1, z^n).
// ---------------------------------------------------------------------------

struct KPPoint {
    enum class Chart { Torus, DiskA, DiskB };
    Chart chart = Chart::Torus;
    double x = 0;  // Torus: theta in [0, 2pi). Disks: Re z.
    double y = 0;  // Torus: psi in [0, 2pi). Disks: Im z.

    static KPPoint torus(double theta, double psi);
    static KPPoint disk_a(std::complex<double> z);
    static KPPoint disk_b(std::complex<double> z);
    std::complex<double> z() const { return {x, y}; }
};

std::string to_string(const KPPoint& p);

// The self-map: (z,w) -> (-z, -conj w) on the torus, doubling toward the
// centers inside the disks, spiralling into the torus on the annuli. The
// annulus branches always emit torus points.
KPPoint kp_map(int m, int n, const KPPoint& p);

// Torus: max of the two angular distances. Same disk: |z - w|. Across
// charts: boundary defect of each point plus the torus distance of the
// glued boundary images (zero exactly on matched seam points).
double kp_chart_distance(int m, int n, const KPPoint& p, const KPPoint& q);

double kp_residual(int m, int n, const KPPoint& p);  // distance(f(p), p)

// Max over sampled seam points (inner disk radius 1/2 and outer radius 1)
// of the distance between the two branch evaluations.
double kp_seam_residual(int m, int n, std::size_t samples,
                        ExecPolicy policy = ExecPolicy::parallel);

struct KPGridScan {
    struct Candidate {
        KPPoint point;
        double residual = 0;
    };
    std::vector<Candidate> candidates;        // grid-local minima below the refine cap
    double min_residual_excluded = 0;         // min residual outside the exclusion balls
};

// Residual scan of all three chart grids. exclude_radius carves balls
// around the two disk centers out of the reported minimum (0 = keep all).
// Output is independent of the execution policy.
KPGridScan kp_grid_scan(int m, int n, std::size_t grid, double exclude_radius,
                        ExecPolicy policy = ExecPolicy::parallel);

// Grid scan plus coordinatewise bisection refinement and cluster merging.
std::vector<KPPoint> kp_fixed_points(int m, int n, std::size_t grid = 256, double tol = 1e-9,
                                     ExecPolicy policy = ExecPolicy::parallel);

struct IndexReport {
    KPPoint fixed_point;
    int index = 0;
    double radius = 0;
    std::size_t samples = 0;
    double winding_defect = 0;  // |accumulated angle - 2 pi index|, guard band 0.25
};

// Winding number of x - f(x) around a circle inside a disk chart.
IndexReport fixed_point_index(const std::function<KPPoint(const KPPoint&)>& map,
                              const KPPoint& p, double radius, std::size_t samples);

struct PathCheckReport {
    double eq1_max_err = 0;  // gamma_a * delta_a = f o gamma_a
    double eq2_max_err = 0;  // delta_b * gamma_b = f o gamma_b
    double eq3_max_err = 0;  // (f o delta_a)(t) = (f o delta_b)(1-t)
};

PathCheckReport kp_nielsen_path_check(int m, int n, std::size_t samples);

struct KPNielsenSummary {
    std::vector<KPPoint> fixed_points;
    std::vector<IndexReport> indices;
    PathCheckReport paths;
    double seam_residual = 0;
    std::size_t classes = 0;
    std::int64_t class_index_sum = 0;
    std::size_t nielsen_number = 0;
};

// Combines the fixed point search, both indices and the path identities.
// Throws NumericalCheckError if any guard fails.
KPNielsenSummary kp_nielsen_summary(int m, int n, std::size_t grid = 256);

// ---------------------------------------------------------------------------
// Charts of X(l,m,n): a sphere band with three boundary circles, disks
// attached along degree l, m, n covers of those circles.
// ---------------------------------------------------------------------------

struct XPoint {
    enum class Chart { Surface, DiskA, DiskB, DiskC };
    Chart chart = Chart::Surface;
    double x = 0, y = 0, z = 0;  // surface: ambient coords; disks: (x,y) = w

    static XPoint surface(double x, double y, double z);
    static XPoint disk(Chart c, std::complex<double> w);
    std::complex<double> w() const { return {x, y}; }
};

std::string to_string(const XPoint& p);

// Boundary circle embeddings: disk A covers the y = -4/5 circle with degree
// l, disk B the x = 4/5 circle with degree m, disk C the y = 4/5 circle
// with degree n.
std::array<double, 3> x_glue(XPoint::Chart chart, int l, int m, int n, std::complex<double> w);

// Reflection z -> -z on the surface, conjugation on each disk.
XPoint x_map(int l, int m, int n, const XPoint& p);

// Max distance between the two evaluations of the map on sampled disk
// boundary points (disk branch vs surface branch through the gluing).
double x_boundary_residual(int l, int m, int n, std::size_t samples_per_disk,
                           ExecPolicy policy = ExecPolicy::parallel);

// Sampled 1-complex: paths of keyed points, coincident keys merged, then
// per-component V - E (exact chi of the sampled graph).
class SampledGraph {
  public:
    struct Key {
        int tag = 0;
        double a = 0, b = 0, c = 0;
    };
    struct Component {
        std::size_t vertices = 0;
        std::size_t edges = 0;
        std::int64_t chi = 0;
    };

    void add_path(const std::vector<Key>& points);
    std::vector<Component> components(double merge_tol) const;

  private:
    std::vector<Key> points_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

struct FixedComponentReport {
    std::size_t component_id = 0;
    std::size_t sampled_vertices = 0;
    std::size_t sampled_edges = 0;
    std::int64_t estimated_chi = 0;
};

// Samples the fixed set of the reflection map (the z = 0 band of the
// surface and the real diameter of each disk), glues the seams and reports
// each connected component with its exact sampled chi.
std::vector<FixedComponentReport> x_fixed_components(int l, int m, int n,
                                                     std::size_t resolution);

struct XNielsenSummary {
    std::vector<FixedComponentReport> components;
    std::vector<std::int64_t> component_indices;  // = chi per component
    std::size_t nielsen_number = 0;
    std::vector<std::string> index_hypotheses;  // recorded, not re-proved
};

XNielsenSummary x_nielsen_summary(int l, int m, int n, std::size_t resolution = 256);

// chi of X(l,m,n): a sphere minus three open disks plus three 2-cells.
int x_euler_characteristic();

}  // namespace bing
