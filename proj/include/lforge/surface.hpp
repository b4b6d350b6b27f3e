#pragma once
// Trivalent discrete surfaces in R^3: per-vertex normals, fundamental forms,
// Gauss/mean curvature, local areas and their first variation, the minimal
// condition and a relaxation iteration, face tracing and Euler statistics.

#include <Eigen/Dense>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace lforge {

struct SurfaceNeighbor {
    int vertex = -1;
    Eigen::Vector3i label = Eigen::Vector3i::Zero();  // translation cell, zero when aperiodic
    int twin = -1;  // slot of the reverse edge at `vertex`; -1 = resolve automatically
};

/// Trivalent geometric graph in 3-space, optionally periodic. The stored
/// neighbor order at each vertex is a rotation system and fixes the normal
/// sign; neighbor positions are x_j + lattice^T * label.
struct DiscreteSurface {
    std::vector<Eigen::Vector3d> positions;
    std::vector<std::array<SurfaceNeighbor, 3>> neighbors;
    int lattice_rank = 0;
    Eigen::Matrix3d lattice = Eigen::Matrix3d::Zero();  // rows 0..rank-1 are periods

    Eigen::Vector3d neighbor_position(int v, int slot) const {
        const SurfaceNeighbor& nb = neighbors[v][slot];
        return positions[nb.vertex] + lattice.transpose() * nb.label.cast<double>();
    }
    int vertex_count() const { return static_cast<int>(positions.size()); }
    int edge_count() const { return 3 * vertex_count() / 2; }
};

/// Checks trivalence bookkeeping, neighbor symmetry (with negated labels) and
/// linear independence of the edge vectors at every vertex.
void validate_surface(const DiscreteSurface& s);

struct VertexGeometry {
    std::array<Eigen::Vector3d, 3> edge;  // e_i = x_i - x
    Eigen::Vector3d normal;
    Eigen::Matrix2d first_form;
    Eigen::Matrix2d second_form;  // not symmetric in general
    double gauss = 0.0;
    double mean = 0.0;
    double local_area = 0.0;  // (1/2)|e1 x e2 + e2 x e3 + e3 x e1|
};

Eigen::Vector3d vertex_normal(const DiscreteSurface& s, int v);
VertexGeometry vertex_geometry(const DiscreteSurface& s, int v);

struct CurvatureReport {
    std::vector<double> gauss;
    std::vector<double> mean;
    std::vector<double> local_area;
    double total_area = 0.0;
};

CurvatureReport curvature_map(const DiscreteSurface& s);

/// || Pi(n2-n1) x Pi(n3-n1) - K (e2-e1) x (e3-e1) ||; an algebraic identity,
/// so it vanishes on any non-degenerate vertex.
double gauss_identity_residual(const DiscreteSurface& s, int v);

struct AreaVariationPoint {
    double t = 0.0;
    double finite_difference = 0.0;  // (A(+t) - A(-t)) / 2t with the frozen normal field
    double discrepancy = 0.0;        // |fd - (-2 sum H A)|
};

struct AreaVariationReport {
    double analytic = 0.0;  // -2 sum H(x) A(x)
    std::vector<AreaVariationPoint> points;
};

AreaVariationReport area_first_variation_check(const DiscreteSurface& s, const std::vector<double>& t_values);

struct MinimalResidual {
    double max_mean = 0.0;    // max |H|
    double max_system = 0.0;  // max norm of the cross-product linear system
    std::vector<double> system;
};

MinimalResidual minimal_residual(const DiscreteSurface& s);

struct RelaxOptions {
    std::set<int> fixed_vertices;
    bool lattice_fixed = false;  // counts as a constraint for periodic surfaces
    int max_iters = 200;
    double tol = 1e-10;
    double step = 0.5;
};

struct RelaxResult {
    DiscreteSurface surface;
    std::vector<double> max_mean_history;  // max|H| after each accepted step
    bool converged = false;
};

RelaxResult relax_to_minimal(const DiscreteSurface& s, const RelaxOptions& opts);

/// Faces of the rotation system: from the oriented edge (u -> v), the next
/// edge leaves v along the neighbor following u in v's cyclic order.
struct Face {
    std::vector<int> vertices;  // in traversal order
};

std::vector<Face> trace_faces(const DiscreteSurface& s);

struct EulerStats {
    std::map<int, int> n_k;  // face-size histogram
    int vertex_count = 0;
    int edge_count = 0;
    int face_count = 0;
    int chi_from_counts = 0;     // F - E + V
    double chi_from_formula = 0; // sum (1 - k/6) N_k
};

EulerStats euler_stats(const std::vector<Face>& faces, int vertex_count, int edge_count);

}  // namespace lforge
