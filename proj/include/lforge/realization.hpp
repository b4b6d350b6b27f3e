#pragma once
// Standard realizations of topological crystals: the homology-projection
// solver (maximal abelian and generic) and the direct harmonic solver, plus
// verification, energies, supercells and the girth of the periodic graph.

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "lforge/homology.hpp"

namespace lforge {

/// Period lattice in the canonical gauge: rows of a lower-triangular matrix
/// with positive diagonal, row i = coordinates of period vector beta_i.
struct PeriodLattice {
    int d = 0;
    Eigen::MatrixXd rows;

    double volume() const { return std::abs(rows.determinant()); }
};

struct CrystalRealization {
    int dimension = 0;
    MultiGraph graph;
    Eigen::MatrixXd vertex_positions;        // |V| x d, v0 at the origin
    Eigen::MatrixXd edge_vectors;            // |E| x d
    IntMat edge_labels;                      // |E| x d; endpoint(e) = pos(t) + label*rows
    PeriodLattice lattice;
    double standardness_constant = 0.0;      // c with sum ee^T = c I (one orientation)

    RatMat period_gram;                      // exact B (= A when d = b)
    RatMat projection_coefficients;          // exact a(e), b x |E| (homology solver)
    RatMat harmonic_coefficients;            // exact |V| x d (direct solver)

    /// Endpoint of edge e: position(o(e)) + edge vector.
    Eigen::VectorXd edge_endpoint(int e) const {
        return vertex_positions.row(graph.edge(e).origin).transpose() + edge_vectors.row(e).transpose();
    }
};

struct StandardnessReport {
    double balance_residual = 0.0;   // max over vertices of |sum over E_v of e|
    double edge_sum_residual = 0.0;  // |sum over oriented E_0 of e|
    double eet_residual = 0.0;       // ||sum ee^T - cI||_F, one orientation per edge
    double c = 0.0;
};

struct EnergyReport {
    double raw_energy = 0.0;         // sum |e|^2 over one orientation
    double normalized_energy = 0.0;  // Vol^{-2/d} * raw; invariant under rescaling
    double volume = 0.0;
};

/// Exact a(e) = A^{-1} b(e) with b(e)_i = <e, alpha_i>; columns indexed by edge.
RatMat project_edges(const RatMat& gram, const CycleBasis& basis, const MultiGraph& g);

/// Schur complement B = A11 - A12 A22^{-1} A21 for the leading d block.
RatMat reduce_period_gram(const RatMat& gram, int d);

/// Lower-triangular lattice with rows * rows^T = B.
PeriodLattice cholesky_lattice(const RatMat& b);

/// Standard realization of the maximal abelian cover (d = b). An explicit
/// basis override reproduces the paper-style hand-picked bases.
CrystalRealization realize_max_abelian(const MultiGraph& g,
                                       const std::optional<CycleBasis>& basis_override = std::nullopt);

/// Standard realization of the d-dimensional crystal given edge labels.
CrystalRealization realize_periodic(const MultiGraph& g, const EdgeLabels& labels,
                                    const std::optional<CycleBasis>& basis_override = std::nullopt);

/// Independent route: solve the per-vertex balance system with the period
/// vectors kept abstract, then pick the lattice Gram that makes the placement
/// standard, normalized to det = 1.
CrystalRealization realize_harmonic_direct(const MultiGraph& g, const EdgeLabels& labels);

StandardnessReport verify_standard(const CrystalRealization& r);
EnergyReport energy(const CrystalRealization& r);

/// Uniform rescale (positions, edge vectors and lattice) by factor s.
CrystalRealization scaled(const CrystalRealization& r, double s);
/// Rescaled so the lattice has |det| = 1.
CrystalRealization det_normalized(const CrystalRealization& r);

/// Sorted multiset of pairwise edge-vector inner products, the congruence
/// invariant shared by both solvers.
std::vector<double> edge_gram_multiset(const CrystalRealization& r);

struct SupercellGeometry {
    Eigen::MatrixXd positions;                  // (|V| * prod counts) x d
    std::vector<std::pair<int, int>> segments;  // index pairs into positions
    std::vector<int> base_vertex;               // originating base vertex per point
};

/// All vertex copies x_v + lattice * n over the count box; edges that leave the
/// box are wrapped around when `wrap` is set and dropped otherwise.
SupercellGeometry supercell(const CrystalRealization& r, const std::vector<int>& counts, bool wrap = false);

/// Length of the shortest non-backtracking closed path in the periodic lift.
/// Throws if no cycle closes within radius_cap edges.
int periodic_girth(const MultiGraph& g, const EdgeLabels& labels, int radius_cap = 20);

}  // namespace lforge
