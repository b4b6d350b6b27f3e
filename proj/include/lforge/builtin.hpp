#pragma once
// Built-in structures used by fixtures and tests: the paper-style base graphs
// with their hand-picked bases and labels, plus reference trivalent surfaces
// (polyhedra, C60, graphene sheets, the Mackay-Terrones octagon crystal).

#include <optional>
#include <string>

#include "lforge/homology.hpp"
#include "lforge/realization.hpp"
#include "lforge/surface.hpp"

namespace lforge {
namespace builtin {

struct BaseGraphFixture {
    MultiGraph graph;
    EdgeLabels labels;                       // empty when the crystal is maximal abelian
    std::optional<CycleBasis> basis;         // paper basis override when it matters
    int dimension = 0;
};

BaseGraphFixture square();
BaseGraphFixture hexagonal();        // paper basis alpha_i = e_i - e_3
BaseGraphFixture hexagonal_auto();   // automatic fundamental basis
BaseGraphFixture diamond();          // paper basis alpha_i = e_i - e_4
BaseGraphFixture gyroid();           // K4; the automatic basis matches the paper
BaseGraphFixture triangular();
BaseGraphFixture kagome();
BaseGraphFixture kagome3d_type1();
BaseGraphFixture kagome3d_type2();
BaseGraphFixture cairo();

MultiGraph benzene();
MultiGraph c60_graph();

/// Regular tetrahedron with the given circumradius.
DiscreteSurface tetrahedron(double circumradius = 1.0);
/// Axis-aligned cube with unit edge (circumradius sqrt(3)/2).
DiscreteSurface cube();
/// Two vertices joined by three edges, embedded as a sphere graph.
DiscreteSurface theta_graph();
/// Truncated-icosahedron C60, all edges of length 2.
DiscreteSurface c60();
/// Torus-periodic graphene sheet, nx x ny cells of the standard realization.
DiscreteSurface graphene_periodic(int nx = 3, int ny = 3);

struct MackayStructure {
    MultiGraph graph;
    EdgeLabels labels;                                    // Z^3
    std::vector<std::array<int, 3>> neighbor_slots;      // rotation system, per vertex
    std::vector<std::array<Eigen::Vector3i, 3>> neighbor_labels;
    std::vector<Eigen::Vector3d> seed_positions;          // construction geometry
    double cell = 0.0;
};

/// Trivalent octagon-hexagon crystal on the primitive cubic lattice
/// (192 vertices, 288 edges, 12 octagons and 80 hexagons per cell).
MackayStructure mackay_terrones();

/// Periodic trivalent surface from a 3-dimensional realization of a trivalent
/// graph, with the rotation order taken from the reference structure.
DiscreteSurface mackay_surface(const MackayStructure& m, const CrystalRealization& r);

}  // namespace builtin
}  // namespace lforge
