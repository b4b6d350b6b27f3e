#pragma once
// Single-wall nanotube geometry from chiral indices, metallicity, the length
// index, the graphene tight-binding band and Hueckel molecular orbitals.

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "lforge/graph.hpp"
#include "lforge/surface.hpp"

namespace lforge {

struct ChiralIndex {
    int c1 = 1;      // > 0
    int c2 = 0;      // >= 0
    double lambda = 1.0;
};

/// Graphene frame: a1 = (sqrt3, 0), a2 = (sqrt3/2, -3/2) for bond length 1.
struct TubeFrame {
    Eigen::Vector2d chiral_vector;   // c = c1 a1 + c2 a2
    Eigen::Vector2d lattice_vector;  // t = (1/gcd(c1,c2)) ((c1+2c2) a1 - (2c1+c2) a2)
    Eigen::Vector2d axial_period;    // shortest lattice translation along t
    double diameter_parameter = 0;   // L = sqrt(c1^2 + c1 c2 + c2^2)
    double radius = 0;               // lambda |c| / (2 pi)
};

Eigen::Vector2d graphene_a1();
Eigen::Vector2d graphene_a2();

TubeFrame tube_frame(const ChiralIndex& ci);

/// Atoms of the rolled tube. The quotient cell is the primitive axial period;
/// the paper's lattice vector t is an integer multiple of it. n_periods >= 1
/// stacks that many primitive cells into the periodic quotient.
DiscreteSurface build_swnt(const ChiralIndex& ci, int n_periods = 1);

/// Number of atoms in the rectangle (0, c, c+t, t) spanned by the paper's
/// lattice vector; equals 4 L^2 / gcd(c1, c2).
long rectangle_atom_count(const ChiralIndex& ci);

enum class Metallicity { metal, semiconductor };
Metallicity classify_metallic(const ChiralIndex& ci);

/// sqrt3 |c1 (a1-b1) - c2 (a2-b1)| / (2 sqrt(c1^2+c1c2+c2^2)) for edge-atom
/// coordinate pairs (a1, b1) and (a2, b1).
double length_index(const ChiralIndex& ci, std::pair<double, double> a, std::pair<double, double> b);

/// The two graphene tight-binding bands at wave vector xi.
std::pair<double, double> graphene_band(const Eigen::Vector2d& xi);

struct DiracPoint {
    int i = 0, j = 0;  // grid indices
    Eigen::Vector2d xi;
    double gap = 0.0;
};

/// Scans the xi-torus on an n x n grid and returns the near-zero-gap points.
std::vector<DiracPoint> dirac_scan(int grid_n, double tol = 1e-9);

struct HuckelReport {
    std::vector<double> orbital_energies;  // adjacency eigenvalues, descending
    std::vector<double> occupations;       // electrons per orbital, top-filled
    std::vector<double> density;           // per-vertex electron density
    bool open_shell = false;               // fractional occupation at the Fermi level
    double homo = 0.0, lumo = 0.0;
};

/// Molecular orbitals = eigenvectors of the adjacency matrix. Orbitals are
/// filled two electrons each from the top adjacency eigenvalue down (the
/// Hamiltonian convention E = -lambda |beta| lists the same physics with the
/// opposite sign); degenerate Fermi shells get averaged fractional occupation.
HuckelReport huckel(const MultiGraph& g, int n_electrons);

}  // namespace lforge
