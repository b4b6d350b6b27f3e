#include "lforge/nanotube.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace lforge {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;
}  // namespace

Eigen::Vector2d graphene_a1() { return {kSqrt3, 0.0}; }
Eigen::Vector2d graphene_a2() { return {kSqrt3 / 2.0, -1.5}; }

static void check_index(const ChiralIndex& ci) {
    if (ci.c1 <= 0 || ci.c2 < 0 || ci.lambda <= 0)
        throw std::invalid_argument("chiral index needs c1 > 0, c2 >= 0, lambda > 0");
}

TubeFrame tube_frame(const ChiralIndex& ci) {
    check_index(ci);
    TubeFrame f;
    const Eigen::Vector2d a1 = graphene_a1(), a2 = graphene_a2();
    f.chiral_vector = ci.c1 * a1 + ci.c2 * a2;
    const int g = std::gcd(ci.c1, ci.c2);
    f.lattice_vector = ((ci.c1 + 2.0 * ci.c2) * a1 - (2.0 * ci.c1 + ci.c2) * a2) / g;
    const int dr = std::gcd(2 * ci.c1 + ci.c2, ci.c1 + 2 * ci.c2);
    f.axial_period = ((ci.c1 + 2.0 * ci.c2) * a1 - (2.0 * ci.c1 + ci.c2) * a2) / dr;
    f.diameter_parameter = std::sqrt(double(ci.c1) * ci.c1 + double(ci.c1) * ci.c2 + double(ci.c2) * ci.c2);
    f.radius = ci.lambda * f.chiral_vector.norm() / (2.0 * kPi);
    return f;
}

long rectangle_atom_count(const ChiralIndex& ci) {
    check_index(ci);
    long l2 = long(ci.c1) * ci.c1 + long(ci.c1) * ci.c2 + long(ci.c2) * ci.c2;
    return 4 * l2 / std::gcd(ci.c1, ci.c2);
}

namespace {

// Integer coordinates of a graphene atom: sublattice s in {0,1} at
// m a1 + n a2 + s * (0,-1).
struct Atom {
    int m, n, s;
};

Eigen::Vector2d atom_position(const Atom& a) {
    Eigen::Vector2d p = a.m * graphene_a1() + a.n * graphene_a2();
    if (a.s) p += Eigen::Vector2d(0.0, -1.0);
    return p;
}

// B neighbors of an A atom (s=0): (m,n,1), (m,n-1,1)+? -- derived from the
// frame: B at (0,-1); A(0,0) also bonds B(0,-1)+a1-a2 = (m+1,n-1,1) and
// B(0,-1)-a2 = (m,n-1,1).
std::array<Atom, 3> a_neighbors(const Atom& a) {
    return {Atom{a.m, a.n, 1}, Atom{a.m + 1, a.n - 1, 1}, Atom{a.m, a.n - 1, 1}};
}

}  // namespace

DiscreteSurface build_swnt(const ChiralIndex& ci, int n_periods) {
    check_index(ci);
    if (n_periods < 1) throw std::invalid_argument("build_swnt: n_periods must be >= 1");
    TubeFrame frame = tube_frame(ci);

    const Eigen::Vector2d c = frame.chiral_vector;
    const Eigen::Vector2d t = frame.axial_period * n_periods;
    const double clen = c.norm(), tlen = t.norm();
    const Eigen::Vector2d cu = c / clen, tu = t / tlen;

    // integer search box generously covering the rectangle (0, c, c+t, t)
    auto strip_coords = [&](const Eigen::Vector2d& p) {
        return Eigen::Vector2d(p.dot(cu), p.dot(tu));
    };
    int span = 2 * (std::abs(ci.c1) + std::abs(ci.c2) + 2) * n_periods + 4;
    std::vector<Atom> atoms;
    std::vector<Eigen::Vector2d> flat;
    auto inside = [&](const Eigen::Vector2d& sc) {
        const double eps = 1e-9;
        return sc.x() >= -eps && sc.x() < clen - eps && sc.y() >= -eps && sc.y() < tlen - eps;
    };
    for (int m = -span; m <= span; ++m)
        for (int n = -span; n <= span; ++n)
            for (int s = 0; s < 2; ++s) {
                Atom a{m, n, s};
                Eigen::Vector2d sc = strip_coords(atom_position(a));
                if (inside(sc)) {
                    atoms.push_back(a);
                    flat.push_back(sc);
                }
            }

    // wrap an arbitrary atom into the strip: index + axial cell offset
    auto locate = [&](const Atom& a) -> std::pair<int, int> {
        Eigen::Vector2d sc = strip_coords(atom_position(a));
        double arc = std::fmod(sc.x(), clen);
        if (arc < -1e-9) arc += clen;
        int axial_cell = static_cast<int>(std::floor(sc.y() / tlen + 1e-12));
        double ax = sc.y() - axial_cell * tlen;
        for (size_t i = 0; i < flat.size(); ++i)
            if (std::abs(flat[i].x() - arc) < 1e-6 && std::abs(flat[i].y() - ax) < 1e-6)
                return {static_cast<int>(i), axial_cell};
        throw std::runtime_error("build_swnt: wrapped atom not found");
    };

    DiscreteSurface s;
    s.lattice_rank = 1;
    s.lattice.row(0) = Eigen::Vector3d(0, 0, ci.lambda * tlen);
    const double r = frame.radius;
    auto rolled = [&](const Eigen::Vector2d& sc) {
        double phi = sc.x() * ci.lambda / r;  // arc length to angle
        return Eigen::Vector3d(r * std::cos(phi), r * std::sin(phi), ci.lambda * sc.y());
    };
    s.positions.reserve(atoms.size());
    for (const Eigen::Vector2d& sc : flat) s.positions.push_back(rolled(sc));

    s.neighbors.resize(atoms.size());
    std::vector<int> filled(atoms.size(), 0);
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].s != 0) continue;
        for (const Atom& nb : a_neighbors(atoms[i])) {
            auto [j, cell] = locate(nb);
            s.neighbors[i][filled[i]++] = {j, Eigen::Vector3i(cell, 0, 0)};
            s.neighbors[j][filled[j]++] = {static_cast<int>(i), Eigen::Vector3i(-cell, 0, 0)};
        }
    }
    for (size_t i = 0; i < atoms.size(); ++i)
        if (filled[i] != 3) throw std::runtime_error("build_swnt: atom is not trivalent");

    // rotation system: counterclockwise around the outward radial direction
    for (size_t i = 0; i < atoms.size(); ++i) {
        Eigen::Vector3d radial(s.positions[i].x(), s.positions[i].y(), 0.0);
        radial.normalize();
        Eigen::Vector3d axis(0, 0, 1);
        Eigen::Vector3d across = axis.cross(radial);
        std::array<double, 3> angle;
        for (int k = 0; k < 3; ++k) {
            Eigen::Vector3d e = s.neighbor_position(static_cast<int>(i), k) - s.positions[i];
            angle[k] = std::atan2(e.dot(axis), e.dot(across));
        }
        std::array<int, 3> order{0, 1, 2};
        std::sort(order.begin(), order.end(), [&](int a, int b) { return angle[a] < angle[b]; });
        auto nbs = s.neighbors[i];
        for (int k = 0; k < 3; ++k) s.neighbors[i][k] = nbs[order[k]];
    }
    validate_surface(s);
    return s;
}

Metallicity classify_metallic(const ChiralIndex& ci) {
    check_index(ci);
    return (ci.c1 % 3 == ci.c2 % 3) ? Metallicity::metal : Metallicity::semiconductor;
}

double length_index(const ChiralIndex& ci, std::pair<double, double> a, std::pair<double, double> b) {
    check_index(ci);
    const double a1 = a.first, b1 = a.second, a2 = b.first;
    double l = std::sqrt(double(ci.c1) * ci.c1 + double(ci.c1) * ci.c2 + double(ci.c2) * ci.c2);
    return kSqrt3 * std::abs(ci.c1 * (a1 - b1) - ci.c2 * (a2 - b1)) / (2.0 * l);
}

std::pair<double, double> graphene_band(const Eigen::Vector2d& xi) {
    double radicand = 3.0 + 2.0 * std::cos(xi.x()) + 2.0 * std::cos(xi.y()) +
                      2.0 * std::cos(xi.x() - xi.y());
    double e = std::sqrt(std::max(radicand, 0.0));
    return {-e, e};
}

std::vector<DiracPoint> dirac_scan(int grid_n, double tol) {
    if (grid_n < 3) throw std::invalid_argument("dirac_scan: grid must be at least 3x3");
    std::vector<DiracPoint> out;
    for (int i = 0; i < grid_n; ++i)
        for (int j = 0; j < grid_n; ++j) {
            Eigen::Vector2d xi(2.0 * kPi * i / grid_n, 2.0 * kPi * j / grid_n);
            auto [lo, hi] = graphene_band(xi);
            if (hi - lo < tol) out.push_back({i, j, xi, hi - lo});
        }
    return out;
}

HuckelReport huckel(const MultiGraph& g, int n_electrons) {
    if (!g.is_simple()) throw std::invalid_argument("huckel requires a simple connected graph");
    const int n = g.vertex_count();
    if (n_electrons < 0 || n_electrons > 2 * n)
        throw std::invalid_argument("huckel: electron count out of range");

    Eigen::MatrixXd a = adjacency_matrix(g).cast<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");

    // descending order
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return solver.eigenvalues()(i) > solver.eigenvalues()(j); });

    HuckelReport rep;
    rep.orbital_energies.resize(n);
    rep.occupations.assign(n, 0.0);
    rep.density.assign(n, 0.0);
    for (int k = 0; k < n; ++k) rep.orbital_energies[k] = solver.eigenvalues()(order[k]);

    const double degeneracy_tol = 1e-9;
    int remaining = n_electrons;
    int k = 0;
    while (k < n && remaining > 0) {
        int shell_end = k + 1;
        while (shell_end < n &&
               rep.orbital_energies[shell_end - 1] - rep.orbital_energies[shell_end] < degeneracy_tol)
            ++shell_end;
        int capacity = 2 * (shell_end - k);
        double fill = std::min<double>(remaining, capacity);
        double per_orbital = fill / (shell_end - k);
        if (fill < capacity) rep.open_shell = true;
        for (int o = k; o < shell_end; ++o) {
            rep.occupations[o] = per_orbital;
            for (int v = 0; v < n; ++v) {
                double psi = solver.eigenvectors()(v, order[o]);
                rep.density[v] += per_orbital * psi * psi;
            }
        }
        remaining -= static_cast<int>(fill);
        k = shell_end;
    }
    int homo_idx = 0;
    for (int o = 0; o < n; ++o)
        if (rep.occupations[o] > 0) homo_idx = o;
    rep.homo = rep.orbital_energies[homo_idx];
    rep.lumo = homo_idx + 1 < n ? rep.orbital_energies[homo_idx + 1] : rep.orbital_energies[homo_idx];
    return rep;
}

}  // namespace lforge
