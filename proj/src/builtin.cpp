#include "lforge/builtin.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace lforge {
namespace builtin {

namespace {

EdgeLabels make_labels(std::initializer_list<std::initializer_list<int>> rows) {
    EdgeLabels out;
    for (auto& r : rows) {
        std::vector<Int> v;
        for (int x : r) v.push_back(x);
        out.push_back(std::move(v));
    }
    return out;
}

IntChain chain(std::initializer_list<int> c) {
    IntChain out;
    for (int x : c) out.push_back(x);
    return out;
}

}  // namespace

BaseGraphFixture square() {
    MultiGraph g(1, {{0, 0}, {0, 0}});
    return {g, make_labels({{1, 0}, {0, 1}}), std::nullopt, 2};
}

BaseGraphFixture hexagonal() {
    MultiGraph g(2, {{0, 1}, {0, 1}, {0, 1}});
    EdgeLabels labels = make_labels({{0, 0}, {-1, 1}, {-1, 0}});
    CycleBasis basis = override_basis(g, {chain({1, 0, -1}), chain({0, 1, -1})}, {}, &labels);
    return {g, labels, basis, 2};
}

BaseGraphFixture hexagonal_auto() {
    MultiGraph g(2, {{0, 1}, {0, 1}, {0, 1}});
    return {g, make_labels({{0, 0}, {-1, 1}, {-1, 0}}), std::nullopt, 2};
}

BaseGraphFixture diamond() {
    MultiGraph g(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
    EdgeLabels labels = make_labels({{0, 0, 0}, {-1, 1, 0}, {-1, 0, 1}, {-1, 0, 0}});
    CycleBasis basis = override_basis(
        g, {chain({1, 0, 0, -1}), chain({0, 1, 0, -1}), chain({0, 0, 1, -1})}, {}, &labels);
    return {g, labels, basis, 3};
}

BaseGraphFixture gyroid() {
    MultiGraph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
    EdgeLabels labels = make_labels(
        {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    return {g, labels, std::nullopt, 3};
}

BaseGraphFixture triangular() {
    MultiGraph g(1, {{0, 0}, {0, 0}, {0, 0}});
    EdgeLabels labels = make_labels({{1, 0}, {0, 1}, {-1, -1}});
    CycleBasis basis =
        override_basis(g, {chain({1, 0, 0}), chain({0, 1, 0})}, {chain({1, 1, 1})}, &labels);
    return {g, labels, basis, 2};
}

BaseGraphFixture kagome() {
    MultiGraph g(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}, {1, 2}, {2, 0}});
    EdgeLabels labels =
        make_labels({{0, 0}, {0, 0}, {0, 0}, {-1, 0}, {0, -1}, {1, 1}});
    CycleBasis basis = override_basis(
        g, {chain({1, 0, 0, -1, 0, 0}), chain({0, 1, 0, 0, -1, 0})},
        {chain({1, 1, 1, 0, 0, 0}), chain({0, 0, 0, 1, 1, 1})}, &labels);
    return {g, labels, basis, 2};
}

BaseGraphFixture kagome3d_type1() {
    MultiGraph g(4, {{0, 1}, {0, 2}, {0, 3}, {0, 1}, {0, 2}, {0, 3},
                     {1, 2}, {2, 3}, {3, 1}, {2, 1}, {3, 2}, {1, 3}});
    EdgeLabels labels = make_labels({{0, 0, 0}, {0, 0, 0}, {0, 0, 0},
                                     {-1, 0, 0}, {0, -1, 0}, {0, 0, -1},
                                     {0, 0, 0}, {0, 0, 0}, {0, 0, 0},
                                     {-1, 1, 0}, {0, -1, 1}, {1, 0, -1}});
    CycleBasis basis = override_basis(
        g,
        {chain({1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0}),
         chain({0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0}),
         chain({0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0})},
        {chain({1, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}),
         chain({0, 1, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0}),
         chain({-1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0}),
         chain({0, 0, 0, -1, 1, 0, 0, 0, 0, 1, 0, 0}),
         chain({0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1, 0}),
         chain({0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 1})},
        &labels);
    return {g, labels, basis, 3};
}

BaseGraphFixture kagome3d_type2() {
    MultiGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 0}});
    EdgeLabels labels = make_labels({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0},
                                     {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {1, 1, 1}});
    CycleBasis basis = override_basis(
        g,
        {chain({1, 0, 0, 0, -1, 0, 0, 0}), chain({0, 1, 0, 0, 0, -1, 0, 0}),
         chain({0, 0, 1, 0, 0, 0, -1, 0})},
        {chain({1, 1, 1, 1, 0, 0, 0, 0}), chain({0, 0, 0, 0, 1, 1, 1, 1})}, &labels);
    return {g, labels, basis, 3};
}

BaseGraphFixture cairo() {
    // basketweave numbering; 12 vertices, 20 edges
    std::vector<Edge> edges = {
        {0, 2},  {9, 0},  {4, 0},  {11, 0}, {1, 3},  {1, 4},  {9, 1},
        {10, 1}, {2, 3},  {2, 6},  {3, 7},  {4, 5},  {5, 6},  {5, 7},
        {6, 8},  {11, 6}, {7, 8},  {7, 10}, {8, 9},  {10, 11}};
    MultiGraph g(12, edges);
    EdgeLabels labels = make_labels({{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 0},
                                     {0, 0}, {0, 1}, {0, 1}, {0, 0}, {0, 0},
                                     {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0},
                                     {1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}});
    return {g, labels, std::nullopt, 2};
}

MultiGraph benzene() {
    return MultiGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

namespace {

// rotation order: counterclockwise around the given outward direction
void orient_ccw(DiscreteSurface& s, int v, const Eigen::Vector3d& outward) {
    Eigen::Vector3d n = outward.normalized();
    Eigen::Vector3d ref = s.neighbor_position(v, 0) - s.positions[v];
    ref -= ref.dot(n) * n;
    if (ref.norm() < 1e-12) ref = n.unitOrthogonal();
    ref.normalize();
    Eigen::Vector3d ref2 = n.cross(ref);
    std::array<double, 3> angle;
    for (int k = 0; k < 3; ++k) {
        Eigen::Vector3d e = s.neighbor_position(v, k) - s.positions[v];
        angle[k] = std::atan2(e.dot(ref2), e.dot(ref));
    }
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) { return angle[a] < angle[b]; });
    auto nbs = s.neighbors[v];
    for (int k = 0; k < 3; ++k) s.neighbors[v][k] = nbs[order[k]];
}

DiscreteSurface surface_from_points(const std::vector<Eigen::Vector3d>& pts, double bond_length) {
    DiscreteSurface s;
    s.positions = pts;
    s.neighbors.resize(pts.size());
    std::vector<int> filled(pts.size(), 0);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if ((pts[i] - pts[j]).norm() < bond_length * 1.001) {
                s.neighbors[i][filled[i]++] = {static_cast<int>(j), Eigen::Vector3i::Zero(), -1};
                s.neighbors[j][filled[j]++] = {static_cast<int>(i), Eigen::Vector3i::Zero(), -1};
            }
    for (size_t i = 0; i < pts.size(); ++i)
        if (filled[i] != 3) throw std::runtime_error("surface_from_points: vertex is not trivalent");
    for (size_t i = 0; i < pts.size(); ++i) orient_ccw(s, static_cast<int>(i), s.positions[i]);
    return s;
}

}  // namespace

DiscreteSurface tetrahedron(double circumradius) {
    double a = circumradius / std::sqrt(3.0);
    std::vector<Eigen::Vector3d> pts = {
        {a, a, a}, {a, -a, -a}, {-a, a, -a}, {-a, -a, a}};
    DiscreteSurface s = surface_from_points(pts, (pts[0] - pts[1]).norm());
    validate_surface(s);
    return s;
}

DiscreteSurface cube() {
    std::vector<Eigen::Vector3d> pts;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            for (int sz : {-1, 1}) pts.push_back(0.5 * Eigen::Vector3d(sx, sy, sz));
    DiscreteSurface s = surface_from_points(pts, 1.0);
    validate_surface(s);
    return s;
}

DiscreteSurface theta_graph() {
    DiscreteSurface s;
    s.positions = {{0, 0, 1}, {0, 0, -1}};
    s.neighbors.resize(2);
    // sphere embedding: the cyclic orders at the two poles are mutually
    // reversed, which parallel edges cannot express without explicit twins
    s.neighbors[0] = {SurfaceNeighbor{1, Eigen::Vector3i::Zero(), 0},
                      SurfaceNeighbor{1, Eigen::Vector3i::Zero(), 2},
                      SurfaceNeighbor{1, Eigen::Vector3i::Zero(), 1}};
    s.neighbors[1] = {SurfaceNeighbor{0, Eigen::Vector3i::Zero(), 0},
                      SurfaceNeighbor{0, Eigen::Vector3i::Zero(), 2},
                      SurfaceNeighbor{0, Eigen::Vector3i::Zero(), 1}};
    return s;
}

DiscreteSurface c60() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Eigen::Vector3d> base = {
        {0, 1, 3 * phi}, {1, 2 + phi, 2 * phi}, {2, 1 + 2 * phi, phi}};
    std::set<std::array<long long, 3>> seen;
    std::vector<Eigen::Vector3d> pts;
    auto push = [&](const Eigen::Vector3d& p) {
        std::array<long long, 3> key;
        for (int k = 0; k < 3; ++k) key[k] = llround(p[k] * 1e9);
        if (seen.insert(key).second) pts.push_back(p);
    };
    for (const Eigen::Vector3d& b : base)
        for (int sx : {-1, 1})
            for (int sy : {-1, 1})
                for (int sz : {-1, 1}) {
                    Eigen::Vector3d p(sx * b.x(), sy * b.y(), sz * b.z());
                    push(p);
                    push({p.z(), p.x(), p.y()});
                    push({p.y(), p.z(), p.x()});
                }
    if (pts.size() != 60) throw std::runtime_error("c60: expected 60 vertices");
    DiscreteSurface s = surface_from_points(pts, 2.0);
    validate_surface(s);
    return s;
}

MultiGraph c60_graph() {
    DiscreteSurface s = c60();
    std::vector<Edge> edges;
    for (int v = 0; v < s.vertex_count(); ++v)
        for (const SurfaceNeighbor& nb : s.neighbors[v])
            if (nb.vertex > v) edges.push_back({v, nb.vertex});
    return MultiGraph(60, edges);
}

DiscreteSurface graphene_periodic(int nx, int ny) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("graphene_periodic: need at least 2x2 cells");
    BaseGraphFixture hex = hexagonal();
    CrystalRealization r = realize_max_abelian(hex.graph, hex.basis);

    DiscreteSurface s;
    s.lattice_rank = 2;
    s.lattice.row(0) << nx * r.lattice.rows(0, 0), nx * r.lattice.rows(0, 1), 0.0;
    s.lattice.row(1) << ny * r.lattice.rows(1, 0), ny * r.lattice.rows(1, 1), 0.0;

    const int counts[2] = {nx, ny};
    auto vid = [&](int cx, int cy, int v) { return (cx * ny + cy) * 2 + v; };
    s.positions.resize(2 * nx * ny);
    s.neighbors.resize(2 * nx * ny);
    std::vector<int> filled(2 * nx * ny, 0);
    for (int cx = 0; cx < nx; ++cx)
        for (int cy = 0; cy < ny; ++cy) {
            Eigen::RowVector2d shift = cx * r.lattice.rows.row(0) + cy * r.lattice.rows.row(1);
            for (int v = 0; v < 2; ++v) {
                Eigen::RowVector2d p = r.vertex_positions.row(v) + shift;
                s.positions[vid(cx, cy, v)] = {p.x(), p.y(), 0.0};
            }
        }
    for (int cx = 0; cx < nx; ++cx)
        for (int cy = 0; cy < ny; ++cy)
            for (int e = 0; e < hex.graph.edge_count(); ++e) {
                const Edge& ed = hex.graph.edge(e);
                int cell[2] = {cx + static_cast<int>(r.edge_labels(e, 0).get_si()),
                               cy + static_cast<int>(r.edge_labels(e, 1).get_si())};
                Eigen::Vector3i wrap = Eigen::Vector3i::Zero();
                int target[2];
                for (int k = 0; k < 2; ++k) {
                    int q = cell[k] >= 0 ? cell[k] / counts[k] : -((-cell[k] + counts[k] - 1) / counts[k]);
                    wrap[k] = q;
                    target[k] = cell[k] - q * counts[k];
                }
                int a = vid(cx, cy, ed.origin), b = vid(target[0], target[1], ed.terminus);
                s.neighbors[a][filled[a]++] = {b, wrap, -1};
                s.neighbors[b][filled[b]++] = {a, -wrap, -1};
            }
    for (int i = 0; i < 2 * nx * ny; ++i) {
        if (filled[i] != 3) throw std::runtime_error("graphene_periodic: vertex is not trivalent");
        orient_ccw(s, i, Eigen::Vector3d::UnitZ());
    }
    validate_surface(s);
    return s;
}

// ---------------------------------------------------------------------------
// Mackay-Terrones octagon crystal: eight coronene-like 24-atom patches per
// cubic cell, one per octant, glued corner-to-corner across the coordinate
// planes and across the cell boundary. The necks carry the twelve octagons.

namespace {

struct Patch2D {
    std::vector<Eigen::Vector2d> pos;  // 24 atoms: 6 inner, 6 spoke, 12 rim
    std::vector<std::pair<int, int>> bonds;
    std::vector<int> dangling;  // rim atoms, one open bond each
};

Patch2D coronene_patch() {
    Patch2D p;
    auto dir = [](double deg) {
        double rad = deg * std::numbers::pi / 180.0;
        return Eigen::Vector2d(std::cos(rad), std::sin(rad));
    };
    for (int k = 0; k < 6; ++k) p.pos.push_back(dir(60.0 * k));            // inner: 0..5
    for (int k = 0; k < 6; ++k) p.pos.push_back(2.0 * dir(60.0 * k));      // spoke: 6..11
    for (int k = 0; k < 6; ++k) {                                          // rim: 12+2k, 13+2k
        p.pos.push_back(2.0 * dir(60.0 * k) + dir(60.0 * k + 60.0));
        p.pos.push_back(2.0 * dir(60.0 * k + 60.0) + dir(60.0 * k));
    }
    for (int k = 0; k < 6; ++k) {
        p.bonds.push_back({k, (k + 1) % 6});            // inner ring
        p.bonds.push_back({k, 6 + k});                  // spokes
        p.bonds.push_back({6 + k, 12 + 2 * k});         // rim path
        p.bonds.push_back({12 + 2 * k, 13 + 2 * k});
        p.bonds.push_back({13 + 2 * k, 6 + (k + 1) % 6});
    }
    for (int k = 0; k < 12; ++k) p.dangling.push_back(12 + k);
    return p;
}

}  // namespace

MackayStructure mackay_terrones() {
    const Patch2D patch = coronene_patch();
    // patch center distance and cubic cell chosen so every inter-patch bond
    // has length 1 (junction gap 2g - 8/sqrt6, neck gap L - 2g - 8/sqrt6,
    // measured between facing rim atoms at in-plane radius sqrt7*cos(19.1deg))
    const double rim_reach = 2.5 * 2.0 / std::sqrt(6.0);  // e1-extent of rim atoms
    const double g = (1.0 + 2.0 * rim_reach) / 2.0;       // junction bonds = 1
    const double cell = 2.0 * g + 2.0 * rim_reach + 1.0;  // neck bonds = 1

    // (+++) octant patch: spokes point at the projections of the six +-axes
    const Eigen::Vector3d e1p = Eigen::Vector3d(2, -1, -1) / std::sqrt(6.0);
    const Eigen::Vector3d e2p = Eigen::Vector3d(0, 1, -1) / std::sqrt(2.0);
    std::vector<Eigen::Vector3d> pts;
    std::vector<Eigen::Vector3d> patch_normal;
    for (int sx : {1, -1})
        for (int sy : {1, -1})
            for (int sz : {1, -1}) {
                Eigen::Vector3d sigma(sx, sy, sz);
                for (const Eigen::Vector2d& q : patch.pos) {
                    Eigen::Vector3d p = g * Eigen::Vector3d::Ones() + q.x() * e1p + q.y() * e2p;
                    pts.push_back(p.cwiseProduct(sigma));  // diag(sigma) image of (+++)
                    patch_normal.push_back(sigma / std::sqrt(3.0));
                }
            }

    // intra-patch bonds
    std::vector<Edge> edges;
    EdgeLabels labels;
    for (int pi = 0; pi < 8; ++pi)
        for (auto [a, b] : patch.bonds) {
            edges.push_back({pi * 24 + a, pi * 24 + b});
            labels.push_back({Int(0), Int(0), Int(0)});
        }

    // inter-patch bonds: greedy nearest matching of rim atoms on the torus
    std::vector<int> open;
    for (int pi = 0; pi < 8; ++pi)
        for (int d : patch.dangling) open.push_back(pi * 24 + d);
    std::vector<char> used(pts.size(), 0);
    for (size_t ii = 0; ii < open.size(); ++ii) {
        int i = open[ii];
        if (used[i]) continue;
        int best = -1;
        Eigen::Vector3i best_shift = Eigen::Vector3i::Zero();
        double best_d = 1e18;
        for (size_t jj = 0; jj < open.size(); ++jj) {
            int j = open[jj];
            if (j == i || used[j]) continue;
            if (j / 24 == i / 24) continue;  // ring neighbors are already bonded
            for (int wx = -1; wx <= 1; ++wx)
                for (int wy = -1; wy <= 1; ++wy)
                    for (int wz = -1; wz <= 1; ++wz) {
                        Eigen::Vector3d shift(cell * wx, cell * wy, cell * wz);
                        double d = (pts[j] + shift - pts[i]).norm();
                        if (d < best_d) {
                            best_d = d;
                            best = j;
                            best_shift = {wx, wy, wz};
                        }
                    }
        }
        if (best < 0 || best_d > 1.2)
            throw std::runtime_error("mackay_terrones: bonding failed");
        used[i] = used[best] = 1;
        edges.push_back({i, best});
        labels.push_back({Int(best_shift.x()), Int(best_shift.y()), Int(best_shift.z())});
    }

    MackayStructure m{.graph = MultiGraph(static_cast<int>(pts.size()), edges),
                      .labels = labels,
                      .seed_positions = pts,
                      .cell = cell};

    // rotation system from the seed geometry, CCW around the patch normal
    DiscreteSurface seed;
    seed.positions = pts;
    seed.lattice_rank = 3;
    seed.lattice = cell * Eigen::Matrix3d::Identity();
    seed.neighbors.resize(pts.size());
    std::vector<int> filled(pts.size(), 0);
    for (size_t e = 0; e < edges.size(); ++e) {
        Eigen::Vector3i lab(static_cast<int>(labels[e][0].get_si()),
                            static_cast<int>(labels[e][1].get_si()),
                            static_cast<int>(labels[e][2].get_si()));
        int a = edges[e].origin, b = edges[e].terminus;
        seed.neighbors[a][filled[a]++] = {b, lab, -1};
        seed.neighbors[b][filled[b]++] = {a, -lab, -1};
    }
    for (size_t v = 0; v < pts.size(); ++v) {
        if (filled[v] != 3) throw std::runtime_error("mackay_terrones: vertex is not trivalent");
        orient_ccw(seed, static_cast<int>(v), patch_normal[v]);
    }
    validate_surface(seed);
    m.neighbor_slots.resize(pts.size());
    m.neighbor_labels.resize(pts.size());
    for (size_t v = 0; v < pts.size(); ++v)
        for (int k = 0; k < 3; ++k) {
            m.neighbor_slots[v][k] = seed.neighbors[v][k].vertex;
            m.neighbor_labels[v][k] = seed.neighbors[v][k].label;
        }
    return m;
}

DiscreteSurface mackay_surface(const MackayStructure& m, const CrystalRealization& r) {
    if (r.dimension != 3) throw std::invalid_argument("mackay_surface: need a 3d realization");
    DiscreteSurface s;
    s.lattice_rank = 3;
    s.lattice = r.lattice.rows;
    const int n = r.graph.vertex_count();
    s.positions.resize(n);
    for (int v = 0; v < n; ++v) s.positions[v] = r.vertex_positions.row(v).transpose();
    s.neighbors.resize(n);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < 3; ++k)
            s.neighbors[v][k] = {m.neighbor_slots[v][k], m.neighbor_labels[v][k], -1};
    validate_surface(s);
    return s;
}

}  // namespace builtin
}  // namespace lforge
