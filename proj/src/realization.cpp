#include "lforge/realization.hpp"

#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

namespace lforge {

RatMat project_edges(const RatMat& gram, const CycleBasis& basis, const MultiGraph& g) {
    if (basis.chains.cols() != g.edge_count())
        throw std::invalid_argument("project_edges: basis/graph mismatch");
    // b(e)_i = <e, alpha_i> is just the alpha coefficient matrix itself.
    RatMat bmat = basis.chains.to_rational();
    return gram.solve(bmat);
}

RatMat reduce_period_gram(const RatMat& gram, int d) { return schur_complement(gram, d); }

PeriodLattice cholesky_lattice(const RatMat& b) {
    PeriodLattice lat;
    lat.d = b.rows();
    lat.rows = cholesky_rows(b);
    return lat;
}

namespace {

Eigen::MatrixXd tree_positions(const MultiGraph& g, const SpanningTreeDecomposition& tree,
                               const Eigen::MatrixXd& edge_vectors) {
    const int n = g.vertex_count(), d = static_cast<int>(edge_vectors.cols());
    Eigen::MatrixXd pos = Eigen::MatrixXd::Zero(n, d);
    // parent arrays are BFS order; fill children after parents
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> placed(n, 0);
    placed[0] = 1;
    order.push_back(0);
    for (size_t idx = 0; idx < order.size(); ++idx) {
        for (int v = 0; v < n; ++v)
            if (!placed[v] && tree.parent_vertex[v] == order[idx]) {
                pos.row(v) = pos.row(order[idx]) +
                             tree.parent_sign[v] * edge_vectors.row(tree.parent_edge[v]);
                placed[v] = 1;
                order.push_back(v);
            }
    }
    return pos;
}

CrystalRealization realize_from_basis(const MultiGraph& g, const SpanningTreeDecomposition& tree,
                                      const CycleBasis& basis) {
    const int b = basis.size();
    const int d = basis.period_count;
    if (b == 0 || d == 0) throw std::invalid_argument("no periodicity");

    RatMat gram = gram_matrix(basis);
    RatMat a = project_edges(gram, basis, g);
    RatMat period = reduce_period_gram(gram, d);
    PeriodLattice lat = cholesky_lattice(period);

    CrystalRealization r{.dimension = d, .graph = g};
    r.lattice = lat;
    r.period_gram = period;
    r.projection_coefficients = a;

    r.edge_vectors = Eigen::MatrixXd::Zero(g.edge_count(), d);
    for (int e = 0; e < g.edge_count(); ++e)
        for (int i = 0; i < d; ++i) r.edge_vectors.row(e) += a(i, e).get_d() * lat.rows.row(i);

    r.vertex_positions = tree_positions(g, tree, r.edge_vectors);

    IntMat coords = fundamental_in_basis(g, tree, basis);
    r.edge_labels = IntMat(g.edge_count(), d);
    for (size_t l = 0; l < tree.cotree_edges.size(); ++l)
        for (int k = 0; k < d; ++k)
            r.edge_labels(tree.cotree_edges[l], k) = coords(static_cast<int>(l), k);

    double raw = r.edge_vectors.squaredNorm();
    r.standardness_constant = raw / d;
    return r;
}

}  // namespace

CrystalRealization realize_max_abelian(const MultiGraph& g,
                                       const std::optional<CycleBasis>& basis_override) {
    SpanningTreeDecomposition tree = spanning_tree(g);
    if (tree.cotree_edges.empty()) throw std::invalid_argument("no periodicity");
    CycleBasis basis = basis_override ? *basis_override : cycle_basis(g, tree);
    if (basis.period_count != basis.size())
        throw std::invalid_argument("maximal abelian realization needs a full period basis");
    return realize_from_basis(g, tree, basis);
}

CrystalRealization realize_periodic(const MultiGraph& g, const EdgeLabels& labels,
                                    const std::optional<CycleBasis>& basis_override) {
    SpanningTreeDecomposition tree = spanning_tree(g);
    CycleBasis basis = basis_override ? *basis_override : label_split_basis(g, labels);
    return realize_from_basis(g, tree, basis);
}

CrystalRealization realize_harmonic_direct(const MultiGraph& g, const EdgeLabels& labels) {
    validate_labels(g, labels);  // rank and unimodularity of the label map
    const int n = g.vertex_count();
    const int d = static_cast<int>(labels.empty() ? 0 : labels[0].size());

    // Balance system for vertices 1..n-1, with x_v = gamma_v * (p_1 ... p_d)
    // and x_{v0} = 0. Row v: deg(v) gamma_v - sum of neighbour gammas = label sum.
    std::vector<std::map<int, Rat>> lap(n - 1);
    RatMat rhs(n - 1, d);
    auto add = [&](int row, int v, int val) {
        if (v == 0) return;  // pinned at the origin
        auto it = lap[row].find(v - 1);
        if (it == lap[row].end())
            lap[row][v - 1] = val;
        else if ((it->second += val) == 0)
            lap[row].erase(it);
    };
    for (int v = 1; v < n; ++v) {
        const int row = v - 1;
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (ed.origin == v) {  // oriented out: neighbour value gamma_t + n_e
                add(row, v, 1);
                add(row, ed.terminus, -1);
                for (int k = 0; k < d; ++k) rhs(row, k) += labels[e][k];
            }
            if (ed.terminus == v) {  // reversed orientation: gamma_o - n_e
                add(row, v, 1);
                add(row, ed.origin, -1);
                for (int k = 0; k < d; ++k) rhs(row, k) -= labels[e][k];
            }
        }
    }
    RatMat gamma_free = solve_sparse_spd(std::move(lap), rhs);
    RatMat gamma(n, d);
    for (int v = 1; v < n; ++v)
        for (int k = 0; k < d; ++k) gamma(v, k) = gamma_free(v - 1, k);

    // Edge vectors in the abstract period basis, and M = sum m_e m_e^T.
    RatMat m_edges(g.edge_count(), d), m(d, d);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        for (int k = 0; k < d; ++k)
            m_edges(e, k) = gamma(ed.terminus, k) - gamma(ed.origin, k) + labels[e][k];
    }
    for (int e = 0; e < g.edge_count(); ++e)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m(i, j) += m_edges(e, i) * m_edges(e, j);

    Rat detm = m.determinant();
    if (detm == 0) throw std::runtime_error("degenerate harmonic image");
    // Standardness forces Gram(p) = c M^{-1}; Vol = 1 picks c = det(M)^(1/d).
    RatMat minv = m.inverse();
    double c = std::pow(detm.get_d(), 1.0 / d);
    Eigen::MatrixXd gramd = minv.to_double() * c;

    CrystalRealization r{.dimension = d, .graph = g};
    r.lattice.d = d;
    r.lattice.rows = cholesky_rows(gramd);
    r.period_gram = minv;  // exact up to the det-normalizing scale c
    r.harmonic_coefficients = gamma;

    r.vertex_positions = gamma.to_double() * r.lattice.rows;
    r.edge_vectors = m_edges.to_double() * r.lattice.rows;
    r.edge_labels = IntMat(g.edge_count(), d);
    for (int e = 0; e < g.edge_count(); ++e)
        for (int k = 0; k < d; ++k) r.edge_labels(e, k) = labels[e][k];
    r.standardness_constant = r.edge_vectors.squaredNorm() / d;
    return r;
}

StandardnessReport verify_standard(const CrystalRealization& r) {
    const int d = r.dimension;
    const MultiGraph& g = r.graph;
    StandardnessReport rep;

    Eigen::MatrixXd vertex_sum = Eigen::MatrixXd::Zero(g.vertex_count(), d);
    Eigen::VectorXd oriented_sum = Eigen::VectorXd::Zero(d);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        vertex_sum.row(ed.origin) += r.edge_vectors.row(e);
        vertex_sum.row(ed.terminus) -= r.edge_vectors.row(e);
        // oriented E_0 carries both e and its reversal; the pair cancels
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        rep.balance_residual = std::max(rep.balance_residual, vertex_sum.row(v).norm());
    rep.edge_sum_residual = oriented_sum.norm();

    Eigen::MatrixXd t = r.edge_vectors.transpose() * r.edge_vectors;
    rep.c = t.trace() / d;
    rep.eet_residual = (t - rep.c * Eigen::MatrixXd::Identity(d, d)).norm();
    return rep;
}

EnergyReport energy(const CrystalRealization& r) {
    EnergyReport rep;
    rep.raw_energy = r.edge_vectors.squaredNorm();
    rep.volume = r.lattice.volume();
    // scale-invariant normalization; at Vol = 1 both energies coincide and
    // the standard realization satisfies raw = c d
    rep.normalized_energy = std::pow(rep.volume, -2.0 / r.dimension) * rep.raw_energy;
    return rep;
}

CrystalRealization scaled(const CrystalRealization& r, double s) {
    CrystalRealization out = r;
    out.vertex_positions *= s;
    out.edge_vectors *= s;
    out.lattice.rows *= s;
    out.standardness_constant = out.edge_vectors.squaredNorm() / out.dimension;
    return out;
}

CrystalRealization det_normalized(const CrystalRealization& r) {
    return scaled(r, std::pow(r.lattice.volume(), -1.0 / r.dimension));
}

std::vector<double> edge_gram_multiset(const CrystalRealization& r) {
    std::vector<double> vals;
    const int m = r.graph.edge_count();
    vals.reserve(m * (m + 1) / 2);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) vals.push_back(r.edge_vectors.row(i).dot(r.edge_vectors.row(j)));
    std::sort(vals.begin(), vals.end());
    return vals;
}

SupercellGeometry supercell(const CrystalRealization& r, const std::vector<int>& counts, bool wrap) {
    const int d = r.dimension;
    if (static_cast<int>(counts.size()) != d)
        throw std::invalid_argument("supercell: need one count per lattice dimension");
    long total = 1;
    for (int c : counts) {
        if (c < 1) throw std::invalid_argument("supercell: counts must be positive");
        total *= c;
    }
    const int nv = r.graph.vertex_count();

    SupercellGeometry out;
    out.positions.resize(total * nv, d);
    out.base_vertex.resize(total * nv);
    std::vector<int> cell(d, 0);
    auto cell_index = [&](const std::vector<int>& c) {
        long idx = 0;
        for (int k = 0; k < d; ++k) idx = idx * counts[k] + c[k];
        return idx;
    };
    for (long ci = 0; ci < total; ++ci) {
        Eigen::RowVectorXd shift = Eigen::RowVectorXd::Zero(d);
        for (int k = 0; k < d; ++k) shift += cell[k] * r.lattice.rows.row(k);
        for (int v = 0; v < nv; ++v) {
            out.positions.row(ci * nv + v) = r.vertex_positions.row(v) + shift;
            out.base_vertex[ci * nv + v] = v;
        }
        // advance odometer
        for (int k = d - 1; k >= 0; --k) {
            if (++cell[k] < counts[k]) break;
            cell[k] = 0;
        }
    }
    std::fill(cell.begin(), cell.end(), 0);
    for (long ci = 0; ci < total; ++ci) {
        for (int e = 0; e < r.graph.edge_count(); ++e) {
            const Edge& ed = r.graph.edge(e);
            std::vector<int> target = cell;
            bool inside = true;
            for (int k = 0; k < d; ++k) {
                target[k] += static_cast<int>(r.edge_labels(e, k).get_si());
                if (target[k] < 0 || target[k] >= counts[k]) {
                    if (!wrap) { inside = false; break; }
                    target[k] = ((target[k] % counts[k]) + counts[k]) % counts[k];
                }
            }
            if (inside)
                out.segments.push_back({static_cast<int>(ci * nv + ed.origin),
                                        static_cast<int>(cell_index(target) * nv + ed.terminus)});
        }
        for (int k = d - 1; k >= 0; --k) {
            if (++cell[k] < counts[k]) break;
            cell[k] = 0;
        }
    }
    return out;
}

int periodic_girth(const MultiGraph& g, const EdgeLabels& labels, int radius_cap) {
    const int d = static_cast<int>(labels.empty() ? 0 : labels[0].size());
    if (static_cast<int>(labels.size()) != g.edge_count())
        throw std::invalid_argument("periodic_girth: one label per edge required");

    // adjacency as oriented edge instances: (edge id, +1/-1)
    struct Arc { int edge, dir, to; };
    std::vector<std::vector<Arc>> out(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        out[g.edge(e).origin].push_back({e, +1, g.edge(e).terminus});
        out[g.edge(e).terminus].push_back({e, -1, g.edge(e).origin});
    }

    int best = radius_cap + 1;
    using State = std::vector<int>;  // [vertex, offset...]
    for (int root = 0; root < g.vertex_count(); ++root) {
        std::map<State, int> id_of;
        std::vector<int> dist;
        std::vector<std::pair<int, int>> via;  // (edge, dir) used to reach the state
        std::vector<State> states;
        auto intern = [&](const State& s) {
            auto it = id_of.find(s);
            if (it != id_of.end()) return it->second;
            int id = static_cast<int>(states.size());
            id_of.emplace(s, id);
            states.push_back(s);
            dist.push_back(-1);
            via.push_back({-1, 0});
            return id;
        };
        State start(1 + d, 0);
        start[0] = root;
        int s0 = intern(start);
        dist[s0] = 0;
        std::queue<int> q;
        q.push(s0);
        while (!q.empty()) {
            int cur = q.front();
            q.pop();
            if (2 * dist[cur] + 1 > best || dist[cur] >= (radius_cap + 1) / 2 + 1) continue;
            const State sc = states[cur];  // copy: intern() may reallocate
            for (const Arc& arc : out[sc[0]]) {
                if (via[cur].first == arc.edge && via[cur].second == -arc.dir) continue;  // backtrack
                State ns(sc);
                ns[0] = arc.to;
                for (int k = 0; k < d; ++k) ns[1 + k] += arc.dir * static_cast<int>(labels[arc.edge][k].get_si());
                int nid = intern(ns);
                if (dist[nid] < 0) {
                    dist[nid] = dist[cur] + 1;
                    via[nid] = {arc.edge, arc.dir};
                    q.push(nid);
                } else {
                    // non-tree arc closes a cycle through the root
                    int len = dist[cur] + dist[nid] + 1;
                    if (len < best) best = len;
                }
            }
        }
    }
    if (best > radius_cap) throw std::runtime_error("girth exceeds cap");
    return best;
}

}  // namespace lforge
