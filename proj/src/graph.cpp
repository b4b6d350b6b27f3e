#include "lforge/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace lforge {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), degrees_(vertex_count, 0) {
    if (vertex_count_ < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (const Edge& e : edges_) {
        if (e.origin < 0 || e.origin >= vertex_count_ || e.terminus < 0 || e.terminus >= vertex_count_)
            throw std::invalid_argument("edge endpoint out of range");
        degrees_[e.origin] += 1;
        degrees_[e.terminus] += 1;  // a loop hits both branches: deg += 2
    }
    UnionFind uf(vertex_count_);
    int components = vertex_count_;
    for (const Edge& e : edges_)
        if (uf.unite(e.origin, e.terminus)) --components;
    if (components != 1) throw std::invalid_argument("graph not connected");
}

bool MultiGraph::is_simple() const {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
        if (e.origin == e.terminus) return false;
        auto key = std::minmax(e.origin, e.terminus);
        if (!seen.insert(key).second) return false;
    }
    return true;
}

MultiGraph build_graph(int vertex_count, const std::vector<Edge>& edge_list) {
    return MultiGraph(vertex_count, edge_list);
}

Eigen::MatrixXi adjacency_matrix(const MultiGraph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
    for (const Edge& e : g.edges()) {
        if (e.origin == e.terminus) {
            a(e.origin, e.origin) += 1;
        } else {
            a(e.origin, e.terminus) += 1;
            a(e.terminus, e.origin) += 1;
        }
    }
    return a;
}

Int path_count(const MultiGraph& g, int steps, int i, int j) {
    if (steps < 0) throw std::invalid_argument("path_count: negative step count");
    const int n = g.vertex_count();
    if (i < 0 || i >= n || j < 0 || j >= n) throw std::invalid_argument("path_count: vertex out of range");
    Eigen::MatrixXi a = adjacency_matrix(g);
    IntMat p = IntMat::identity(n), m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = a(r, c);
    for (int s = 0; s < steps; ++s) p = p * m;
    return p(i, j);
}

long triangle_count(const MultiGraph& g) {
    if (!g.is_simple()) throw std::invalid_argument("triangle_count requires a simple graph");
    Eigen::MatrixXi a = adjacency_matrix(g);
    long tr = (a * a * a).trace();
    return tr / 6;
}

static SpanningTreeDecomposition finish_decomposition(const MultiGraph& g,
                                                      const std::vector<char>& in_tree,
                                                      std::vector<int> tree_edges) {
    SpanningTreeDecomposition t;
    t.tree_edges = std::move(tree_edges);
    for (int id = 0; id < g.edge_count(); ++id)
        if (!in_tree[id]) t.cotree_edges.push_back(id);

    const int n = g.vertex_count();
    t.parent_vertex.assign(n, -1);
    t.parent_edge.assign(n, -1);
    t.parent_sign.assign(n, 0);
    t.depth.assign(n, 0);

    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
    for (int id : t.tree_edges) {
        const Edge& e = g.edge(id);
        adj[e.origin].push_back({e.terminus, id});
        adj[e.terminus].push_back({e.origin, id});
    }
    std::vector<char> visited(n, 0);
    std::queue<int> q;
    q.push(0);
    visited[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [u, id] : adj[v]) {
            if (visited[u]) continue;
            visited[u] = 1;
            t.parent_vertex[u] = v;
            t.parent_edge[u] = id;
            t.parent_sign[u] = (g.edge(id).terminus == u) ? 1 : -1;
            t.depth[u] = t.depth[v] + 1;
            q.push(u);
        }
    }
    return t;
}

SpanningTreeDecomposition spanning_tree(const MultiGraph& g) {
    UnionFind uf(g.vertex_count());
    std::vector<char> in_tree(g.edge_count(), 0);
    std::vector<int> tree_edges;
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        if (e.origin != e.terminus && uf.unite(e.origin, e.terminus)) {
            in_tree[id] = 1;
            tree_edges.push_back(id);
        }
    }
    return finish_decomposition(g, in_tree, std::move(tree_edges));
}

SpanningTreeDecomposition spanning_tree_from_edges(const MultiGraph& g,
                                                   const std::vector<int>& tree_edge_ids) {
    if (static_cast<int>(tree_edge_ids.size()) != g.vertex_count() - 1)
        throw std::invalid_argument("tree edge set has wrong size");
    UnionFind uf(g.vertex_count());
    std::vector<char> in_tree(g.edge_count(), 0);
    for (int id : tree_edge_ids) {
        const Edge& e = g.edge(id);
        if (!uf.unite(e.origin, e.terminus))
            throw std::invalid_argument("edge set is not a spanning tree");
        in_tree[id] = 1;
    }
    return finish_decomposition(g, in_tree, std::vector<int>(tree_edge_ids));
}

std::vector<double> adjacency_spectrum(const MultiGraph& g) {
    Eigen::MatrixXd a = adjacency_matrix(g).cast<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + g.vertex_count());
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

}  // namespace lforge
