#pragma once
// Finite connected multigraphs and their combinatorial primitives.

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "lforge/rational.hpp"

namespace lforge {

struct Edge {
    int origin;
    int terminus;
};

/// Finite connected multigraph. Loops and parallel edges are allowed; each
/// undirected edge is stored once with its file/stored orientation, and the
/// reversal is addressed by a sign flag. Edge order is load-bearing: every
/// downstream tie-break (Kruskal scan, cotree order, basis order) follows it.
class MultiGraph {
public:
    MultiGraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[id]; }

    /// deg(v); a loop contributes 2.
    int degree(int v) const { return degrees_[v]; }

    bool is_simple() const;  // no loops, no parallel edges

private:
    int vertex_count_;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
};

struct SpanningTreeDecomposition {
    std::vector<int> tree_edges;    // |V|-1 edge ids, in acceptance order
    std::vector<int> cotree_edges;  // |E|-|V|+1 edge ids, in stored order
    // rooted at vertex 0
    std::vector<int> parent_vertex;  // -1 at root
    std::vector<int> parent_edge;    // edge id towards parent; -1 at root
    std::vector<int> parent_sign;    // +1 if parent_edge points parent -> v
    std::vector<int> depth;
};

MultiGraph build_graph(int vertex_count, const std::vector<Edge>& edge_list);

/// a_ij = number of edges between v_i and v_j; a loop shows up once on the
/// diagonal (display convention; it still adds 2 to the degree).
Eigen::MatrixXi adjacency_matrix(const MultiGraph& g);

/// (A^k)_{ij}, exact.
Int path_count(const MultiGraph& g, int steps, int i, int j);

/// trace(A^3)/6. Requires a simple graph.
long triangle_count(const MultiGraph& g);

/// Kruskal on unweighted edges in stored order.
SpanningTreeDecomposition spanning_tree(const MultiGraph& g);

/// Same decomposition built from a caller-chosen tree edge set.
SpanningTreeDecomposition spanning_tree_from_edges(const MultiGraph& g,
                                                   const std::vector<int>& tree_edge_ids);

/// Eigenvalues of the adjacency matrix, descending.
std::vector<double> adjacency_spectrum(const MultiGraph& g);

}  // namespace lforge
