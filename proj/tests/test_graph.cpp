#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lforge/graph.hpp"

using namespace lforge;

namespace {

MultiGraph k4() { return MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}}); }
MultiGraph c6() { return MultiGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}); }

// independent oracle: enumerate all k-step walks; a loop is one step option
// (matching the a_vv = 1 display convention of the adjacency matrix)
long walk_count(const MultiGraph& g, int steps, int from, int to) {
    if (steps == 0) return from == to ? 1 : 0;
    long total = 0;
    for (const Edge& e : g.edges()) {
        if (e.origin == e.terminus) {
            if (e.origin == from) total += walk_count(g, steps - 1, e.origin, to);
        } else {
            if (e.origin == from) total += walk_count(g, steps - 1, e.terminus, to);
            if (e.terminus == from) total += walk_count(g, steps - 1, e.origin, to);
        }
    }
    return total;
}

// independent oracle: enumerate 3-cliques
long clique3_count(const MultiGraph& g) {
    Eigen::MatrixXi a = adjacency_matrix(g);
    long count = 0;
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            for (int k = j + 1; k < g.vertex_count(); ++k)
                if (a(i, j) && a(j, k) && a(i, k)) ++count;
    return count;
}

}  // namespace

TEST_CASE("build_graph validates") {
    CHECK_NOTHROW(build_graph(1, {}));  // smallest graph
    CHECK_NOTHROW(k4());
    CHECK_THROWS_WITH_AS(build_graph(3, {{0, 1}}), doctest::Contains("not connected"),
                         std::invalid_argument);
    CHECK_THROWS_AS(build_graph(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("adjacency matrices match the reference examples") {
    Eigen::MatrixXi a = adjacency_matrix(k4());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(a(i, j) == (i == j ? 0 : 1));

    MultiGraph bouquet3(1, {{0, 0}, {0, 0}, {0, 0}});
    CHECK(adjacency_matrix(bouquet3)(0, 0) == 3);
    CHECK(bouquet3.degree(0) == 6);  // each loop counts twice in the degree

    MultiGraph kagome_base(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}, {1, 2}, {2, 0}});
    Eigen::MatrixXi k = adjacency_matrix(kagome_base);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(k(i, j) == (i == j ? 0 : 2));
}

TEST_CASE("adjacency is symmetric with degree row sums") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        std::vector<Edge> edges;
        edges.reserve(n + 3);
        for (int v = 1; v < n; ++v) edges.push_back({static_cast<int>(rng() % v), v});
        for (int extra = 0; extra < 3; ++extra)
            edges.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
        MultiGraph g(n, edges);
        Eigen::MatrixXi a = adjacency_matrix(g);
        CHECK(a == a.transpose().eval());
        for (int v = 0; v < n; ++v) {
            int loops = 0;
            for (const Edge& e : g.edges())
                if (e.origin == v && e.terminus == v) ++loops;
            CHECK(a.row(v).sum() + loops == g.degree(v));
        }
    }
}

TEST_CASE("path_count equals the walk enumeration oracle") {
    CHECK(path_count(k4(), 0, 1, 1) == 1);
    CHECK(path_count(k4(), 0, 1, 2) == 0);
    CHECK(path_count(k4(), 2, 1, 1) == 3);
    CHECK(path_count(k4(), 2, 1, 3) == 2);

    std::vector<MultiGraph> graphs = {k4(), c6(), MultiGraph(1, {{0, 0}, {0, 0}}),
                                      MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}})};
    for (const MultiGraph& g : graphs)
        for (int k = 0; k <= 4; ++k)
            for (int i = 0; i < g.vertex_count(); ++i)
                for (int j = 0; j < g.vertex_count(); ++j)
                    CHECK(path_count(g, k, i, j) == walk_count(g, k, i, j));
}

TEST_CASE("triangle counts") {
    CHECK(triangle_count(k4()) == 4);
    CHECK(triangle_count(c6()) == 0);
    CHECK(triangle_count(MultiGraph(2, {{0, 1}})) == 0);
    CHECK(triangle_count(k4()) == clique3_count(k4()));
    CHECK_THROWS_AS(triangle_count(MultiGraph(1, {{0, 0}})), std::invalid_argument);
}

TEST_CASE("kruskal spanning tree follows stored edge order") {
    MultiGraph path(3, {{0, 1}, {1, 2}});
    SpanningTreeDecomposition t = spanning_tree(path);
    CHECK(t.cotree_edges.empty());

    SpanningTreeDecomposition tk = spanning_tree(k4());
    CHECK(tk.tree_edges == std::vector<int>{0, 1, 2});
    CHECK(tk.cotree_edges == std::vector<int>{3, 4, 5});

    MultiGraph hex(2, {{0, 1}, {0, 1}, {0, 1}});
    SpanningTreeDecomposition th = spanning_tree(hex);
    CHECK(th.tree_edges == std::vector<int>{0});
    CHECK(th.cotree_edges == std::vector<int>{1, 2});
}

TEST_CASE("cotree size is |E| - |V| + 1") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v) edges.push_back({static_cast<int>(rng() % v), v});
        for (int extra = 0, m = rng() % 4; extra < m; ++extra)
            edges.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
        MultiGraph g(n, edges);
        SpanningTreeDecomposition t = spanning_tree(g);
        CHECK(static_cast<int>(t.cotree_edges.size()) == g.edge_count() - g.vertex_count() + 1);
        CHECK(static_cast<int>(t.tree_edges.size()) == g.vertex_count() - 1);
    }
}

TEST_CASE("adjacency spectra") {
    std::vector<double> hex = adjacency_spectrum(c6());
    std::vector<double> expect = {2, 1, 1, -1, -1, -2};
    REQUIRE(hex.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(hex[i] == doctest::Approx(expect[i]).epsilon(1e-9));

    std::vector<double> trivial = adjacency_spectrum(MultiGraph(1, {}));
    CHECK(trivial == std::vector<double>{0.0});

    std::vector<double> k4s = adjacency_spectrum(k4());
    CHECK(k4s[0] == doctest::Approx(3.0));
    for (int i = 1; i < 4; ++i) CHECK(k4s[i] == doctest::Approx(-1.0));
}

TEST_CASE("spectrum moments match traces") {
    std::vector<MultiGraph> graphs = {k4(), c6(), MultiGraph(1, {{0, 0}, {0, 0}, {0, 0}})};
    for (const MultiGraph& g : graphs) {
        Eigen::MatrixXd a = adjacency_matrix(g).cast<double>();
        std::vector<double> ev = adjacency_spectrum(g);
        double s1 = 0, s2 = 0;
        for (double v : ev) {
            s1 += v;
            s2 += v * v;
        }
        CHECK(s1 == doctest::Approx(a.trace()).epsilon(1e-9));
        CHECK(s2 == doctest::Approx((a * a).trace()).epsilon(1e-9));
    }
}
