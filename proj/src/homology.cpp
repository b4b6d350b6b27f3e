#include "lforge/homology.hpp"

#include <stdexcept>

namespace lforge {

std::vector<Int> boundary(const MultiGraph& g, const IntChain& chain) {
    if (static_cast<int>(chain.size()) != g.edge_count())
        throw std::invalid_argument("boundary: chain dimension mismatch");
    std::vector<Int> b(g.vertex_count(), Int(0));
    for (int e = 0; e < g.edge_count(); ++e) {
        if (chain[e] == 0) continue;
        b[g.edge(e).terminus] += chain[e];
        b[g.edge(e).origin] -= chain[e];
    }
    return b;
}

std::vector<Rat> boundary(const MultiGraph& g, const ChainVec& chain) {
    if (static_cast<int>(chain.size()) != g.edge_count())
        throw std::invalid_argument("boundary: chain dimension mismatch");
    std::vector<Rat> b(g.vertex_count(), Rat(0));
    for (int e = 0; e < g.edge_count(); ++e) {
        if (chain[e] == 0) continue;
        b[g.edge(e).terminus] += chain[e];
        b[g.edge(e).origin] -= chain[e];
    }
    return b;
}

IntChain fundamental_cycle(const MultiGraph& g, const SpanningTreeDecomposition& tree, int cotree_edge) {
    IntChain chain(g.edge_count(), Int(0));
    const Edge& e = g.edge(cotree_edge);
    chain[cotree_edge] += 1;
    // tree path t(e) -> o(e): walk both endpoints up to their meeting point
    int a = e.terminus, b = e.origin;
    while (a != b) {
        if (tree.depth[a] >= tree.depth[b]) {
            chain[tree.parent_edge[a]] -= tree.parent_sign[a];  // step a -> parent(a)
            a = tree.parent_vertex[a];
        } else {
            chain[tree.parent_edge[b]] += tree.parent_sign[b];  // step parent(b) -> b
            b = tree.parent_vertex[b];
        }
    }
    return chain;
}

CycleBasis cycle_basis(const MultiGraph& g, const SpanningTreeDecomposition& tree) {
    const int b = static_cast<int>(tree.cotree_edges.size());
    CycleBasis basis;
    basis.chains = IntMat(b, g.edge_count());
    basis.period_count = b;
    for (int i = 0; i < b; ++i) {
        IntChain c = fundamental_cycle(g, tree, tree.cotree_edges[i]);
        for (int e = 0; e < g.edge_count(); ++e) basis.chains(i, e) = c[e];
    }
    return basis;
}

Rat chain_inner_product(const ChainVec& a, const ChainVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("chain_inner_product: dimension mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int chain_inner_product(const IntChain& a, const IntChain& b) {
    if (a.size() != b.size()) throw std::invalid_argument("chain_inner_product: dimension mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatMat gram_matrix(const CycleBasis& basis) {
    IntMat gi = basis.chains * basis.chains.transpose();
    RatMat a = gi.to_rational();
    if (a.determinant() == 0) throw std::runtime_error("gram_matrix: dependent basis");
    return a;
}

std::vector<Int> label_of_chain(const IntChain& chain, const EdgeLabels& labels) {
    if (chain.size() != labels.size()) throw std::invalid_argument("label_of_chain: size mismatch");
    const size_t d = labels.empty() ? 0 : labels[0].size();
    std::vector<Int> out(d, Int(0));
    for (size_t e = 0; e < chain.size(); ++e) {
        if (chain[e] == 0) continue;
        for (size_t k = 0; k < d; ++k) out[k] += chain[e] * labels[e][k];
    }
    return out;
}

namespace {

IntChain row_chain(const IntMat& m, int row) {
    IntChain c(m.cols());
    for (int j = 0; j < m.cols(); ++j) c[j] = m(row, j);
    return c;
}

// Pairwise size reduction of the kernel rows (in the chain norm), plus a sign
// convention: first nonzero coefficient positive.
void reduce_kernel_rows(IntMat& chains, int from_row) {
    const int b = chains.rows();
    bool changed = true;
    int guard = 0;
    while (changed && guard++ < 64) {
        changed = false;
        for (int i = from_row; i < b; ++i) {
            for (int j = from_row; j < b; ++j) {
                if (i == j) continue;
                IntChain ci = row_chain(chains, i), cj = row_chain(chains, j);
                Int num = chain_inner_product(ci, cj);
                Int den = chain_inner_product(cj, cj);
                if (den == 0) continue;
                // nearest integer of num/den
                Int two_num = 2 * num;
                Int q = (two_num + (two_num >= 0 ? den : -den)) / (2 * den);
                if (q == 0) continue;
                for (int e = 0; e < chains.cols(); ++e) chains(i, e) -= q * chains(j, e);
                changed = true;
            }
        }
    }
    for (int i = from_row; i < b; ++i) {
        for (int e = 0; e < chains.cols(); ++e) {
            if (chains(i, e) == 0) continue;
            if (chains(i, e) < 0)
                for (int k = e; k < chains.cols(); ++k) chains(i, k) = -chains(i, k);
            break;
        }
    }
}

}  // namespace

namespace {

CycleBasis label_split_impl(const MultiGraph& g, const EdgeLabels& labels, bool build_basis) {
    if (static_cast<int>(labels.size()) != g.edge_count())
        throw std::invalid_argument("label_split_basis: one label per edge required");
    const int d = labels.empty() ? 0 : static_cast<int>(labels[0].size());
    for (const auto& l : labels)
        if (static_cast<int>(l.size()) != d) throw std::invalid_argument("label dimension mismatch");

    SpanningTreeDecomposition tree = spanning_tree(g);
    CycleBasis fundamental = cycle_basis(g, tree);
    const int b = fundamental.size();
    if (d > b) throw std::runtime_error("labels do not span Z^d");

    IntMat lmat(d, b);  // label map on the fundamental basis
    for (int i = 0; i < b; ++i) {
        std::vector<Int> lab = label_of_chain(row_chain(fundamental.chains, i), labels);
        for (int k = 0; k < d; ++k) lmat(k, i) = lab[k];
    }

    IntMat h = lmat, u;
    int rank = hermite_column_reduce(h, u);
    if (rank < d) throw std::runtime_error("labels do not span Z^d");
    IntMat hd(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) hd(i, j) = h(i, j);
    Rat det = hd.to_rational().determinant();
    if (det != 1 && det != -1) throw std::runtime_error("label image is a proper sublattice");
    if (!build_basis) return {};

    // First d basis vectors: integer solution of lmat * X = I_d.
    RatMat hinv = hd.to_rational().inverse();
    IntMat w(b, b);
    for (int col = 0; col < d; ++col)
        for (int r = 0; r < b; ++r) {
            Rat s = 0;
            for (int k = 0; k < d; ++k) s += Rat(u(r, k)) * hinv(k, col);
            if (s.get_den() != 1) throw std::runtime_error("label image is a proper sublattice");
            w(r, col) = s.get_num();
        }
    for (int col = d; col < b; ++col)
        for (int r = 0; r < b; ++r) w(r, col) = u(r, col);  // kernel of the label map

    CycleBasis out;
    out.period_count = d;
    out.chains = w.transpose() * fundamental.chains;
    reduce_kernel_rows(out.chains, d);
    return out;
}

}  // namespace

CycleBasis label_split_basis(const MultiGraph& g, const EdgeLabels& labels) {
    return label_split_impl(g, labels, true);
}

void validate_labels(const MultiGraph& g, const EdgeLabels& labels) {
    label_split_impl(g, labels, false);
}

IntMat fundamental_in_basis(const MultiGraph& g, const SpanningTreeDecomposition& tree,
                            const CycleBasis& basis) {
    const int b = basis.size();
    if (static_cast<int>(tree.cotree_edges.size()) != b)
        throw std::invalid_argument("basis size does not match homology rank");
    // Coordinates of a cycle in the fundamental basis are its cotree entries,
    // so M[i][ell] = coeff of cotree edge ell in basis vector i, and the
    // fundamental cycles in the given basis are the rows of M^{-1}.
    RatMat m(b, b);
    for (int i = 0; i < b; ++i)
        for (int l = 0; l < b; ++l) m(i, l) = basis.chains(i, tree.cotree_edges[l]);
    Rat det = m.determinant();
    if (det != 1 && det != -1) throw std::runtime_error("basis override is not a Z-basis of H1");
    RatMat minv = m.inverse();
    IntMat out(b, b);
    for (int l = 0; l < b; ++l)
        for (int i = 0; i < b; ++i) {
            if (minv(l, i).get_den() != 1) throw std::runtime_error("basis override is not a Z-basis of H1");
            out(l, i) = minv(l, i).get_num();
        }
    return out;
}

EdgeLabels derive_labels(const MultiGraph& g, const SpanningTreeDecomposition& tree,
                         const CycleBasis& basis) {
    IntMat coords = fundamental_in_basis(g, tree, basis);
    const int d = basis.period_count;
    EdgeLabels labels(g.edge_count(), std::vector<Int>(d, Int(0)));
    for (size_t l = 0; l < tree.cotree_edges.size(); ++l)
        for (int k = 0; k < d; ++k) labels[tree.cotree_edges[l]][k] = coords(static_cast<int>(l), k);
    return labels;
}

CycleBasis override_basis(const MultiGraph& g, const std::vector<IntChain>& period_part,
                          const std::vector<IntChain>& vanishing_part, const EdgeLabels* labels) {
    CycleBasis basis;
    basis.period_count = static_cast<int>(period_part.size());
    const int b = basis.period_count + static_cast<int>(vanishing_part.size());
    basis.chains = IntMat(b, g.edge_count());
    int row = 0;
    auto put = [&](const IntChain& c) {
        if (static_cast<int>(c.size()) != g.edge_count())
            throw std::invalid_argument("basis override has wrong chain dimension");
        for (auto& v : boundary(g, c))
            if (v != 0) throw std::invalid_argument("basis override chain is not closed");
        for (int e = 0; e < g.edge_count(); ++e) basis.chains(row, e) = c[e];
        ++row;
    };
    for (const auto& c : period_part) put(c);
    for (const auto& c : vanishing_part) put(c);

    SpanningTreeDecomposition tree = spanning_tree(g);
    if (b != static_cast<int>(tree.cotree_edges.size()))
        throw std::invalid_argument("basis override has wrong size");
    fundamental_in_basis(g, tree, basis);  // unimodularity check

    if (labels) {
        const int d = basis.period_count;
        for (int i = 0; i < b; ++i) {
            IntChain c(g.edge_count());
            for (int e = 0; e < g.edge_count(); ++e) c[e] = basis.chains(i, e);
            std::vector<Int> lab = label_of_chain(c, *labels);
            for (int k = 0; k < static_cast<int>(lab.size()); ++k) {
                Int expect = (i < d && k == i) ? 1 : 0;
                if (lab[k] != expect)
                    throw std::invalid_argument("basis override is inconsistent with edge labels");
            }
        }
    }
    return basis;
}

}  // namespace lforge
