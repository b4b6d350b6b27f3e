#pragma once
// Chain and cycle machinery on the base graph: boundary operator, the +-1
// inner product on 1-chains, fundamental cycle bases, Gram matrices, and the
// period/vanishing split for labelled periodic graphs. Everything is exact.

#include <vector>

#include "lforge/graph.hpp"
#include "lforge/rational.hpp"

namespace lforge {

/// 1-chain in canonical edge coordinates; reversing an edge negates its entry.
using ChainVec = std::vector<Rat>;
using IntChain = std::vector<Int>;

/// Z-basis of H1 of the base graph. Rows of `chains` are the basis vectors in
/// edge coordinates; the first `period_count` span the realized directions and
/// the rest span the vanishing subspace.
struct CycleBasis {
    IntMat chains;     // b x |E|
    int period_count;  // d <= b

    int size() const { return chains.rows(); }
};

std::vector<Int> boundary(const MultiGraph& g, const IntChain& chain);
std::vector<Rat> boundary(const MultiGraph& g, const ChainVec& chain);

/// Fundamental cycles of the cotree edges: alpha_i = cotree edge e_i plus the
/// unique tree path from t(e_i) back to o(e_i). Unlabeled case, so d = b.
CycleBasis cycle_basis(const MultiGraph& g, const SpanningTreeDecomposition& tree);

/// Chain of a single fundamental cycle.
IntChain fundamental_cycle(const MultiGraph& g, const SpanningTreeDecomposition& tree, int cotree_edge);

Rat chain_inner_product(const ChainVec& a, const ChainVec& b);
Int chain_inner_product(const IntChain& a, const IntChain& b);

/// A_ij = <alpha_i, alpha_j>; throws if the basis is dependent.
RatMat gram_matrix(const CycleBasis& basis);

/// Per-edge translation labels in Z^d.
using EdgeLabels = std::vector<std::vector<Int>>;

/// Rebuilds an integer basis of H1 whose first d members map to the standard
/// Z^d generators under the label map and whose remaining b-d members span the
/// kernel. Throws if the labels do not span Z^d or span a proper sublattice.
CycleBasis label_split_basis(const MultiGraph& g, const EdgeLabels& labels);

/// Rank/unimodularity check of the label map alone (no basis construction).
void validate_labels(const MultiGraph& g, const EdgeLabels& labels);

/// Validates a caller-supplied basis (paper-style override): b independent
/// closed integer chains forming a Z-basis of H1. When labels are given, the
/// first d must map to the standard generators and the rest to zero.
CycleBasis override_basis(const MultiGraph& g, const std::vector<IntChain>& period_part,
                          const std::vector<IntChain>& vanishing_part,
                          const EdgeLabels* labels = nullptr);

/// Coordinates of every fundamental cycle in the given basis (b x b integer,
/// exists because the basis is unimodular); row ell belongs to cotree edge ell.
IntMat fundamental_in_basis(const MultiGraph& g, const SpanningTreeDecomposition& tree,
                            const CycleBasis& basis);

/// Translation label of each edge (in Z^d, d = basis.period_count) induced by
/// the basis: tree edges get 0, cotree edge labels are the first d coordinates
/// of their fundamental cycle in the basis.
EdgeLabels derive_labels(const MultiGraph& g, const SpanningTreeDecomposition& tree,
                         const CycleBasis& basis);

std::vector<Int> label_of_chain(const IntChain& chain, const EdgeLabels& labels);

}  // namespace lforge
