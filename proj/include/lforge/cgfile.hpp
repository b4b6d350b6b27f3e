#pragma once
// The .cg crystal-graph text format: one directive per line, '#' comments.
//   dim d
//   vertex NAME
//   edge NAME NAME [n1 ... nd]
//   basis i  c_e1 ... c_e|E|     (integer chain override, 1-based index)
//   vanish   c_e1 ... c_e|E|
// Edges are numbered in file order; that order drives all determinism.

#include <optional>
#include <string>
#include <vector>

#include "lforge/homology.hpp"

namespace lforge {

struct CrystalGraphFile {
    int dimension = 0;  // 0 = plain molecular graph (no labels)
    std::vector<std::string> vertex_names;
    std::vector<Edge> edges;
    EdgeLabels labels;                        // empty when no labels given
    std::vector<IntChain> basis_overrides;    // period part, in index order
    std::vector<IntChain> vanishing_chains;

    MultiGraph graph() const { return MultiGraph(static_cast<int>(vertex_names.size()), edges); }
    bool has_labels() const { return !labels.empty(); }
    bool has_basis() const { return !basis_overrides.empty() || !vanishing_chains.empty(); }

    /// Validated override basis (period part first, then vanishing chains).
    std::optional<CycleBasis> basis(const MultiGraph& g) const;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
    int line;
};

CrystalGraphFile parse_cg(const std::string& text);
CrystalGraphFile load_cg(const std::string& path);

}  // namespace lforge
