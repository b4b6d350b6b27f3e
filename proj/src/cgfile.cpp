#include "lforge/cgfile.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace lforge {

std::optional<CycleBasis> CrystalGraphFile::basis(const MultiGraph& g) const {
    if (!has_basis()) return std::nullopt;
    const EdgeLabels* lab = has_labels() ? &labels : nullptr;
    return override_basis(g, basis_overrides, vanishing_chains, lab);
}

CrystalGraphFile parse_cg(const std::string& text) {
    CrystalGraphFile out;
    std::map<std::string, int> vertex_id;
    std::map<int, IntChain> basis_by_index;
    std::istringstream stream(text);
    std::string line;
    int lineno = 0;
    bool dim_seen = false;

    auto parse_int = [&](const std::string& tok, const char* what) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError(lineno, std::string("expected integer for ") + what + ", got '" + tok + "'");
        }
    };

    while (std::getline(stream, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        const std::string& kw = tok[0];
        if (kw == "dim") {
            if (tok.size() != 2) throw ParseError(lineno, "dim takes one argument");
            out.dimension = parse_int(tok[1], "dim");
            if (out.dimension < 1) throw ParseError(lineno, "dim must be positive");
            dim_seen = true;
        } else if (kw == "vertex") {
            if (tok.size() != 2) throw ParseError(lineno, "vertex takes one name");
            if (!vertex_id.emplace(tok[1], static_cast<int>(out.vertex_names.size())).second)
                throw ParseError(lineno, "duplicate vertex name '" + tok[1] + "'");
            out.vertex_names.push_back(tok[1]);
        } else if (kw == "edge") {
            if (tok.size() < 3) throw ParseError(lineno, "edge takes two vertex names");
            auto a = vertex_id.find(tok[1]), b = vertex_id.find(tok[2]);
            if (a == vertex_id.end()) throw ParseError(lineno, "unknown vertex '" + tok[1] + "'");
            if (b == vertex_id.end()) throw ParseError(lineno, "unknown vertex '" + tok[2] + "'");
            std::vector<Int> label;
            for (size_t i = 3; i < tok.size(); ++i) label.push_back(parse_int(tok[i], "label"));
            if (!label.empty()) {
                if (!dim_seen) throw ParseError(lineno, "edge label before dim declaration");
                if (static_cast<int>(label.size()) != out.dimension)
                    throw ParseError(lineno, "label has wrong dimension");
            }
            if (!out.labels.empty() && label.empty())
                throw ParseError(lineno, "either all edges or none carry labels");
            if (!label.empty() && out.labels.size() != out.edges.size())
                throw ParseError(lineno, "either all edges or none carry labels");
            out.edges.push_back({a->second, b->second});
            if (!label.empty()) out.labels.push_back(std::move(label));
        } else if (kw == "basis" || kw == "vanish") {
            const bool is_basis = (kw == "basis");
            size_t first = is_basis ? 2 : 1;
            if (is_basis && tok.size() < 3) throw ParseError(lineno, "basis takes an index and coefficients");
            if (tok.size() - first != out.edges.size())
                throw ParseError(lineno, kw + " needs one coefficient per edge (after all edges)");
            IntChain chain;
            for (size_t i = first; i < tok.size(); ++i) chain.push_back(parse_int(tok[i], "coefficient"));
            if (is_basis) {
                int idx = parse_int(tok[1], "basis index");
                if (idx < 1) throw ParseError(lineno, "basis index is 1-based");
                if (!basis_by_index.emplace(idx, std::move(chain)).second)
                    throw ParseError(lineno, "duplicate basis index");
            } else {
                out.vanishing_chains.push_back(std::move(chain));
            }
        } else {
            throw ParseError(lineno, "unknown directive '" + kw + "'");
        }
    }
    if (out.vertex_names.empty()) throw ParseError(lineno, "no vertices");
    int expect = 1;
    for (auto& [idx, chain] : basis_by_index) {
        if (idx != expect++) throw ParseError(lineno, "basis indices must be 1..d without gaps");
        out.basis_overrides.push_back(std::move(chain));
    }
    return out;
}

CrystalGraphFile load_cg(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_cg(ss.str());
}

}  // namespace lforge
