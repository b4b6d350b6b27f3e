#include "lforge/geometry_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace lforge {

using json = nlohmann::ordered_json;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string realization_to_json(const CrystalRealization& r) {
    json j;
    j["type"] = "crystal_realization";
    j["dimension"] = r.dimension;
    json verts = json::array();
    for (int v = 0; v < r.graph.vertex_count(); ++v) {
        json row = json::array();
        for (int k = 0; k < r.dimension; ++k) row.push_back(r.vertex_positions(v, k));
        verts.push_back(row);
    }
    j["vertices"] = verts;
    json edges = json::array();
    for (int e = 0; e < r.graph.edge_count(); ++e) {
        json je;
        je["o"] = r.graph.edge(e).origin;
        je["t"] = r.graph.edge(e).terminus;
        json lab = json::array(), vec = json::array();
        for (int k = 0; k < r.dimension; ++k) {
            lab.push_back(static_cast<long>(r.edge_labels(e, k).get_si()));
            vec.push_back(r.edge_vectors(e, k));
        }
        je["label"] = lab;
        je["vector"] = vec;
        edges.push_back(je);
    }
    j["edges"] = edges;
    json lat = json::array();
    for (int i = 0; i < r.dimension; ++i) {
        json row = json::array();
        for (int k = 0; k < r.dimension; ++k) row.push_back(r.lattice.rows(i, k));
        lat.push_back(row);
    }
    j["lattice"] = lat;
    j["standardness_constant"] = r.standardness_constant;
    StandardnessReport rep = verify_standard(r);
    j["residuals"] = {{"balance", rep.balance_residual},
                      {"edge_sum", rep.edge_sum_residual},
                      {"eeT", rep.eet_residual},
                      {"c", rep.c}};
    EnergyReport en = energy(r);
    j["energy"] = {{"raw", en.raw_energy}, {"normalized", en.normalized_energy}, {"volume", en.volume}};
    return j.dump(2) + "\n";
}

CrystalRealization realization_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("type", "") != "crystal_realization")
        throw std::runtime_error("not a crystal_realization document");
    const int d = j.at("dimension").get<int>();
    const auto& jverts = j.at("vertices");
    const auto& jedges = j.at("edges");

    std::vector<Edge> edges;
    for (const auto& je : jedges) edges.push_back({je.at("o").get<int>(), je.at("t").get<int>()});
    MultiGraph g(static_cast<int>(jverts.size()), edges);

    CrystalRealization r{.dimension = d, .graph = g};
    r.vertex_positions.resize(g.vertex_count(), d);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int k = 0; k < d; ++k) r.vertex_positions(v, k) = jverts.at(v).at(k).get<double>();
    r.edge_vectors.resize(g.edge_count(), d);
    r.edge_labels = IntMat(g.edge_count(), d);
    for (int e = 0; e < g.edge_count(); ++e)
        for (int k = 0; k < d; ++k) {
            r.edge_vectors(e, k) = jedges.at(e).at("vector").at(k).get<double>();
            r.edge_labels(e, k) = jedges.at(e).at("label").at(k).get<long>();
        }
    r.lattice.d = d;
    r.lattice.rows.resize(d, d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) r.lattice.rows(i, k) = j.at("lattice").at(i).at(k).get<double>();
    r.standardness_constant = j.value("standardness_constant", 0.0);
    return r;
}

std::string surface_to_json(const DiscreteSurface& s) {
    json j;
    j["type"] = "geometry";
    json verts = json::array();
    for (const auto& p : s.positions) verts.push_back({p.x(), p.y(), p.z()});
    j["vertices"] = verts;
    j["lattice_rank"] = s.lattice_rank;
    json lat = json::array();
    for (int i = 0; i < s.lattice_rank; ++i)
        lat.push_back({s.lattice(i, 0), s.lattice(i, 1), s.lattice(i, 2)});
    j["lattice"] = lat;
    json nbs = json::array();
    for (const auto& triple : s.neighbors) {
        json row = json::array();
        for (const auto& nb : triple)
            row.push_back({nb.vertex, {nb.label.x(), nb.label.y(), nb.label.z()}, nb.twin});
        nbs.push_back(row);
    }
    j["neighbors"] = nbs;
    json edges = json::array();
    for (int v = 0; v < s.vertex_count(); ++v)
        for (const auto& nb : s.neighbors[v])
            if (nb.vertex > v ||
                (nb.vertex == v && (nb.label.x() > 0 || (nb.label.x() == 0 && nb.label.y() > 0) ||
                                    (nb.label.x() == 0 && nb.label.y() == 0 && nb.label.z() >= 0))))
                edges.push_back({v, nb.vertex, {nb.label.x(), nb.label.y(), nb.label.z()}});
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

DiscreteSurface surface_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("type", "") != "geometry") throw std::runtime_error("not a geometry document");
    DiscreteSurface s;
    for (const auto& v : j.at("vertices"))
        s.positions.push_back({v.at(0).get<double>(), v.at(1).get<double>(), v.at(2).get<double>()});
    s.lattice_rank = j.value("lattice_rank", 0);
    for (int i = 0; i < s.lattice_rank; ++i)
        for (int k = 0; k < 3; ++k) s.lattice(i, k) = j.at("lattice").at(i).at(k).get<double>();
    if (!j.contains("neighbors")) throw std::runtime_error("geometry document lacks neighbor triples");
    for (const auto& row : j.at("neighbors")) {
        if (row.size() != 3) throw std::runtime_error("geometry: vertex is not trivalent");
        std::array<SurfaceNeighbor, 3> triple;
        for (int k = 0; k < 3; ++k) {
            const auto& nb = row.at(k);
            triple[k].vertex = nb.at(0).get<int>();
            for (int c = 0; c < 3; ++c) triple[k].label[c] = nb.at(1).at(c).get<int>();
            triple[k].twin = nb.size() > 2 ? nb.at(2).get<int>() : -1;
        }
        s.neighbors.push_back(triple);
    }
    validate_surface(s);
    return s;
}

namespace {

void append_point(std::string& out, const char* prefix, double x, double y, double z) {
    char buf[128];
    snprintf(buf, sizeof(buf), "%s %.10f %.10f %.10f\n", prefix, x, y, z);
    out += buf;
}

Eigen::Vector3d pad3(const Eigen::RowVectorXd& p) {
    Eigen::Vector3d v = Eigen::Vector3d::Zero();
    for (int k = 0; k < std::min<int>(3, static_cast<int>(p.size())); ++k) v[k] = p[k];
    return v;
}

}  // namespace

std::string export_xyz(const CrystalRealization& r, const ExportOptions& opts) {
    if (r.dimension > 3) throw std::invalid_argument("xyz export needs dimension <= 3");
    std::vector<int> counts = opts.supercell.empty() ? std::vector<int>(r.dimension, 1) : opts.supercell;
    SupercellGeometry sc = supercell(r, counts, opts.wrap);
    long n = sc.positions.rows();
    long extra = opts.include_endpoints ? r.graph.edge_count() : 0;
    std::string body;
    for (long i = 0; i < n; ++i) {
        Eigen::Vector3d p = pad3(sc.positions.row(i));
        append_point(body, "C", p.x(), p.y(), p.z());
    }
    for (long e = 0; e < extra; ++e) {
        Eigen::Vector3d p = pad3(r.edge_endpoint(static_cast<int>(e)).transpose());
        append_point(body, "C", p.x(), p.y(), p.z());
    }
    return std::to_string(n + extra) + "\nlattice-forge\n" + body;
}

std::string export_obj(const CrystalRealization& r, const ExportOptions& opts) {
    if (r.dimension > 3) throw std::invalid_argument("obj export needs dimension <= 3");
    std::vector<int> counts = opts.supercell.empty() ? std::vector<int>(r.dimension, 1) : opts.supercell;
    SupercellGeometry sc = supercell(r, counts, opts.wrap);
    std::string out;
    for (long i = 0; i < sc.positions.rows(); ++i) {
        Eigen::Vector3d p = pad3(sc.positions.row(i));
        append_point(out, "v", p.x(), p.y(), p.z());
    }
    for (auto [a, b] : sc.segments)
        out += "l " + std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    return out;
}

std::string export_xyz(const DiscreteSurface& s) {
    std::string body;
    for (const auto& p : s.positions) append_point(body, "C", p.x(), p.y(), p.z());
    return std::to_string(s.positions.size()) + "\nlattice-forge\n" + body;
}

std::string export_obj(const DiscreteSurface& s, bool with_faces) {
    std::string out;
    for (const auto& p : s.positions) append_point(out, "v", p.x(), p.y(), p.z());
    for (int v = 0; v < s.vertex_count(); ++v)
        for (const auto& nb : s.neighbors[v])
            if (nb.vertex >= v && nb.label == Eigen::Vector3i::Zero())
                out += "l " + std::to_string(v + 1) + " " + std::to_string(nb.vertex + 1) + "\n";
    if (with_faces && s.lattice_rank == 0) {
        for (const Face& f : trace_faces(s)) {
            out += "f";
            for (int v : f.vertices) out += " " + std::to_string(v + 1);
            out += "\n";
        }
    }
    return out;
}

}  // namespace lforge
