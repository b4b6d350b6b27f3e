#include "lforge/surface.hpp"

#include <cmath>
#include <stdexcept>

namespace lforge {

namespace {

Eigen::Vector3d area_vector(const std::array<Eigen::Vector3d, 3>& e) {
    return e[0].cross(e[1]) + e[1].cross(e[2]) + e[2].cross(e[0]);
}

std::array<Eigen::Vector3d, 3> edge_vectors_at(const DiscreteSurface& s, int v) {
    std::array<Eigen::Vector3d, 3> e;
    for (int k = 0; k < 3; ++k) e[k] = s.neighbor_position(v, k) - s.positions[v];
    return e;
}

double degeneracy_scale(const std::array<Eigen::Vector3d, 3>& e) {
    double m = 0.0;
    for (const auto& v : e) m = std::max(m, v.squaredNorm());
    return m;
}

}  // namespace

void validate_surface(const DiscreteSurface& s) {
    const int n = s.vertex_count();
    if (s.neighbors.size() != s.positions.size())
        throw std::invalid_argument("surface: neighbors/positions size mismatch");
    // symmetric adjacency with negated labels, counted with multiplicity
    std::map<std::pair<int, int>, std::vector<Eigen::Vector3i>> open_ends;
    for (int v = 0; v < n; ++v) {
        for (const SurfaceNeighbor& nb : s.neighbors[v]) {
            if (nb.vertex < 0 || nb.vertex >= n)
                throw std::invalid_argument("surface: neighbor index out of range");
            auto rev = open_ends.find({nb.vertex, v});
            bool matched = false;
            if (rev != open_ends.end()) {
                for (auto it = rev->second.begin(); it != rev->second.end(); ++it) {
                    if (*it == -nb.label) {
                        rev->second.erase(it);
                        matched = true;
                        break;
                    }
                }
            }
            if (!matched) open_ends[{v, nb.vertex}].push_back(nb.label);
        }
    }
    for (const auto& [key, labels] : open_ends)
        if (!labels.empty()) throw std::invalid_argument("surface: neighbor relation is not symmetric");
    for (int v = 0; v < n; ++v) {
        auto e = edge_vectors_at(s, v);
        if (area_vector(e).norm() < 1e-12 * degeneracy_scale(e))
            throw std::invalid_argument("degenerate vertex " + std::to_string(v));
    }
}

Eigen::Vector3d vertex_normal(const DiscreteSurface& s, int v) {
    auto e = edge_vectors_at(s, v);
    Eigen::Vector3d a = area_vector(e);
    double norm = a.norm();
    if (norm < 1e-12 * degeneracy_scale(e))
        throw std::invalid_argument("degenerate vertex " + std::to_string(v));
    return a / norm;
}

VertexGeometry vertex_geometry(const DiscreteSurface& s, int v) {
    VertexGeometry out;
    out.edge = edge_vectors_at(s, v);
    Eigen::Vector3d a = area_vector(out.edge);
    double norm = a.norm();
    if (norm < 1e-12 * degeneracy_scale(out.edge))
        throw std::invalid_argument("degenerate vertex " + std::to_string(v));
    out.normal = a / norm;
    out.local_area = 0.5 * norm;

    // normals at the three neighbors (translation images share the base normal)
    std::array<Eigen::Vector3d, 3> nb_normal;
    for (int k = 0; k < 3; ++k) nb_normal[k] = vertex_normal(s, s.neighbors[v][k].vertex);

    Eigen::Vector3d u = out.edge[1] - out.edge[0];
    Eigen::Vector3d w = out.edge[2] - out.edge[0];
    Eigen::Vector3d m = nb_normal[1] - nb_normal[0];
    Eigen::Vector3d q = nb_normal[2] - nb_normal[0];
    out.first_form << u.dot(u), u.dot(w), w.dot(u), w.dot(w);
    out.second_form << -u.dot(m), -u.dot(q), -w.dot(m), -w.dot(q);

    Eigen::Matrix2d shape = out.first_form.inverse() * out.second_form;
    out.gauss = shape.determinant();
    out.mean = 0.5 * shape.trace();
    return out;
}

CurvatureReport curvature_map(const DiscreteSurface& s) {
    CurvatureReport rep;
    const int n = s.vertex_count();
    rep.gauss.resize(n);
    rep.mean.resize(n);
    rep.local_area.resize(n);
    for (int v = 0; v < n; ++v) {
        VertexGeometry geo = vertex_geometry(s, v);
        rep.gauss[v] = geo.gauss;
        rep.mean[v] = geo.mean;
        rep.local_area[v] = geo.local_area;
        rep.total_area += geo.local_area;
    }
    return rep;
}

double gauss_identity_residual(const DiscreteSurface& s, int v) {
    VertexGeometry geo = vertex_geometry(s, v);
    const Eigen::Vector3d& n = geo.normal;
    auto tangent = [&](const Eigen::Vector3d& x) { return (x - x.dot(n) * n).eval(); };
    std::array<Eigen::Vector3d, 3> nb_normal;
    for (int k = 0; k < 3; ++k) nb_normal[k] = vertex_normal(s, s.neighbors[v][k].vertex);
    Eigen::Vector3d lhs =
        tangent(nb_normal[1] - nb_normal[0]).cross(tangent(nb_normal[2] - nb_normal[0]));
    Eigen::Vector3d rhs =
        geo.gauss * (geo.edge[1] - geo.edge[0]).cross(geo.edge[2] - geo.edge[0]);
    return (lhs - rhs).norm();
}

AreaVariationReport area_first_variation_check(const DiscreteSurface& s,
                                               const std::vector<double>& t_values) {
    AreaVariationReport rep;
    const int n = s.vertex_count();
    std::vector<Eigen::Vector3d> normal(n);
    for (int v = 0; v < n; ++v) normal[v] = vertex_normal(s, v);

    CurvatureReport base = curvature_map(s);
    for (int v = 0; v < n; ++v) rep.analytic += -2.0 * base.mean[v] * base.local_area[v];

    auto total_area_shifted = [&](double t) {
        double total = 0.0;
        for (int v = 0; v < n; ++v) {
            std::array<Eigen::Vector3d, 3> e;
            for (int k = 0; k < 3; ++k) {
                const SurfaceNeighbor& nb = s.neighbors[v][k];
                Eigen::Vector3d xk = s.neighbor_position(v, k) + t * normal[nb.vertex];
                e[k] = xk - (s.positions[v] + t * normal[v]);
            }
            total += 0.5 * area_vector(e).norm();
        }
        return total;
    };
    for (double t : t_values) {
        AreaVariationPoint p;
        p.t = t;
        p.finite_difference = (total_area_shifted(t) - total_area_shifted(-t)) / (2.0 * t);
        p.discrepancy = std::abs(p.finite_difference - rep.analytic);
        rep.points.push_back(p);
    }
    return rep;
}

MinimalResidual minimal_residual(const DiscreteSurface& s) {
    MinimalResidual rep;
    const int n = s.vertex_count();
    rep.system.resize(n);
    for (int v = 0; v < n; ++v) {
        VertexGeometry geo = vertex_geometry(s, v);
        rep.max_mean = std::max(rep.max_mean, std::abs(geo.mean));
        const Eigen::Vector3d& nv = geo.normal;
        auto tangent = [&](const Eigen::Vector3d& x) { return (x - x.dot(nv) * nv).eval(); };
        std::array<Eigen::Vector3d, 3> nb_normal;
        for (int k = 0; k < 3; ++k) nb_normal[k] = vertex_normal(s, s.neighbors[v][k].vertex);
        Eigen::Vector3d r = tangent(nb_normal[1] - nb_normal[2]).cross(tangent(geo.edge[0])) +
                            tangent(nb_normal[2] - nb_normal[0]).cross(tangent(geo.edge[1])) +
                            tangent(nb_normal[0] - nb_normal[1]).cross(tangent(geo.edge[2]));
        rep.system[v] = r.norm();
        rep.max_system = std::max(rep.max_system, rep.system[v]);
    }
    return rep;
}

RelaxResult relax_to_minimal(const DiscreteSurface& s, const RelaxOptions& opts) {
    const int n = s.vertex_count();
    bool constrained = opts.lattice_fixed && s.lattice_rank > 0;
    constrained = constrained || !opts.fixed_vertices.empty();
    if (!constrained) throw std::invalid_argument("no constraints");

    RelaxResult res{.surface = s};
    auto max_mean = [&](const DiscreteSurface& surf) {
        double m = 0.0;
        for (int v = 0; v < n; ++v) m = std::max(m, std::abs(vertex_geometry(surf, v).mean));
        return m;
    };
    double current = max_mean(res.surface);
    res.max_mean_history.push_back(current);
    double step = opts.step;
    for (int iter = 0; iter < opts.max_iters && current > opts.tol; ++iter) {
        // mean curvature flow step: x += -step * H(x) A(x) n(x) on free vertices
        DiscreteSurface trial = res.surface;
        std::vector<Eigen::Vector3d> delta(n, Eigen::Vector3d::Zero());
        for (int v = 0; v < n; ++v) {
            if (opts.fixed_vertices.count(v)) continue;
            VertexGeometry geo = vertex_geometry(res.surface, v);
            delta[v] = -geo.mean * geo.local_area * geo.normal;
        }
        bool accepted = false;
        for (int halving = 0; halving < 16 && !accepted; ++halving) {
            for (int v = 0; v < n; ++v) trial.positions[v] = res.surface.positions[v] + step * delta[v];
            double trial_mean = max_mean(trial);
            if (trial_mean < current) {
                res.surface = trial;
                current = trial_mean;
                res.max_mean_history.push_back(current);
                accepted = true;
            } else {
                step *= 0.5;
            }
        }
        if (!accepted) break;  // stuck; return the best iterate
    }
    res.converged = current <= opts.tol;
    return res;
}

std::vector<Face> trace_faces(const DiscreteSurface& s) {
    const int n = s.vertex_count();
    // pair up oriented edges: slot (v,k) with its reverse slot at the neighbor
    std::vector<std::array<int, 3>> reverse_slot(n, {-1, -1, -1});
    for (int v = 0; v < n; ++v) {
        for (int k = 0; k < 3; ++k) {
            if (reverse_slot[v][k] >= 0) continue;
            const SurfaceNeighbor& nb = s.neighbors[v][k];
            int u = nb.vertex;
            int found = nb.twin;
            if (found < 0) {
                for (int j = 0; j < 3; ++j) {
                    if (s.neighbors[u][j].vertex != v) continue;
                    if (s.neighbors[u][j].label != -nb.label) continue;
                    if (reverse_slot[u][j] >= 0) continue;
                    if (u == v && j == k) continue;  // a loop pairs two distinct slots
                    found = j;
                    break;
                }
            }
            if (found < 0 || s.neighbors[u][found].vertex != v)
                throw std::invalid_argument("surface: neighbor relation is not symmetric");
            reverse_slot[v][k] = found;
            reverse_slot[u][found] = k;
        }
    }

    std::vector<Face> faces;
    std::vector<std::array<char, 3>> used(n, {0, 0, 0});
    const int guard = 4 * n * 3;
    for (int v0 = 0; v0 < n; ++v0) {
        for (int k0 = 0; k0 < 3; ++k0) {
            if (used[v0][k0]) continue;
            Face face;
            int v = v0, k = k0;
            int steps = 0;
            do {
                used[v][k] = 1;
                face.vertices.push_back(v);
                int u = s.neighbors[v][k].vertex;
                int j = reverse_slot[v][k];
                v = u;
                k = (j + 1) % 3;  // neighbor following the arrival slot in cyclic order
                if (++steps > guard) throw std::runtime_error("face traversal failed to close");
            } while (!(v == v0 && k == k0));
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

EulerStats euler_stats(const std::vector<Face>& faces, int vertex_count, int edge_count) {
    EulerStats st;
    st.vertex_count = vertex_count;
    st.edge_count = edge_count;
    st.face_count = static_cast<int>(faces.size());
    long k_sum = 0;
    for (const Face& f : faces) {
        if (f.vertices.empty()) throw std::invalid_argument("euler_stats: empty face");
        st.n_k[static_cast<int>(f.vertices.size())] += 1;
        k_sum += static_cast<long>(f.vertices.size());
    }
    if (k_sum != 2L * edge_count)
        throw std::invalid_argument("euler_stats: face sizes inconsistent with edge count");
    st.chi_from_counts = st.face_count - st.edge_count + st.vertex_count;
    for (const auto& [k, nk] : st.n_k) st.chi_from_formula += (1.0 - k / 6.0) * nk;
    return st;
}

}  // namespace lforge
