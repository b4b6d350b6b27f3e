#include "lforge/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "lforge/builtin.hpp"
#include "lforge/cgfile.hpp"
#include "lforge/geometry_io.hpp"
#include "lforge/nanotube.hpp"

namespace lforge {

namespace {

CrystalRealization realize_file(const CrystalGraphFile& file, const std::string& method) {
    MultiGraph g = file.graph();
    auto basis = file.basis(g);
    if (method == "direct") {
        EdgeLabels labels = file.labels;
        if (labels.empty()) {
            SpanningTreeDecomposition tree = spanning_tree(g);
            CycleBasis b = basis ? *basis : cycle_basis(g, tree);
            labels = derive_labels(g, tree, b);
        }
        return realize_harmonic_direct(g, labels);
    }
    if (method != "homology") throw std::invalid_argument("unknown method '" + method + "'");
    if (file.has_labels()) return realize_periodic(g, file.labels, basis);
    return realize_max_abelian(g, basis);
}

void print_residuals(std::ostream& out, const CrystalRealization& r) {
    StandardnessReport rep = verify_standard(r);
    EnergyReport en = energy(r);
    out << std::setprecision(12);
    out << "dimension        " << r.dimension << "\n"
        << "vertices         " << r.graph.vertex_count() << "\n"
        << "edges            " << r.graph.edge_count() << "\n"
        << "balance residual " << rep.balance_residual << "\n"
        << "edge-sum residual " << rep.edge_sum_residual << "\n"
        << "eeT residual     " << rep.eet_residual << "\n"
        << "c                " << rep.c << "\n"
        << "raw energy       " << en.raw_energy << "\n"
        << "normalized energy " << en.normalized_energy << "\n"
        << "cell volume      " << en.volume << "\n";
}

void emit(const std::string& payload, const std::string& output_path, std::ostream& out) {
    if (output_path.empty())
        out << payload;
    else
        write_text_file(output_path, payload);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"standard realizations of topological crystals and trivalent surface analysis"};
    app.require_subcommand(1);

    std::string file, method = "homology", out_fmt = "json", output_path;
    std::vector<int> cell_counts;
    auto* realize = app.add_subcommand("realize", "build and verify a standard realization");
    realize->add_option("file", file, "crystal graph (.cg)")->required();
    realize->add_option("--method", method, "homology|direct")->default_str("homology");
    realize->add_option("--supercell", cell_counts, "cells per lattice direction");
    realize->add_option("--out", out_fmt, "json|xyz|obj")->default_str("json");
    realize->add_option("--output", output_path, "write to file instead of stdout");

    std::string verify_file;
    auto* verify = app.add_subcommand("verify", "recheck standardness of a stored realization");
    verify->add_option("file", verify_file, "realization json")->required();

    std::string geom_file;
    bool per_vertex = false, check_gauss = false, check_area = false;
    auto* curvature = app.add_subcommand("curvature", "curvatures of a trivalent surface");
    curvature->add_option("file", geom_file, "geometry json")->required();
    curvature->add_flag("--per-vertex", per_vertex);
    curvature->add_flag("--check-gauss", check_gauss);
    curvature->add_flag("--check-area-variation", check_area);

    std::string euler_file;
    auto* euler = app.add_subcommand("euler", "face counts and Euler number");
    euler->add_option("file", euler_file, "geometry json")->required();

    std::string minimal_file;
    double min_tol = 1e-10;
    int min_iters = 200;
    auto* minimal = app.add_subcommand("minimal", "relax toward a minimal surface");
    minimal->add_option("file", minimal_file, "geometry json")->required();
    minimal->add_option("--tol", min_tol);
    minimal->add_option("--max-iters", min_iters);

    int c1 = 0, c2 = 0, periods = 1;
    double lambda = 1.0;
    bool classify = false;
    std::string nano_fmt = "xyz", nano_output;
    auto* nanotube = app.add_subcommand("nanotube", "single-wall nanotube generator");
    nanotube->add_option("c1", c1)->required();
    nanotube->add_option("c2", c2)->required();
    nanotube->add_option("--periods", periods);
    nanotube->add_option("--lambda", lambda);
    nanotube->add_flag("--classify", classify);
    nanotube->add_option("--out", nano_fmt, "xyz|obj|json");
    nanotube->add_option("--output", nano_output);

    int grid = 12;
    double dirac_tol = 1e-9;
    auto* band = app.add_subcommand("band", "graphene band extrema and Dirac points");
    band->add_option("--grid", grid);
    band->add_option("--dirac-tol", dirac_tol);

    std::string spectrum_file;
    int electrons = -1;
    auto* spectrum = app.add_subcommand("spectrum", "adjacency spectrum / Hueckel analysis");
    spectrum->add_option("file", spectrum_file, "crystal graph (.cg)")->required();
    spectrum->add_option("--electrons", electrons);

    std::string girth_file;
    int girth_cap = 20;
    auto* girth = app.add_subcommand("girth", "girth of the periodic lift");
    girth->add_option("file", girth_file, "crystal graph (.cg) with labels")->required();
    girth->add_option("--cap", girth_cap);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (realize->parsed()) {
            CrystalRealization r = realize_file(load_cg(file), method);
            print_residuals(out, r);
            ExportOptions opts{.supercell = cell_counts, .wrap = false, .include_endpoints = true};
            if (out_fmt == "json")
                emit(realization_to_json(r), output_path, out);
            else if (out_fmt == "xyz")
                emit(export_xyz(r, opts), output_path, out);
            else if (out_fmt == "obj")
                emit(export_obj(r, opts), output_path, out);
            else
                throw std::invalid_argument("unknown output format '" + out_fmt + "'");
        } else if (verify->parsed()) {
            CrystalRealization r = realization_from_json(read_text_file(verify_file));
            print_residuals(out, r);
            StandardnessReport rep = verify_standard(r);
            bool ok = rep.balance_residual < 1e-9 && rep.eet_residual < 1e-9;
            out << (ok ? "standard: yes\n" : "standard: no\n");
        } else if (curvature->parsed()) {
            DiscreteSurface s = surface_from_json(read_text_file(geom_file));
            CurvatureReport rep = curvature_map(s);
            out << std::setprecision(12);
            if (per_vertex)
                for (int v = 0; v < s.vertex_count(); ++v)
                    out << v << " K " << rep.gauss[v] << " H " << rep.mean[v] << " A "
                        << rep.local_area[v] << "\n";
            auto minmax_k = std::minmax_element(rep.gauss.begin(), rep.gauss.end());
            auto minmax_h = std::minmax_element(rep.mean.begin(), rep.mean.end());
            out << "vertices   " << s.vertex_count() << "\n"
                << "K range    [" << *minmax_k.first << ", " << *minmax_k.second << "]\n"
                << "H range    [" << *minmax_h.first << ", " << *minmax_h.second << "]\n"
                << "total area " << rep.total_area << "\n";
            if (check_gauss) {
                double worst = 0.0;
                for (int v = 0; v < s.vertex_count(); ++v)
                    worst = std::max(worst, gauss_identity_residual(s, v));
                out << "gauss identity residual " << worst << "\n";
            }
            if (check_area) {
                AreaVariationReport var = area_first_variation_check(s, {1e-3, 1e-4});
                out << "area variation analytic " << var.analytic << "\n";
                for (const auto& p : var.points)
                    out << "  t " << p.t << " fd " << p.finite_difference << " discrepancy "
                        << p.discrepancy << "\n";
            }
        } else if (euler->parsed()) {
            DiscreteSurface s = surface_from_json(read_text_file(euler_file));
            std::vector<Face> faces = trace_faces(s);
            EulerStats st = euler_stats(faces, s.vertex_count(), s.edge_count());
            out << "V " << st.vertex_count << "  E " << st.edge_count << "  F " << st.face_count
                << "\n";
            for (const auto& [k, nk] : st.n_k) out << "N_" << k << " = " << nk << "\n";
            out << "chi (F-E+V)      " << st.chi_from_counts << "\n"
                << "chi (sum formula) " << st.chi_from_formula << "\n";
        } else if (minimal->parsed()) {
            DiscreteSurface s = surface_from_json(read_text_file(minimal_file));
            RelaxOptions opts;
            opts.lattice_fixed = s.lattice_rank > 0;
            opts.max_iters = min_iters;
            opts.tol = min_tol;
            if (s.lattice_rank == 0)
                throw std::invalid_argument("no constraints");
            MinimalResidual before = minimal_residual(s);
            RelaxResult res = relax_to_minimal(s, opts);
            MinimalResidual after = minimal_residual(res.surface);
            out << std::setprecision(12) << "max |H| before " << before.max_mean << "\n"
                << "max |H| after  " << after.max_mean << "\n"
                << "iterations     " << res.max_mean_history.size() - 1 << "\n"
                << (res.converged ? "converged: yes\n" : "converged: no\n");
        } else if (nanotube->parsed()) {
            ChiralIndex ci{c1, c2, lambda};
            if (classify)
                out << (classify_metallic(ci) == Metallicity::metal ? "metal" : "semiconductor")
                    << "\n";
            TubeFrame frame = tube_frame(ci);
            out << std::setprecision(12) << "L " << frame.diameter_parameter << "  radius "
                << frame.radius << "\n";
            DiscreteSurface tube = build_swnt(ci, periods);
            out << "atoms " << tube.vertex_count() << "  bonds " << tube.edge_count() << "\n";
            if (nano_fmt == "xyz")
                emit(export_xyz(tube), nano_output, out);
            else if (nano_fmt == "obj")
                emit(export_obj(tube, false), nano_output, out);
            else if (nano_fmt == "json")
                emit(surface_to_json(tube), nano_output, out);
            else
                throw std::invalid_argument("unknown output format '" + nano_fmt + "'");
        } else if (band->parsed()) {
            auto [lo0, hi0] = graphene_band({0.0, 0.0});
            out << std::setprecision(12) << "E(0,0) = " << lo0 << " / " << hi0 << "\n";
            std::vector<DiracPoint> pts = dirac_scan(grid, dirac_tol);
            out << "near-zero-gap grid points (" << grid << "x" << grid << ", tol " << dirac_tol
                << "): " << pts.size() << "\n";
            for (const auto& p : pts)
                out << "  (" << p.i << ", " << p.j << ")  xi = (" << p.xi.x() << ", " << p.xi.y()
                    << ")  gap " << p.gap << "\n";
        } else if (spectrum->parsed()) {
            CrystalGraphFile f = load_cg(spectrum_file);
            MultiGraph g = f.graph();
            std::vector<double> ev = adjacency_spectrum(g);
            out << std::setprecision(12) << "eigenvalues (descending):";
            for (double v : ev) out << " " << v;
            out << "\n";
            if (electrons >= 0) {
                HuckelReport rep = huckel(g, electrons);
                out << "occupations:";
                for (double o : rep.occupations) out << " " << o;
                out << "\ndensity:";
                for (double dv : rep.density) out << " " << dv;
                out << "\n";
                if (rep.open_shell) out << "open shell: fractional occupation at the Fermi level\n";
            }
        } else if (girth->parsed()) {
            CrystalGraphFile f = load_cg(girth_file);
            if (!f.has_labels()) throw std::invalid_argument("girth needs a labeled graph");
            out << periodic_girth(f.graph(), f.labels, girth_cap) << "\n";
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace lforge
