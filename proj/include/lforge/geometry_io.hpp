#pragma once
// Geometry JSON (read/write), realization JSON, and XYZ/OBJ exporters.

#include <string>
#include <vector>

#include "lforge/realization.hpp"
#include "lforge/surface.hpp"

namespace lforge {

struct ExportOptions {
    std::vector<int> supercell;      // empty = single cell
    bool wrap = false;
    bool include_endpoints = false;  // xyz: also emit cotree edge endpoints
};

std::string realization_to_json(const CrystalRealization& r);
std::string surface_to_json(const DiscreteSurface& s);

/// Rebuilds a realization from its JSON form (graph, positions, labels,
/// lattice); residuals are recomputable from the stored data alone.
CrystalRealization realization_from_json(const std::string& text);
DiscreteSurface surface_from_json(const std::string& text);

std::string export_xyz(const CrystalRealization& r, const ExportOptions& opts);
std::string export_obj(const CrystalRealization& r, const ExportOptions& opts);
std::string export_xyz(const DiscreteSurface& s);
std::string export_obj(const DiscreteSurface& s, bool with_faces = true);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace lforge
