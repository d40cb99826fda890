#pragma once

#include <string>

#include <json.hpp>

#include "qlat/tiling.hpp"
#include "qlat/voronoi.hpp"

namespace qlat {

// Kind label for the document: "square" (pi/2), "thin"/"thick" by acute
// class, "other" for triangles.
std::string tile_kind(const Tile& t, int h);

// Patch document, schema_version 1. Numbers carry 15 significant digits and
// survive a parse round-trip bit-for-bit.
nlohmann::json patch_to_json(const TilingPatch& patch, int n);
TilingPatch patch_from_json(const nlohmann::json& doc);

nlohmann::json orbit_report_to_json(const OrbitReport& rep);
nlohmann::json table1_to_json(const std::vector<Table1Row>& rows);

// SVG 1.1, one polygon element per tile, 100 px per lattice unit, y flipped
// to screen coordinates, fill keyed by angle class.
std::string patch_to_svg(const TilingPatch& patch, int n);

// Projected Voronoi skeleton: vertex markers plus the projected edges.
std::string projection_to_svg(const VoronoiCell& cell, const PrincipalBasis& basis,
                              int plane = 1);

// Round toward 15 significant digits (the document precision).
double round15(double x);

}  // namespace qlat
