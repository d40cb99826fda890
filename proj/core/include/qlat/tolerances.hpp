#pragma once

namespace qlat {

// Algebraic identities (reflections, group laws, exact coordinates).
inline constexpr double kEps = 1e-12;

// Residuals of eigen-structure and numeric group-relation checks.
inline constexpr double kEpsEigen = 1e-9;

// Polygon overlap / area-completeness threshold.
inline constexpr double kEpsArea = 1e-8;

// Geometric deduplication grid (vertex snapping, radius clustering).
// Process-wide; the CLI honours the QLAT_EPS_GEO environment variable.
double geo_eps();
void set_geo_eps(double eps);

}  // namespace qlat
