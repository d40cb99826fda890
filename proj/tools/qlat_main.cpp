// Command-line front end: Voronoi-projection census, Coxeter-plane figures,
// rhombic patch generation and the invariant checker.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qlat/checks.hpp"
#include "qlat/dihedral.hpp"
#include "qlat/patch_io.hpp"
#include "qlat/projection.hpp"
#include "qlat/root_system.hpp"
#include "qlat/tiling.hpp"
#include "qlat/tolerances.hpp"
#include "qlat/voronoi.hpp"

namespace {

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << content;
  if (!os) throw std::runtime_error("write failed: " + path);
}

std::string angle_pair_text(int k, int h) {
  auto pretty = [h](int kk) {
    const int g = std::gcd(kk, h);
    const int num = kk / g, den = h / g;
    std::string s;
    if (num != 1) s += std::to_string(num);
    s += "π";
    if (den != 1) s += "/" + std::to_string(den);
    return s;
  };
  return "(" + pretty(k) + "," + pretty(h - k) + ")";
}

std::string table_text(const std::vector<qlat::Table1Row>& rows) {
  std::ostringstream os;
  os << "n | vertices | polygons | origin | rhomb angles\n";
  for (const auto& r : rows) {
    os << r.n << " | " << r.vertex_count << " | " << r.polygon_text << " | ";
    if (r.n == 1)
      os << "none | -\n";
    else {
      if (r.origin_count == 0)
        os << "none";
      else
        os << r.origin_count;
      os << " | ";
      for (size_t i = 0; i < r.angle_classes.size(); ++i) {
        if (i) os << ",";
        os << angle_pair_text(r.angle_classes[i], 2 * r.n);
      }
      os << "\n";
    }
  }
  return os.str();
}

qlat::VectorN parse_seed_vertex(const std::string& csv, int n) {
  std::vector<double> vals;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
  if (static_cast<int>(vals.size()) != n)
    throw std::runtime_error("--seed-vertex needs " + std::to_string(n) +
                             " comma-separated coefficients");
  qlat::VectorN v(n);
  for (int i = 0; i < n; ++i) v[i] = vals[i];
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("QLAT_EPS_GEO")) {
    try {
      qlat::set_geo_eps(std::stod(env));
    } catch (const std::exception& e) {
      std::cerr << "invalid QLAT_EPS_GEO: " << e.what() << "\n";
      return 2;
    }
  }

  CLI::App app{"hypercubic-lattice projections and h-fold rhombic tilings"};
  app.require_subcommand(1);

  // table1
  int max_n = 10;
  bool table_json = false;
  std::string format = "text";
  auto* tab = app.add_subcommand("table1", "projection census for ranks 1..max-n");
  tab->add_option("--max-n", max_n, "largest rank")->check(CLI::Range(1, 12));
  tab->add_flag("--json", table_json, "emit JSON instead of text");
  tab->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // project
  int pn = 4, plane = 1;
  std::string proj_svg, proj_json;
  auto* prj = app.add_subcommand("project", "project the Voronoi cell onto a principal plane");
  prj->add_option("-n", pn, "rank")->required()->check(CLI::Range(2, 12));
  prj->add_option("--plane", plane, "principal plane index (1 = Coxeter plane)");
  prj->add_option("--svg", proj_svg, "write an SVG figure to PATH");
  prj->add_option("--json", proj_json, "write the orbit report to PATH (- for stdout)");

  // tile
  int tn = 4, layers = 1;
  std::string tile_svg, tile_json, seed_csv;
  auto* til = app.add_subcommand("tile", "dissociate and grow an h-fold rhombic patch");
  til->add_option("-n", tn, "rank")->required()->check(CLI::Range(3, 8));
  til->add_option("--layers", layers, "0: one dissociated h-gon; 1: seed rotation patch; k: k-1 growth shells")
      ->check(CLI::Range(0, 8));
  til->add_option("--seed-vertex", seed_csv,
                  "comma-separated lattice coefficients of the anchor vertex");
  til->add_option("--svg", tile_svg, "write an SVG figure to PATH");
  til->add_option("--json", tile_json, "write the patch document to PATH (- for stdout)");

  // verify
  int vn = 4;
  auto* ver = app.add_subcommand("verify", "run the invariant checks for one rank");
  ver->add_option("-n", vn, "rank")->required()->check(CLI::Range(1, 10));

  CLI11_PARSE(app, argc, argv);

  try {
    if (tab->parsed()) {
      const auto rows = qlat::table1(max_n);
      if (table_json || format == "json")
        write_output("-", qlat::table1_to_json(rows).dump(2) + "\n");
      else
        write_output("-", table_text(rows));
      return 0;
    }

    if (prj->parsed()) {
      const auto rs = qlat::build_root_system(pn, qlat::BasisChoice::PaperCyclic);
      const auto pb = qlat::principal_basis(rs);
      const auto cell = qlat::voronoi_cell(pn);
      if (proj_svg.empty() && proj_json.empty()) proj_json = "-";
      if (!proj_json.empty()) {
        auto doc = qlat::orbit_report_to_json(qlat::project_voronoi(cell, pb, plane));
        doc["plane"] = plane;
        write_output(proj_json, doc.dump(2) + "\n");
      }
      if (!proj_svg.empty())
        write_output(proj_svg, qlat::projection_to_svg(cell, pb, plane));
      return 0;
    }

    if (til->parsed()) {
      const auto rs = qlat::build_root_system(tn, qlat::BasisChoice::PaperCyclic);
      const auto pb = qlat::principal_basis(rs);
      const auto cell = qlat::voronoi_cell(tn);
      const qlat::VectorN seed =
          seed_csv.empty() ? qlat::default_seed_vertex(tn) : parse_seed_vertex(seed_csv, tn);
      const auto subs = qlat::dissociate(cell, pb, seed);
      const int hh = 2 * tn;
      qlat::TilingPatch patch;
      if (layers == 0) {
        patch.tiles = subs[0].tiles;
        patch.center = qlat::Vec2::Zero();
        patch.h = hh;
        patch.layers = 0;
      } else {
        const qlat::Vec2 p = qlat::project(seed, pb);
        patch = qlat::seed_rotation_patch(subs[0], p, hh);
        if (layers > 1) patch = qlat::grow_patch(patch, subs[0], layers - 1, pb);
      }
      if (tile_svg.empty() && tile_json.empty()) tile_json = "-";
      if (!tile_json.empty())
        write_output(tile_json, qlat::patch_to_json(patch, tn).dump(2) + "\n");
      if (!tile_svg.empty()) write_output(tile_svg, qlat::patch_to_svg(patch, tn));
      return 0;
    }

    if (ver->parsed()) {
      const auto results = qlat::run_checks(vn);
      for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.pass && !r.detail.empty()) std::cout << " -- " << r.detail;
        std::cout << "\n";
      }
      return qlat::all_passed(results) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
