#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace therm {

// Geometry, layer stack, materials, and grid for one simulation scenario.
// Units: lengths um, conductivity W/(um*K), HTC W/(um^2*K), power mW at the
// tile interface and W/um^2 once rasterized, temperature K.
struct ChipConfig {
  double chip_size_um = 4000.0;  // square chip edge
  double tile_size_um = 200.0;
  double die_thickness_um = 100.0;
  double insulation_thickness_um = 1.0;
  double interconnect_thickness_um = 10.0;
  double k_si = 1.5e-4;
  double k_insulation = 1.4e-6;
  double k_interconnect = 1.0e-5;
  double ambient_temp_k = 300.0;
  int grid_nx = 64;
  int grid_ny = 64;
  int grid_nz = 8;
  int subdomain_m = 16;

  void validate() const;  // throws ConfigError listing every violation

  int tiles_x() const;
  int tiles_y() const;
  double cell_dx() const { return chip_size_um / grid_nx; }
  double cell_dy() const { return chip_size_um / grid_ny; }
  double plane_area_um2() const { return chip_size_um * chip_size_um; }
  int subdomains_x() const { return grid_nx / subdomain_m; }
  int subdomains_y() const { return grid_ny / subdomain_m; }

  ChipConfig with_die_thickness(double um) const;
  ChipConfig with_chip_size(double um) const;  // scales grid, keeps cell size

  nlohmann::json to_json() const;
  static ChipConfig from_json(const nlohmann::json& j);
  static ChipConfig load(const std::string& path);
  void save(const std::string& path) const;

  // Stable hash of the full config; used for bundle/dataset integrity.
  std::string fingerprint() const;
};

// Tile-based heat sources, one value per rectangular functional block.
struct PowerMap {
  int tiles_x = 0;
  int tiles_y = 0;
  std::vector<double> tile_power_mw;  // row-major [ty][tx]

  double& at(int tx, int ty) { return tile_power_mw[static_cast<std::size_t>(ty) * tiles_x + tx]; }
  double at(int tx, int ty) const { return tile_power_mw[static_cast<std::size_t>(ty) * tiles_x + tx]; }
  double total_mw() const;

  void validate(const ChipConfig& config) const;

  nlohmann::json to_json() const;
  static PowerMap from_json(const nlohmann::json& j);
};

enum class HtcKind { Constant, Distributed };
enum class Side { Top, Bottom };

// Heat-transfer coefficients on the top and bottom die surfaces.
struct HtcSpec {
  HtcKind kind = HtcKind::Constant;
  // Constant case
  double h_top = 0.0;
  double h_bottom = 0.0;
  // Distributed case: per-tile values on the power-map lattice
  int tiles_x = 0;
  int tiles_y = 0;
  std::vector<double> h_top_tiles;
  std::vector<double> h_bottom_tiles;

  static HtcSpec constant(double h_top, double h_bottom);
  static HtcSpec distributed(int tiles_x, int tiles_y,
                             std::vector<double> top,
                             std::vector<double> bottom);

  void validate(const ChipConfig& config) const;
  double mean(Side side) const;

  nlohmann::json to_json() const;
  static HtcSpec from_json(const nlohmann::json& j);
};

// A 2-D scalar field on the heating-plane grid.
struct PlaneField {
  int nx = 0;
  int ny = 0;
  std::vector<double> values;  // row-major [y][x]

  PlaneField() = default;
  PlaneField(int nx_, int ny_, double fill = 0.0)
      : nx(nx_), ny(ny_), values(static_cast<std::size_t>(nx_) * ny_, fill) {}

  double& at(int x, int y) { return values[static_cast<std::size_t>(y) * nx + x]; }
  double at(int x, int y) const { return values[static_cast<std::size_t>(y) * nx + x]; }
  std::size_t size() const { return values.size(); }

  // Integral over the plane given the cell area (sum(values) * cell_area).
  double integral(double cell_area_um2) const;
  double mean() const;

  void check_finite(const std::string& what) const;

  // f32 row-major blob + JSON manifest ("<stem>.bin", "<stem>.json").
  void save(const std::string& dir, const std::string& stem,
            const std::string& kind, const std::string& units) const;
  static PlaneField load(const std::string& dir, const std::string& stem);
};

// Area-weighted rasterization of tile power onto the grid, as flux density
// W/um^2. Total integrated power matches the tile sum exactly.
PlaneField rasterize_power(const ChipConfig& config, const PowerMap& pm);

// Same weighting for HTC values (intensive: cell value is the area-weighted
// mean of overlapping tiles).
PlaneField rasterize_htc(const ChipConfig& config, const HtcSpec& spec,
                         Side side);

}  // namespace therm
