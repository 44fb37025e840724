#include "therm/chip_model.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "therm/blob.hpp"
#include "therm/errors.hpp"
#include "therm/hash.hpp"

namespace therm {

using json = nlohmann::ordered_json;

namespace {

bool near_integer(double x, double tol = 1e-9) {
  return std::abs(x - std::round(x)) <= tol * std::max(1.0, std::abs(x));
}

// 1-D overlap length of cell i (width dx) with tile t (width ts).
double overlap_1d(int i, double dx, int t, double ts) {
  const double lo = std::max(i * dx, t * ts);
  const double hi = std::min((i + 1) * dx, (t + 1) * ts);
  return std::max(0.0, hi - lo);
}

}  // namespace

//
// ChipConfig
//

int ChipConfig::tiles_x() const {
  return static_cast<int>(std::round(chip_size_um / tile_size_um));
}
int ChipConfig::tiles_y() const { return tiles_x(); }

void ChipConfig::validate() const {
  std::ostringstream bad;
  auto fail = [&](const std::string& m) { bad << (bad.tellp() > 0 ? "; " : "") << m; };

  if (!(chip_size_um > 0)) fail("chip_size_um must be > 0");
  if (!(tile_size_um > 0)) fail("tile_size_um must be > 0");
  if (!(die_thickness_um > 0)) fail("die_thickness_um must be > 0");
  if (!(insulation_thickness_um > 0)) fail("insulation_thickness_um must be > 0");
  if (!(interconnect_thickness_um > 0)) fail("interconnect_thickness_um must be > 0");
  if (!(k_si > 0) || !(k_insulation > 0) || !(k_interconnect > 0))
    fail("all conductivities must be > 0");
  if (!(ambient_temp_k > 0)) fail("ambient_temp_k must be > 0");
  if (grid_nx <= 0 || grid_ny <= 0) fail("grid_nx/grid_ny must be > 0");
  if (grid_nx != grid_ny) fail("grid_nx must equal grid_ny");
  if (subdomain_m <= 0) fail("subdomain_m must be > 0");
  if (grid_nx > 0 && subdomain_m > 0 && grid_nx % subdomain_m != 0)
    fail("grid_nx must be divisible by subdomain_m");
  if (grid_nz < 3) fail("grid_nz must be >= 3 (one element per layer)");
  if (chip_size_um > 0 && tile_size_um > 0 &&
      !near_integer(chip_size_um / tile_size_um))
    fail("chip_size_um must be an integer multiple of tile_size_um");
  // Tile lattices finer than the grid are out of scope.
  if (chip_size_um > 0 && tile_size_um > 0 && grid_nx > 0 &&
      tile_size_um < chip_size_um / grid_nx - 1e-12)
    fail("tile_size_um smaller than a grid cell is unsupported");

  const std::string msg = bad.str();
  if (!msg.empty()) throw ConfigError("invalid ChipConfig: " + msg);
}

ChipConfig ChipConfig::with_die_thickness(double um) const {
  ChipConfig c = *this;
  c.die_thickness_um = um;
  return c;
}

ChipConfig ChipConfig::with_chip_size(double um) const {
  ChipConfig c = *this;
  const double scale = um / chip_size_um;
  c.chip_size_um = um;
  c.grid_nx = static_cast<int>(std::round(grid_nx * scale));
  c.grid_ny = c.grid_nx;
  return c;
}

json config_to_json(const ChipConfig& c) {
  return json{{"chip_size_um", c.chip_size_um},
              {"tile_size_um", c.tile_size_um},
              {"die_thickness_um", c.die_thickness_um},
              {"insulation_thickness_um", c.insulation_thickness_um},
              {"interconnect_thickness_um", c.interconnect_thickness_um},
              {"k_si", c.k_si},
              {"k_insulation", c.k_insulation},
              {"k_interconnect", c.k_interconnect},
              {"ambient_temp_k", c.ambient_temp_k},
              {"grid_nx", c.grid_nx},
              {"grid_ny", c.grid_ny},
              {"grid_nz", c.grid_nz},
              {"subdomain_m", c.subdomain_m}};
}

nlohmann::json ChipConfig::to_json() const { return config_to_json(*this); }

ChipConfig ChipConfig::from_json(const nlohmann::json& j) {
  ChipConfig c;
  try {
    auto get = [&](const char* key, auto& field) {
      if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("chip_size_um", c.chip_size_um);
    get("tile_size_um", c.tile_size_um);
    get("die_thickness_um", c.die_thickness_um);
    get("insulation_thickness_um", c.insulation_thickness_um);
    get("interconnect_thickness_um", c.interconnect_thickness_um);
    get("k_si", c.k_si);
    get("k_insulation", c.k_insulation);
    get("k_interconnect", c.k_interconnect);
    get("ambient_temp_k", c.ambient_temp_k);
    get("grid_nx", c.grid_nx);
    get("grid_ny", c.grid_ny);
    get("grid_nz", c.grid_nz);
    get("subdomain_m", c.subdomain_m);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed ChipConfig JSON: ") + e.what());
  }
  c.validate();
  return c;
}

ChipConfig ChipConfig::load(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text(path));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("cannot parse config " + path + ": " + e.what());
  }
  return from_json(j);
}

void ChipConfig::save(const std::string& path) const {
  write_text(path, config_to_json(*this).dump(2) + "\n");
}

std::string ChipConfig::fingerprint() const {
  return hex64(fnv1a(config_to_json(*this).dump()));
}

//
// PowerMap
//

double PowerMap::total_mw() const {
  double s = 0.0;
  for (double p : tile_power_mw) s += p;
  return s;
}

void PowerMap::validate(const ChipConfig& config) const {
  if (tiles_x <= 0 || tiles_y <= 0 ||
      tile_power_mw.size() != static_cast<std::size_t>(tiles_x) * tiles_y)
    throw ConfigError("PowerMap tile array does not match its dimensions");
  if (tiles_x != config.tiles_x() || tiles_y != config.tiles_y())
    throw ConfigError("PowerMap lattice " + std::to_string(tiles_x) + "x" +
                      std::to_string(tiles_y) + " does not match config " +
                      std::to_string(config.tiles_x()) + "x" +
                      std::to_string(config.tiles_y()));
  for (double p : tile_power_mw) {
    if (!(p >= 0.0) || !std::isfinite(p))
      throw ConfigError("PowerMap values must be finite and >= 0");
  }
}

nlohmann::json PowerMap::to_json() const {
  json rows = json::array();
  for (int ty = 0; ty < tiles_y; ++ty) {
    json row = json::array();
    for (int tx = 0; tx < tiles_x; ++tx) row.push_back(at(tx, ty));
    rows.push_back(std::move(row));
  }
  return json{{"tiles_x", tiles_x}, {"tiles_y", tiles_y}, {"tiles_mw", rows}};
}

PowerMap PowerMap::from_json(const nlohmann::json& j) {
  PowerMap pm;
  try {
    const auto& rows = j.contains("tiles_mw") ? j.at("tiles_mw") : j;
    pm.tiles_y = static_cast<int>(rows.size());
    pm.tiles_x = pm.tiles_y > 0 ? static_cast<int>(rows.at(0).size()) : 0;
    pm.tile_power_mw.reserve(static_cast<std::size_t>(pm.tiles_x) * pm.tiles_y);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != pm.tiles_x)
        throw ConfigError("PowerMap rows have inconsistent lengths");
      for (const auto& v : row) pm.tile_power_mw.push_back(v.get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed PowerMap JSON: ") + e.what());
  }
  return pm;
}

//
// HtcSpec
//

HtcSpec HtcSpec::constant(double h_top, double h_bottom) {
  HtcSpec s;
  s.kind = HtcKind::Constant;
  s.h_top = h_top;
  s.h_bottom = h_bottom;
  if (!(h_top > 0) || !(h_bottom > 0) || !std::isfinite(h_top) ||
      !std::isfinite(h_bottom))
    throw ConfigError("HTC values must be finite and > 0");
  return s;
}

HtcSpec HtcSpec::distributed(int tiles_x, int tiles_y, std::vector<double> top,
                             std::vector<double> bottom) {
  HtcSpec s;
  s.kind = HtcKind::Distributed;
  s.tiles_x = tiles_x;
  s.tiles_y = tiles_y;
  s.h_top_tiles = std::move(top);
  s.h_bottom_tiles = std::move(bottom);
  const auto want = static_cast<std::size_t>(tiles_x) * tiles_y;
  if (tiles_x <= 0 || tiles_y <= 0 || s.h_top_tiles.size() != want ||
      s.h_bottom_tiles.size() != want)
    throw ConfigError("distributed HTC tile arrays do not match dimensions");
  for (const auto* arr : {&s.h_top_tiles, &s.h_bottom_tiles}) {
    for (double h : *arr) {
      if (!(h > 0) || !std::isfinite(h))
        throw ConfigError("HTC values must be finite and > 0");
    }
  }
  return s;
}

void HtcSpec::validate(const ChipConfig& config) const {
  if (kind == HtcKind::Constant) {
    if (!(h_top > 0) || !(h_bottom > 0))
      throw ConfigError("HTC values must be > 0");
    return;
  }
  if (tiles_x != config.tiles_x() || tiles_y != config.tiles_y())
    throw ConfigError("distributed HTC lattice does not match config");
  const auto want = static_cast<std::size_t>(tiles_x) * tiles_y;
  if (h_top_tiles.size() != want || h_bottom_tiles.size() != want)
    throw ConfigError("distributed HTC tile arrays do not match dimensions");
  for (const auto* arr : {&h_top_tiles, &h_bottom_tiles}) {
    for (double h : *arr) {
      if (!(h > 0) || !std::isfinite(h))
        throw ConfigError("HTC values must be finite and > 0");
    }
  }
}

double HtcSpec::mean(Side side) const {
  if (kind == HtcKind::Constant) return side == Side::Top ? h_top : h_bottom;
  const auto& arr = side == Side::Top ? h_top_tiles : h_bottom_tiles;
  double s = 0.0;
  for (double h : arr) s += h;
  return arr.empty() ? 0.0 : s / static_cast<double>(arr.size());
}

nlohmann::json HtcSpec::to_json() const {
  if (kind == HtcKind::Constant)
    return json{{"kind", "constant"}, {"h_top", h_top}, {"h_bottom", h_bottom}};
  auto to_rows = [&](const std::vector<double>& a) {
    json rows = json::array();
    for (int ty = 0; ty < tiles_y; ++ty) {
      json row = json::array();
      for (int tx = 0; tx < tiles_x; ++tx)
        row.push_back(a[static_cast<std::size_t>(ty) * tiles_x + tx]);
      rows.push_back(std::move(row));
    }
    return rows;
  };
  return json{{"kind", "distributed"},
              {"tiles_x", tiles_x},
              {"tiles_y", tiles_y},
              {"h_top_tiles", to_rows(h_top_tiles)},
              {"h_bottom_tiles", to_rows(h_bottom_tiles)}};
}

HtcSpec HtcSpec::from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant") {
      return constant(j.at("h_top").get<double>(),
                      j.at("h_bottom").get<double>());
    }
    if (kind == "distributed") {
      auto flat = [&](const char* key, int& tx, int& ty) {
        const auto& rows = j.at(key);
        ty = static_cast<int>(rows.size());
        tx = ty > 0 ? static_cast<int>(rows.at(0).size()) : 0;
        std::vector<double> out;
        for (const auto& row : rows)
          for (const auto& v : row) out.push_back(v.get<double>());
        return out;
      };
      int tx = 0, ty = 0;
      auto top = flat("h_top_tiles", tx, ty);
      int bx = 0, by = 0;
      auto bottom = flat("h_bottom_tiles", bx, by);
      if (bx != tx || by != ty)
        throw ConfigError("HTC top/bottom tile arrays differ in shape");
      return distributed(tx, ty, std::move(top), std::move(bottom));
    }
    throw ConfigError("unknown HTC kind: " + kind);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed HtcSpec JSON: ") + e.what());
  }
}

//
// PlaneField
//

double PlaneField::integral(double cell_area_um2) const {
  double s = 0.0;
  for (double v : values) s += v;
  return s * cell_area_um2;
}

double PlaneField::mean() const {
  if (values.empty()) return 0.0;
  double s = 0.0;
  for (double v : values) s += v;
  return s / static_cast<double>(values.size());
}

void PlaneField::check_finite(const std::string& what) const {
  for (double v : values) {
    if (!std::isfinite(v)) throw ConfigError(what + ": non-finite value");
  }
}

void PlaneField::save(const std::string& dir, const std::string& stem,
                      const std::string& kind, const std::string& units) const {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<float> f(values.begin(), values.end());
  write_f32_blob((fs::path(dir) / (stem + ".bin")).string(), f);
  json manifest{{"nx", nx},
                {"ny", ny},
                {"dtype", "f32le"},
                {"layout", "row-major"},
                {"blob", stem + ".bin"},
                {"kind", kind},
                {"units", units}};
  write_text((fs::path(dir) / (stem + ".json")).string(),
             manifest.dump(2) + "\n");
}

PlaneField PlaneField::load(const std::string& dir, const std::string& stem) {
  namespace fs = std::filesystem;
  json manifest;
  try {
    manifest = json::parse(read_text((fs::path(dir) / (stem + ".json")).string()));
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed PlaneField manifest: ") + e.what());
  }
  PlaneField pf(manifest.at("nx").get<int>(), manifest.at("ny").get<int>());
  const auto blob = read_f32_blob(
      (fs::path(dir) / manifest.at("blob").get<std::string>()).string());
  if (blob.size() != pf.size())
    throw IoError("PlaneField blob size does not match manifest dims");
  std::copy(blob.begin(), blob.end(), pf.values.begin());
  return pf;
}

//
// Rasterization
//

PlaneField rasterize_power(const ChipConfig& config, const PowerMap& pm) {
  pm.validate(config);
  const int nx = config.grid_nx, ny = config.grid_ny;
  const double dx = config.cell_dx(), dy = config.cell_dy();
  const double ts = config.tile_size_um;
  const double tile_area = ts * ts;
  const double cell_area = dx * dy;

  PlaneField out(nx, ny);
  for (int y = 0; y < ny; ++y) {
    const int ty0 = std::max(0, static_cast<int>(std::floor(y * dy / ts)));
    const int ty1 = std::min(pm.tiles_y - 1,
                             static_cast<int>(std::floor(((y + 1) * dy - 1e-12) / ts)));
    for (int x = 0; x < nx; ++x) {
      const int tx0 = std::max(0, static_cast<int>(std::floor(x * dx / ts)));
      const int tx1 = std::min(pm.tiles_x - 1,
                               static_cast<int>(std::floor(((x + 1) * dx - 1e-12) / ts)));
      double acc = 0.0;  // W
      for (int ty = ty0; ty <= ty1; ++ty) {
        const double oy = overlap_1d(y, dy, ty, ts);
        if (oy <= 0) continue;
        for (int tx = tx0; tx <= tx1; ++tx) {
          const double ox = overlap_1d(x, dx, tx, ts);
          if (ox <= 0) continue;
          const double density = pm.at(tx, ty) * 1e-3 / tile_area;  // W/um^2
          acc += density * ox * oy;
        }
      }
      out.at(x, y) = acc / cell_area;
    }
  }
  return out;
}

PlaneField rasterize_htc(const ChipConfig& config, const HtcSpec& spec,
                         Side side) {
  spec.validate(config);
  const int nx = config.grid_nx, ny = config.grid_ny;
  if (spec.kind == HtcKind::Constant) {
    return PlaneField(nx, ny, side == Side::Top ? spec.h_top : spec.h_bottom);
  }
  const auto& tiles = side == Side::Top ? spec.h_top_tiles : spec.h_bottom_tiles;
  const double dx = config.cell_dx(), dy = config.cell_dy();
  const double ts = config.tile_size_um;
  const double cell_area = dx * dy;

  PlaneField out(nx, ny);
  for (int y = 0; y < ny; ++y) {
    const int ty0 = std::max(0, static_cast<int>(std::floor(y * dy / ts)));
    const int ty1 = std::min(spec.tiles_y - 1,
                             static_cast<int>(std::floor(((y + 1) * dy - 1e-12) / ts)));
    for (int x = 0; x < nx; ++x) {
      const int tx0 = std::max(0, static_cast<int>(std::floor(x * dx / ts)));
      const int tx1 = std::min(spec.tiles_x - 1,
                               static_cast<int>(std::floor(((x + 1) * dx - 1e-12) / ts)));
      double acc = 0.0;  // h * area
      for (int ty = ty0; ty <= ty1; ++ty) {
        const double oy = overlap_1d(y, dy, ty, ts);
        if (oy <= 0) continue;
        for (int tx = tx0; tx <= tx1; ++tx) {
          const double ox = overlap_1d(x, dx, tx, ts);
          if (ox <= 0) continue;
          acc += tiles[static_cast<std::size_t>(ty) * spec.tiles_x + tx] * ox * oy;
        }
      }
      out.at(x, y) = acc / cell_area;
    }
  }
  return out;
}

}  // namespace therm
