#pragma once

#include "underlay/netmodel.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Random network drops: node placement on a square area, path-loss channel
// with log-normal shadowing, g = K0 * 10^(beta/10) * d^-eta.

namespace underlay {

/// Drop generator parameters. qos_db and shadow_sigma_db are in dB; every
/// other quantity is linear (meters, watts). JSON field names match the
/// member names exactly.
struct ScenarioConfig {
  double area_side = 1000.0;     ///< side of the deployment square, m
  double rx_box_side = 500.0;    ///< side of the rx square centered at its tx, m
  int K = 2;                     ///< primary users
  int N = 2;                     ///< secondary links
  double k0 = 1e3;               ///< channel constant K0
  double pathloss_exp = 4.0;
  double shadow_sigma_db = 6.0;  ///< shadowing std dev, dB
  double noise = 1e-12;          ///< watts
  double cap_p = 1.0;            ///< watts, per primary
  double cap_s = 0.1;            ///< watts, per secondary
  double qos_db = 6.0;           ///< primary SINR floor, dB
  double pg_p = 20.0;
  double pg_s = 80.0;
  std::uint64_t seed = 1;
  double min_distance = 1.0;     ///< gain distance floor, m

  void validate() const;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Vec2& a, const Vec2& b);

/// Node positions of one drop, meters.
struct DropGeometry {
  Vec2 base_station;
  std::vector<Vec2> primary_tx;
  std::vector<Vec2> secondary_tx;
  std::vector<Vec2> secondary_rx;
};

struct Drop {
  NetworkInstance instance;
  DropGeometry geometry;
};

/// Path gain K0 * 10^(beta_db/10) * d^-pathloss_exp with d clamped to
/// cfg.min_distance from below.
double gain_from_geometry(double distance_m, double beta_db, const ScenarioConfig& cfg);

/// One drop: base station at the area center, transmitters uniform over the
/// area, each secondary receiver uniform over a rx_box_side square centered
/// at its transmitter, every shadowing term i.i.d. Normal(0, shadow_sigma_db).
/// Deterministic in cfg including the seed.
///
/// Draw order (one mt19937_64 stream): primary tx positions, secondary tx
/// positions, secondary rx offsets, then shadowing for gain_pp, gain_ps,
/// gain_ss (row-major), gain_sp (row-major).
Drop generate(const ScenarioConfig& cfg);

/// JSON (de)serialization with exact member-name keys. Parsing rejects
/// unknown keys; missing keys keep their defaults.
std::string to_json_text(const ScenarioConfig& cfg);
ScenarioConfig scenario_config_from_json_text(const std::string& text);

}  // namespace underlay
