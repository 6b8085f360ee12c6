#include "underlay/scenario.hpp"

#include "json.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace underlay {

void ScenarioConfig::validate() const {
  auto bad = [](const char* what) { throw std::invalid_argument(what); };
  if (area_side <= 0) bad("ScenarioConfig: area_side must be > 0");
  if (rx_box_side <= 0) bad("ScenarioConfig: rx_box_side must be > 0");
  if (K < 1) bad("ScenarioConfig: K must be >= 1");
  if (N < 0) bad("ScenarioConfig: N must be >= 0");
  if (k0 <= 0) bad("ScenarioConfig: k0 must be > 0");
  if (pathloss_exp <= 0) bad("ScenarioConfig: pathloss_exp must be > 0");
  if (shadow_sigma_db < 0) bad("ScenarioConfig: shadow_sigma_db must be >= 0");
  if (noise <= 0) bad("ScenarioConfig: noise must be > 0");
  if (cap_p <= 0) bad("ScenarioConfig: cap_p must be > 0");
  if (cap_s <= 0) bad("ScenarioConfig: cap_s must be > 0");
  if (pg_p < 1) bad("ScenarioConfig: pg_p must be >= 1");
  if (pg_s < 1) bad("ScenarioConfig: pg_s must be >= 1");
  if (min_distance <= 0) bad("ScenarioConfig: min_distance must be > 0");
}

double distance(const Vec2& a, const Vec2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double gain_from_geometry(double distance_m, double beta_db, const ScenarioConfig& cfg) {
  const double d = std::max(distance_m, cfg.min_distance);
  return cfg.k0 * std::pow(10.0, beta_db / 10.0) * std::pow(d, -cfg.pathloss_exp);
}

Drop generate(const ScenarioConfig& cfg) {
  cfg.validate();

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> shadow(0.0, cfg.shadow_sigma_db);

  Drop drop;
  DropGeometry& geo = drop.geometry;
  geo.base_station = {cfg.area_side / 2.0, cfg.area_side / 2.0};

  geo.primary_tx.resize(cfg.K);
  for (auto& p : geo.primary_tx) p = {unit(rng) * cfg.area_side, unit(rng) * cfg.area_side};
  geo.secondary_tx.resize(cfg.N);
  for (auto& p : geo.secondary_tx) p = {unit(rng) * cfg.area_side, unit(rng) * cfg.area_side};
  geo.secondary_rx.resize(cfg.N);
  for (int i = 0; i < cfg.N; ++i) {
    // uniform over the rx box around the transmitter; may leave the area
    geo.secondary_rx[i] = {geo.secondary_tx[i].x + (unit(rng) - 0.5) * cfg.rx_box_side,
                           geo.secondary_tx[i].y + (unit(rng) - 0.5) * cfg.rx_box_side};
  }

  NetworkInstance& inst = drop.instance;
  inst.K = cfg.K;
  inst.N = cfg.N;
  inst.noise = cfg.noise;
  inst.pg_p = cfg.pg_p;
  inst.pg_s = cfg.pg_s;
  inst.qos = Eigen::VectorXd::Constant(cfg.K, db_to_linear(cfg.qos_db));
  inst.cap_p = Eigen::VectorXd::Constant(cfg.K, cfg.cap_p);
  inst.cap_s = Eigen::VectorXd::Constant(cfg.N, cfg.cap_s);

  inst.gain_pp.resize(cfg.K);
  for (int j = 0; j < cfg.K; ++j)
    inst.gain_pp[j] = gain_from_geometry(distance(geo.primary_tx[j], geo.base_station),
                                         shadow(rng), cfg);
  inst.gain_ps.resize(cfg.N);
  for (int i = 0; i < cfg.N; ++i)
    inst.gain_ps[i] = gain_from_geometry(distance(geo.secondary_tx[i], geo.base_station),
                                         shadow(rng), cfg);
  inst.gain_ss.resize(cfg.N, cfg.N);
  for (int i = 0; i < cfg.N; ++i)
    for (int l = 0; l < cfg.N; ++l)
      inst.gain_ss(i, l) = gain_from_geometry(distance(geo.secondary_tx[l], geo.secondary_rx[i]),
                                              shadow(rng), cfg);
  inst.gain_sp.resize(cfg.N, cfg.K);
  for (int i = 0; i < cfg.N; ++i)
    for (int j = 0; j < cfg.K; ++j)
      inst.gain_sp(i, j) = gain_from_geometry(distance(geo.primary_tx[j], geo.secondary_rx[i]),
                                              shadow(rng), cfg);

  inst.validate();
  return drop;
}

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const char* section) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* k : known)
      if (item.key() == k) { ok = true; break; }
    if (!ok)
      throw std::invalid_argument(std::string("unknown key '") + item.key() + "' in " + section);
  }
}

}  // namespace

std::string to_json_text(const ScenarioConfig& c) {
  json j{{"area_side", c.area_side},
         {"rx_box_side", c.rx_box_side},
         {"K", c.K},
         {"N", c.N},
         {"k0", c.k0},
         {"pathloss_exp", c.pathloss_exp},
         {"shadow_sigma_db", c.shadow_sigma_db},
         {"noise", c.noise},
         {"cap_p", c.cap_p},
         {"cap_s", c.cap_s},
         {"qos_db", c.qos_db},
         {"pg_p", c.pg_p},
         {"pg_s", c.pg_s},
         {"seed", c.seed},
         {"min_distance", c.min_distance}};
  return j.dump(2);
}

ScenarioConfig scenario_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("scenario config must be a JSON object");
  reject_unknown_keys(j,
                      {"area_side", "rx_box_side", "K", "N", "k0", "pathloss_exp",
                       "shadow_sigma_db", "noise", "cap_p", "cap_s", "qos_db", "pg_p", "pg_s",
                       "seed", "min_distance"},
                      "scenario config");
  ScenarioConfig c;
  c.area_side = j.value("area_side", c.area_side);
  c.rx_box_side = j.value("rx_box_side", c.rx_box_side);
  c.K = j.value("K", c.K);
  c.N = j.value("N", c.N);
  c.k0 = j.value("k0", c.k0);
  c.pathloss_exp = j.value("pathloss_exp", c.pathloss_exp);
  c.shadow_sigma_db = j.value("shadow_sigma_db", c.shadow_sigma_db);
  c.noise = j.value("noise", c.noise);
  c.cap_p = j.value("cap_p", c.cap_p);
  c.cap_s = j.value("cap_s", c.cap_s);
  c.qos_db = j.value("qos_db", c.qos_db);
  c.pg_p = j.value("pg_p", c.pg_p);
  c.pg_s = j.value("pg_s", c.pg_s);
  c.seed = j.value("seed", c.seed);
  c.min_distance = j.value("min_distance", c.min_distance);
  c.validate();
  return c;
}

ScenarioConfig scenario_config_from_json_text(const std::string& text) {
  return scenario_config_from_json(json::parse(text));
}

}  // namespace underlay
