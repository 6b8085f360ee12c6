#include "underlay/netmodel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace underlay {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

bool all_positive(const Eigen::VectorXd& v) { return (v.array() > 0.0).all(); }

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

}  // namespace

void NetworkInstance::validate() const {
  require(K >= 1, "NetworkInstance: K must be >= 1");
  require(N >= 0, "NetworkInstance: N must be >= 0");
  require(gain_pp.size() == K, "NetworkInstance: gain_pp size != K");
  require(gain_ps.size() == N, "NetworkInstance: gain_ps size != N");
  require(gain_ss.rows() == N && gain_ss.cols() == N, "NetworkInstance: gain_ss not N x N");
  require(gain_sp.rows() == N && gain_sp.cols() == K, "NetworkInstance: gain_sp not N x K");
  require(qos.size() == K, "NetworkInstance: qos size != K");
  require(cap_p.size() == K, "NetworkInstance: cap_p size != K");
  require(cap_s.size() == N, "NetworkInstance: cap_s size != N");
  require(all_positive(gain_pp), "NetworkInstance: gain_pp entries must be > 0");
  require(N == 0 || all_positive(gain_ps), "NetworkInstance: gain_ps entries must be > 0");
  require(N == 0 || (gain_ss.array() > 0.0).all(), "NetworkInstance: gain_ss entries must be > 0");
  require(N == 0 || (gain_sp.array() > 0.0).all(), "NetworkInstance: gain_sp entries must be > 0");
  require(noise > 0.0, "NetworkInstance: noise must be > 0");
  require(all_positive(qos), "NetworkInstance: qos entries must be > 0");
  require(all_positive(cap_p), "NetworkInstance: cap_p entries must be > 0");
  require(N == 0 || all_positive(cap_s), "NetworkInstance: cap_s entries must be > 0");
  require(pg_p >= 1.0, "NetworkInstance: pg_p must be >= 1");
  require(pg_s >= 1.0, "NetworkInstance: pg_s must be >= 1");
  require(gain_pp.allFinite() && qos.allFinite() && cap_p.allFinite(),
          "NetworkInstance: non-finite primary data");
  require(N == 0 || (gain_ps.allFinite() && gain_ss.allFinite() && gain_sp.allFinite() &&
                     cap_s.allFinite()),
          "NetworkInstance: non-finite secondary data");
}

Eigen::VectorXd SinrVector::stacked() const {
  Eigen::VectorXd out(xp.size() + xs.size());
  out << xp, xs;
  return out;
}

const char* to_string(ScenarioMode m) {
  switch (m) {
    case ScenarioMode::PrimaryOnly: return "primary-only";
    case ScenarioMode::Shared: return "shared";
    case ScenarioMode::SecondaryMax: return "secondary-max";
  }
  return "?";
}

ScenarioMode mode_from_string(const std::string& s) {
  if (s == "primary-only") return ScenarioMode::PrimaryOnly;
  if (s == "shared") return ScenarioMode::Shared;
  if (s == "secondary-max") return ScenarioMode::SecondaryMax;
  throw std::invalid_argument("unknown scenario mode: '" + s +
                              "' (expected primary-only|shared|secondary-max)");
}

void compute_sinr(const NetworkInstance& inst, const PowerAllocation& alloc, SinrVector& out) {
  if (alloc.pp.size() != inst.K || alloc.ps.size() != inst.N)
    throw std::invalid_argument("compute_sinr: allocation dimensions do not match instance");

  out.xp.resize(inst.K);
  out.xs.resize(inst.N);

  for (int j = 0; j < inst.K; ++j) {
    double interf = inst.noise;
    for (int l = 0; l < inst.K; ++l)
      if (l != j) interf += alloc.pp[l] * inst.gain_pp[l];
    for (int i = 0; i < inst.N; ++i) interf += alloc.ps[i] * inst.gain_ps[i];
    out.xp[j] = inst.pg_p * alloc.pp[j] * inst.gain_pp[j] / interf;
  }
  for (int i = 0; i < inst.N; ++i) {
    double interf = inst.noise;
    for (int l = 0; l < inst.N; ++l)
      if (l != i) interf += alloc.ps[l] * inst.gain_ss(i, l);
    for (int j = 0; j < inst.K; ++j) interf += alloc.pp[j] * inst.gain_sp(i, j);
    out.xs[i] = inst.pg_s * alloc.ps[i] * inst.gain_ss(i, i) / interf;
  }
}

SinrVector compute_sinr(const NetworkInstance& inst, const PowerAllocation& alloc) {
  SinrVector out;
  compute_sinr(inst, alloc, out);
  return out;
}

double primary_throughput(const SinrVector& sinr) {
  double sum = 0.0;
  for (int j = 0; j < sinr.xp.size(); ++j) sum += log2_1p(sinr.xp[j]);
  return sum;
}

double secondary_throughput(const SinrVector& sinr) {
  double sum = 0.0;
  for (int i = 0; i < sinr.xs.size(); ++i) sum += log2_1p(sinr.xs[i]);
  return sum;
}

double sum_throughput(const SinrVector& sinr, ScenarioMode mode) {
  return alpha_s(mode) * secondary_throughput(sinr) + alpha_p(mode) * primary_throughput(sinr);
}

double ConstraintReport::worst_qos_slack() const {
  return qos_slack.size() ? qos_slack.minCoeff() : 0.0;
}

double ConstraintReport::worst_cap_slack() const {
  double w = cap_slack_p.size() ? cap_slack_p.minCoeff() : 0.0;
  if (cap_slack_s.size()) w = std::min(w, cap_slack_s.minCoeff());
  return w;
}

ConstraintReport check_constraints(const NetworkInstance& inst, const PowerAllocation& alloc,
                                   double tol) {
  if (alloc.pp.size() != inst.K || alloc.ps.size() != inst.N)
    throw std::invalid_argument("check_constraints: allocation dimensions do not match instance");

  ConstraintReport rep;
  const SinrVector sinr = compute_sinr(inst, alloc);
  rep.qos_slack = sinr.xp - inst.qos;
  rep.cap_slack_p = inst.cap_p - alloc.pp;
  rep.cap_slack_s = inst.cap_s - alloc.ps;
  rep.min_power = alloc.pp.size() ? alloc.pp.minCoeff() : 0.0;
  if (alloc.ps.size()) rep.min_power = std::min(rep.min_power, alloc.ps.minCoeff());

  rep.qos_ok = (rep.qos_slack.array() >= -tol).all();
  rep.caps_ok = (rep.cap_slack_p.array() >= -tol).all() &&
                (inst.N == 0 || (rep.cap_slack_s.array() >= -tol).all());
  rep.nonneg_ok = rep.min_power >= -tol;
  return rep;
}

PrimaryFeasibility primary_feasibility(const NetworkInstance& inst) {
  inst.validate();

  // Target-SINR equalities as a linear system A p = b:
  //   pg_p * g_j * p_j - qos_j * sum_{l != j} g_l * p_l = qos_j * N0.
  Eigen::MatrixXd A(inst.K, inst.K);
  Eigen::VectorXd b(inst.K);
  for (int j = 0; j < inst.K; ++j) {
    for (int l = 0; l < inst.K; ++l)
      A(j, l) = (l == j) ? inst.pg_p * inst.gain_pp[j] : -inst.qos[j] * inst.gain_pp[l];
    b[j] = inst.qos[j] * inst.noise;
  }

  PrimaryFeasibility out;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  if (!lu.isInvertible()) return out;  // singular system: infeasible

  Eigen::VectorXd p = lu.solve(b);
  if (!p.allFinite() || !(p.array() > 0.0).all()) return out;
  if (!((p.array() <= inst.cap_p.array() * (1.0 + 1e-12)).all())) return out;

  out.feasible = true;
  out.min_powers = std::move(p);
  return out;
}

}  // namespace underlay
