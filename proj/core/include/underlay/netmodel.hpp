#pragma once

#include <Eigen/Dense>

#include <string>

// Network data model and exact link physics for a spectrum-underlay cell:
// K primary uplink users towards one base station, N secondary ad-hoc links
// sharing the band. All gains and SINRs are linear scale, powers in watts.

namespace underlay {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double v) { return 10.0 * std::log10(v); }

/// One network drop: channel gains, noise, QoS floors, power caps and
/// CDMA processing gains. Immutable after construction by convention;
/// all operations on it are pure functions.
struct NetworkInstance {
  int K = 0;  ///< primary users
  int N = 0;  ///< secondary links

  Eigen::VectorXd gain_pp;  ///< K: primary tx j -> base station
  Eigen::VectorXd gain_ps;  ///< N: secondary tx i -> base station
  Eigen::MatrixXd gain_ss;  ///< N x N: (i,l) = secondary tx l -> secondary rx i
  Eigen::MatrixXd gain_sp;  ///< N x K: (i,j) = primary tx j -> secondary rx i

  double noise = 0.0;       ///< background noise power N0, watts
  Eigen::VectorXd qos;      ///< K: minimum primary SINR, linear
  Eigen::VectorXd cap_p;    ///< K: primary power caps, watts
  Eigen::VectorXd cap_s;    ///< N: secondary power caps, watts
  double pg_p = 1.0;        ///< primary processing gain, >= 1
  double pg_s = 1.0;        ///< secondary processing gain, >= 1

  /// Throws std::invalid_argument on inconsistent dimensions, non-positive
  /// gains/noise/caps/qos, or processing gains below 1.
  void validate() const;
};

/// Transmit powers, primary block then secondary block.
/// Evaluation context allows zero entries; GP variables must stay positive.
struct PowerAllocation {
  Eigen::VectorXd pp;  ///< K
  Eigen::VectorXd ps;  ///< N
};

/// Per-user SINRs, linear scale.
struct SinrVector {
  Eigen::VectorXd xp;  ///< K
  Eigen::VectorXd xs;  ///< N

  /// Primary-first stacked vector [xp; xs] of length K+N.
  Eigen::VectorXd stacked() const;
};

/// Objective scenario: which users' throughput is counted.
enum class ScenarioMode {
  PrimaryOnly,   // alpha_s = 0, alpha_p = 1: secondaries off
  Shared,        // alpha_s = 1, alpha_p = 1: joint sum throughput
  SecondaryMax,  // alpha_s = 1, alpha_p = 0: secondary throughput under primary QoS
};

constexpr double alpha_p(ScenarioMode m) { return m == ScenarioMode::SecondaryMax ? 0.0 : 1.0; }
constexpr double alpha_s(ScenarioMode m) { return m == ScenarioMode::PrimaryOnly ? 0.0 : 1.0; }

const char* to_string(ScenarioMode m);
/// Parses "primary-only" / "shared" / "secondary-max"; throws std::invalid_argument.
ScenarioMode mode_from_string(const std::string& s);

/// Exact SINRs at a power allocation. The processing gain multiplies the
/// desired-signal term. Throws std::invalid_argument on dimension mismatch.
SinrVector compute_sinr(const NetworkInstance& inst, const PowerAllocation& alloc);
/// Allocation-free overload for hot loops; out vectors are resized as needed.
void compute_sinr(const NetworkInstance& inst, const PowerAllocation& alloc, SinrVector& out);

/// Scenario objective in bps/Hz: alpha_s * sum log2(1+xs) + alpha_p * sum log2(1+xp).
double sum_throughput(const SinrVector& sinr, ScenarioMode mode);
double primary_throughput(const SinrVector& sinr);
double secondary_throughput(const SinrVector& sinr);

/// Per-constraint slacks at an allocation. Violations are reported, never thrown.
struct ConstraintReport {
  Eigen::VectorXd qos_slack;    ///< K: xp_j - qos_j
  Eigen::VectorXd cap_slack_p;  ///< K: cap_p_j - pp_j
  Eigen::VectorXd cap_slack_s;  ///< N: cap_s_i - ps_i
  double min_power = 0.0;       ///< smallest power entry
  bool qos_ok = false;
  bool caps_ok = false;
  bool nonneg_ok = false;

  bool ok() const { return qos_ok && caps_ok && nonneg_ok; }
  double worst_qos_slack() const;
  double worst_cap_slack() const;
};

ConstraintReport check_constraints(const NetworkInstance& inst, const PowerAllocation& alloc,
                                   double tol);

/// Result of the primary-only target-SINR solve: the unique power vector
/// meeting every QoS floor with equality when secondaries are silent.
struct PrimaryFeasibility {
  bool feasible = false;
  Eigen::VectorXd min_powers;  ///< K, valid only when feasible
};

/// Solves pg_p * p_j * g_j = qos_j * (sum_{l != j} p_l g_l + N0) for all j.
/// Feasible iff the solution exists, is strictly positive and respects caps.
PrimaryFeasibility primary_feasibility(const NetworkInstance& inst);

}  // namespace underlay
