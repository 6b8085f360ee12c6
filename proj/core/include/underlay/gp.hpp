#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <string>
#include <vector>

// Geometric programs and a dense barrier interior-point solver.
//
// A GP here is: maximize a monomial subject to posynomial <= 1 constraints
// over strictly positive variables. Substituting x = exp(y) turns the
// objective affine and each constraint into log-sum-exp(A y + b) <= 0,
// which the barrier solver handles with Newton centering steps.

namespace underlay {

/// C * prod_i x_i^a_i with C > 0.
struct Monomial {
  double coeff = 1.0;
  Eigen::VectorXd exponents;
};

/// Sum of monomials, all coefficients positive.
struct Posynomial {
  std::vector<Monomial> terms;
};

double eval_monomial(const Monomial& m, const Eigen::VectorXd& x);
/// Throws std::invalid_argument unless all x are strictly positive.
double eval_posynomial(const Posynomial& p, const Eigen::VectorXd& x);

/// maximize objective s.t. every constraint posynomial <= 1, x > 0.
struct GpProblem {
  Monomial objective;
  std::vector<Posynomial> constraints;
  int num_vars = 0;
  std::vector<std::string> var_names;  ///< optional, for diagnostics

  /// Checks coefficient positivity, exponent dimensions, and that every
  /// variable appears with a positive exponent in some constraint term
  /// (otherwise nothing bounds it above). Throws std::invalid_argument.
  void validate() const;
};

/// log-sum-exp(A y + b) <= 0.
struct LseConstraint {
  Eigen::MatrixXd A;  ///< terms x vars
  Eigen::VectorXd b;  ///< per-term log coefficient
};

/// Log-domain image of a GpProblem: maximize obj_grad . y + obj_const
/// subject to the log-sum-exp constraints.
struct ConvexForm {
  int num_vars = 0;
  Eigen::VectorXd obj_grad;
  double obj_const = 0.0;
  std::vector<LseConstraint> constraints;
};

ConvexForm to_convex(const GpProblem& gp);

double lse_value(const LseConstraint& c, const Eigen::VectorXd& y);
Eigen::VectorXd lse_gradient(const LseConstraint& c, const Eigen::VectorXd& y);
Eigen::MatrixXd lse_hessian(const LseConstraint& c, const Eigen::VectorXd& y);

struct SolverOptions {
  double mu = 10.0;          ///< barrier parameter multiplier
  double t0 = 1.0;           ///< initial barrier weight
  double gap_tol = 1e-8;     ///< stop when m / t < gap_tol
  double newton_tol = 1e-9;  ///< stop centering when decrement^2 / 2 below this
  double bt_alpha = 0.25;    ///< backtracking sufficient-decrease fraction
  double bt_beta = 0.5;      ///< backtracking step shrink factor
  int max_newton_steps = 50; ///< per centering
};

enum class SolveStatus {
  Converged,     // duality-gap surrogate below tolerance
  StoppedEarly,  // early-stop hook fired
  StepFailed,    // line search collapsed
  NumericError,  // non-finite values encountered
};

const char* to_string(SolveStatus s);

struct SolveResult {
  Eigen::VectorXd y;
  double objective = 0.0;      ///< GP-scale value exp(obj_grad . y + obj_const)
  SolveStatus status = SolveStatus::NumericError;
  double kkt_residual = 0.0;   ///< stationarity inf-norm plus the gap bound m/t
  double barrier_gap = 0.0;    ///< m / t at exit
  int newton_iterations = 0;
  int centerings = 0;
};

/// Test and instrumentation hooks; both optional.
struct SolveHooks {
  /// Called after every accepted Newton step with the current barrier
  /// objective value t*f0 + phi.
  std::function<void(const Eigen::VectorXd& y, double barrier_value)> on_iterate;
  /// Checked after each centering; returning true ends the solve.
  std::function<bool(const Eigen::VectorXd& y)> stop_early;
};

/// Barrier interior-point solve from a strictly feasible start (throws
/// std::invalid_argument otherwise). Every iterate stays strictly feasible.
SolveResult solve(const ConvexForm& cf, const Eigen::VectorXd& start,
                  const SolverOptions& opts = {}, const SolveHooks& hooks = {});

struct Phase1Result {
  bool feasible = false;
  Eigen::VectorXd y;            ///< strictly feasible point when feasible
  double max_constraint = 0.0;  ///< max_i f_i at the returned point
  SolveStatus solver_status = SolveStatus::NumericError;
};

/// Standard phase-I: minimize s with every lse constraint relaxed by -s,
/// floored at s >= -1 to keep the auxiliary problem bounded. Declares
/// feasibility as soon as a point with margin is found.
Phase1Result phase1(const ConvexForm& cf, const std::optional<Eigen::VectorXd>& start = {},
                    const SolverOptions& opts = {});

// ---------------------------------------------------------------------------
// Generic smooth-convex barrier core. The GP solve is one instantiation;
// tests use it directly for alternative formulations.

/// Twice-differentiable scalar field.
struct SmoothFunction {
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hessian;
};

SmoothFunction affine_function(const Eigen::VectorXd& grad, double constant);
SmoothFunction lse_function(LseConstraint c);

struct BarrierResult {
  Eigen::VectorXd y;
  double objective = 0.0;  ///< objective.value(y)
  SolveStatus status = SolveStatus::NumericError;
  double kkt_residual = 0.0;
  double barrier_gap = 0.0;
  int newton_iterations = 0;
  int centerings = 0;
};

/// minimize objective(y) s.t. ineq_i(y) <= 0 via log-barrier Newton
/// centering; start must be strictly feasible.
BarrierResult minimize_barrier(const SmoothFunction& objective,
                               const std::vector<SmoothFunction>& ineq,
                               const Eigen::VectorXd& start, const SolverOptions& opts = {},
                               const SolveHooks& hooks = {});

}  // namespace underlay
