#pragma once

#include <vector>

#include "mmv/grouplasso.hpp"
#include "mmv/types.hpp"

namespace mmv {

/// Trace of one MM (Adaptive Lasso) run. weight_seq[k] holds the weights
/// derived from the k-th iterate; objective_l2half is the p=1/2 objective of
/// each iterate and is non-increasing. X_seq is only populated when
/// MMConfig::keep_iterates is set.
struct MMTrace {
  Matrix X_hat;
  std::vector<Vector> weight_seq;
  std::vector<double> objective_l2half;
  std::vector<Matrix> X_seq;
  bool converged = false;
  int outer_iterations = 0;
  bool inner_converged = true;  // false if any inner solve hit max_inner
};

/// Reweighting rule: w_i = 2 * sqrt(||X_hat_[i]||_F); zero groups get
/// weight 0 and stay pruned.
Vector update_weights(const Matrix& X_hat, int d, int n);

/// MM iterations for the l2,1/2 objective: repeated weighted l2,1 solves with
/// rescaling and reweighting, stopping on sup-norm stagnation or after
/// max_outer rounds. Each inner solve is warm-started from the previous
/// iterate, which makes the p=1/2 objective non-increasing to machine
/// precision. Requires config.p == 0.5.
MMTrace mm_solve(const MMVProblem& problem, const MMConfig& config, const Vector& W0);

/// Closed-form minimizer of the per-group hyperparameter objective
///   ||X_[i]||^p / g + g/beta - (alpha - 1 - dt/p) log g :
///   gamma_i = beta * (nu + sqrt(nu^2 + ||X_[i]||^p / beta)),
///   nu = (alpha - 1 - dt/p) / 2.
/// Requires alpha >= d*t/p + 1 (convexity); throws InvalidShape below it.
Vector gamma_map_update(const Matrix& X, double alpha, double beta, double p, int d, int t);

/// Joint negative log posterior of (X, gamma), up to constants:
/// 1/2||M-GX||^2 + sum_i [ ||X_[i]||^p/gamma_i + gamma_i/beta
///                         - (alpha-1-dt/p) log gamma_i ].
double neg_log_posterior(const MMVProblem& problem, const Matrix& X, const Vector& gamma,
                         double alpha, double beta, double p);

struct FullMapTrace {
  Matrix X;
  Vector gamma;
  std::vector<Vector> gamma_seq;
  std::vector<Vector> weight_seq;  // lambda_eff * gamma, aligned with mm_solve's weights
  std::vector<double> neg_log_post;
  bool converged = false;
  int rounds = 0;
  bool inner_converged = true;
};

/// Alternating minimization of the negative log posterior over X and gamma
/// (p = 1): the X-step is a weighted l2,1 solve with weights
/// w_i = lambda_eff * gamma_i where lambda_eff = 2/sqrt(beta), and the
/// gamma-step is gamma_map_update. Stops after K rounds or when successive
/// X iterates agree to tau in sup-norm.
FullMapTrace full_map_alternating(const MMVProblem& problem, double alpha, double beta,
                                  double p, const Vector& gamma0, int K, double eps,
                                  double tau, int max_inner = 100000);

/// Hyper-prior parameters whose full-MAP iteration reproduces the MM scheme
/// at regularization lambda: alpha = d*t + 1, beta = 4 / lambda^2.
std::pair<double, double> hbm_params_from_lambda(double lambda, int d, int t);

/// w_i = lambda * gamma_i.
Vector weights_from_gamma(const Vector& gamma, double lambda);

}  // namespace mmv
