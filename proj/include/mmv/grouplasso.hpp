#pragma once

#include "mmv/types.hpp"

namespace mmv {

/// Result of one weighted l2,1 solve.
struct LassoResult {
  Matrix X_hat;           // rescaled solution (q x t)
  double objective = 0;   // weighted objective value at the solution
  double dual_gap = 0;    // duality gap at termination
  int iterations = 0;     // BCD sweeps performed
  bool converged = true;  // false iff max_inner sweeps were exhausted
};

/// Smallest lambda for which the uniformly weighted l2,1 solution is
/// identically zero: max_i || (G^T M)_[i] ||_F.
/// Throws DegenerateData when G^T M is identically zero.
double lambda_max(const Matrix& G, const Matrix& M, int n, int d);

/// Proximal operator of the group norm: 0 if ||B||_F <= threshold, else
/// (1 - threshold/||B||_F) * B.
Matrix group_soft_threshold(const Matrix& B, double threshold);

/// Solves  min_X 1/2 ||M - G W X||_F^2 + lambda * sum_i ||X_[i]||_F
/// by cyclic block coordinate descent and returns the rescaled solution
/// X_hat = W X together with the duality gap at termination. Groups with
/// zero weight are pruned (fixed at zero). `X_hat_warm`, when given, is a
/// previous solution in X_hat coordinates used as the starting point.
LassoResult solve_weighted_l21(const MMVProblem& problem, const Vector& group_weights,
                               double lambda, double eps, int max_inner,
                               const Matrix* X_hat_warm = nullptr);

inline LassoResult solve_weighted_l21(const MMVProblem& problem, const HyperState& weights,
                                      double lambda, double eps, int max_inner,
                                      const Matrix* X_hat_warm = nullptr) {
  return solve_weighted_l21(problem, weights.weights, lambda, eps, max_inner, X_hat_warm);
}

/// 1/2 ||M - G X||_F^2 + lambda * sum_i ||X_[i]||_F^p  for p in {1, 1/2}.
double objective_l2p(const MMVProblem& problem, const Matrix& X, double lambda, double p);

/// Per-group norms of G~^T (M - G~ X~); the KKT certificate checked by the
/// tests. Exposed separately so callers can audit a solution.
Vector kkt_group_norms(const Matrix& G_scaled, const Matrix& M, const Matrix& X_scaled,
                       int n, int d);

}  // namespace mmv
