#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mmv {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct NonFiniteEntry : std::runtime_error {
  explicit NonFiniteEntry(const std::string& what) : std::runtime_error(what) {}
};
struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};
struct DegenerateData : std::runtime_error {
  explicit DegenerateData(const std::string& what) : std::runtime_error(what) {}
};
struct InvalidShape : std::runtime_error {
  explicit InvalidShape(const std::string& what) : std::runtime_error(what) {}
};
struct DegenerateGamma : std::runtime_error {
  explicit DegenerateGamma(const std::string& what) : std::runtime_error(what) {}
};
struct EmptyInterval : std::runtime_error {
  explicit EmptyInterval(const std::string& what) : std::runtime_error(what) {}
};
struct EmptyChain : std::runtime_error {
  explicit EmptyChain(const std::string& what) : std::runtime_error(what) {}
};
struct InvalidBlockSpec : std::runtime_error {
  explicit InvalidBlockSpec(const std::string& what) : std::runtime_error(what) {}
};
struct InvalidWaveformShape : std::runtime_error {
  explicit InvalidWaveformShape(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Problem and configuration types
// ---------------------------------------------------------------------------

/// Multi-task regression / MMV problem: M = G X + noise, with the q = d*n rows
/// of X organized into n groups of d consecutive rows that share one
/// hyperparameter. All matrices are dense; everything is immutable after
/// construction.
struct MMVProblem {
  Matrix M;   // m x t measurements
  Matrix G;   // m x q design
  int n = 0;  // number of groups (source locations)
  int d = 1;  // rows per group (orientations)
  int t = 0;  // measurement columns (tasks / time samples)

  int m() const { return static_cast<int>(G.rows()); }
  int q() const { return n * d; }
};

/// 1-based group identifier; group i spans rows (i-1)*d .. i*d-1.
struct GroupIndex {
  int value = 1;
  explicit GroupIndex(int v) : value(v) {}
};

/// Per-group hyperparameters gamma and the derived per-group weights w.
/// The weight vector expands to a q-length diagonal by repeating each entry
/// d times.
struct HyperState {
  Vector gamma;    // length n, >= 0
  Vector weights;  // length n, >= 0

  static HyperState from_weights(const Vector& w) {
    HyperState h;
    h.weights = w;
    h.gamma = Vector::Zero(w.size());
    return h;
  }
  static HyperState from_gamma(const Vector& g, double lambda) {
    HyperState h;
    h.gamma = g;
    h.weights = lambda * g;
    return h;
  }
};

struct MMConfig {
  double lambda = 1.0;    // regularization, > 0
  double p = 0.5;         // outer penalty exponent (0.5 for MM, 1 for plain l21)
  double eps = 1e-8;      // inner solver duality-gap precision
  double tau = 1e-6;      // outer stopping tolerance (sup-norm on X_hat)
  int max_outer = 50;     // max MM iterations
  int max_inner = 100000; // max BCD sweeps per inner solve
  bool keep_iterates = false;
};

struct SamplerConfig {
  int K0 = 0;         // burn-in samples (discarded)
  int K = 1;          // retained samples
  int K_SC = 1;       // single-component Gibbs sweeps per block step
  int K_SS = 1;       // slice-sampler steps per coefficient
  double alpha = 2.0; // gamma hyper-prior shape
  double beta = 1.0;  // gamma hyper-prior scale, > 0
  std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Checks all MMVProblem invariants; throws DimensionMismatch or
/// NonFiniteEntry on violation.
void validate_problem(const MMVProblem& problem);

/// Rows (i-1)*d .. i*d-1 of X as a d x t view (1-based group index).
Eigen::Block<const Matrix> group_view(const Matrix& X, GroupIndex i, int d);
Eigen::Block<Matrix> group_view(Matrix& X, GroupIndex i, int d);

/// Frobenius norm of group l (0-based) of X.
inline double group_norm(const Matrix& X, int l, int d) {
  return X.middleRows(static_cast<Eigen::Index>(l) * d, d).norm();
}

/// Frobenius norms of all n groups.
Vector group_norms(const Matrix& X, int n, int d);

/// Expands a per-group weight vector to length q = d*n by repeating each
/// entry d times (the Kronecker-with-ones diagonal).
Vector expand_weights(const Vector& w, int d);

}  // namespace mmv
