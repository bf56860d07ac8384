#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace kohnlab::num {

struct singular_overlap_error : std::runtime_error {
  int pivot;  // index of the offending pivot / basis column
  singular_overlap_error(const std::string& what, int pivot_) : std::runtime_error(what), pivot(pivot_) {}
};

struct singular_system_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GeneralizedEigOptions {
  // Relative eigenvalue threshold below which overlap directions are dropped
  // when allow_drop is set; otherwise near-singular S raises
  // singular_overlap_error.
  double drop_tol = 1e-10;
  bool allow_drop = false;
};

struct GeneralizedEigResult {
  double eigenvalue = 0.0;
  Eigen::VectorXd eigenvector;     // S-normalized: x^T S x = 1
  std::vector<int> dropped;        // canonical directions removed (indices into the S eigenbasis)
};

// Minimal Ritz pair of H x = e S x for real symmetric H and SPD S.
GeneralizedEigResult solve_generalized_symmetric(const Eigen::MatrixXd& H,
                                                 const Eigen::MatrixXd& S,
                                                 const GeneralizedEigOptions& opts = {});

struct LinearSolveReport {
  Eigen::VectorXcd x;
  double residual = 0.0;    // ||Ax-b|| / ||b||
  double condition = 1.0;   // 1-norm condition estimate, >= 1
  bool near_singular = false;
};

// LU solve with a Hager-style 1-norm condition estimate. Exact singularity
// throws singular_system_error; near-singularity (condition above
// `near_singular_threshold`) is only flagged.
LinearSolveReport solve_complex_system(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& b,
                                       double near_singular_threshold = 1e12);

}  // namespace kohnlab::num
