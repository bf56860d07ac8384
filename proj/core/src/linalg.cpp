#include "kohnlab/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace kohnlab::num {

namespace {

// Plain Cholesky that reports the first failing pivot column.
int cholesky_failing_pivot(const Eigen::MatrixXd& S, double rel_tol) {
  const int n = static_cast<int>(S.rows());
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  const double scale = S.diagonal().maxCoeff();
  for (int j = 0; j < n; ++j) {
    double d = S(j, j);
    for (int k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
    if (!(d > rel_tol * scale)) return j;
    L(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double v = S(i, j);
      for (int k = 0; k < j; ++k) v -= L(i, k) * L(j, k);
      L(i, j) = v / L(j, j);
    }
  }
  return -1;
}

}  // namespace

GeneralizedEigResult solve_generalized_symmetric(const Eigen::MatrixXd& H,
                                                 const Eigen::MatrixXd& S,
                                                 const GeneralizedEigOptions& opts) {
  if (H.rows() != H.cols() || S.rows() != S.cols() || H.rows() != S.rows())
    throw std::invalid_argument("solve_generalized_symmetric: dimension mismatch");
  const int n = static_cast<int>(H.rows());
  if (n == 0) throw std::invalid_argument("solve_generalized_symmetric: empty matrices");

  GeneralizedEigResult out;
  if (!opts.allow_drop) {
    const int pivot = cholesky_failing_pivot(S, opts.drop_tol);
    if (pivot >= 0)
      throw singular_overlap_error(
          "solve_generalized_symmetric: overlap matrix not positive definite (pivot " +
              std::to_string(pivot) + ")",
          pivot);
    Eigen::LLT<Eigen::MatrixXd> llt(S);
    const Eigen::MatrixXd L = llt.matrixL();
    const Eigen::MatrixXd LinvH = L.triangularView<Eigen::Lower>().solve(H);
    const Eigen::MatrixXd C =
        L.triangularView<Eigen::Lower>().solve(LinvH.transpose()).transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (C + C.transpose()));
    out.eigenvalue = es.eigenvalues()(0);
    Eigen::VectorXd y = es.eigenvectors().col(0);
    out.eigenvector = L.transpose().triangularView<Eigen::Upper>().solve(y);
  } else {
    // Canonical orthogonalization: drop overlap eigendirections below the
    // relative tolerance, solve in the retained subspace.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> seig(S);
    const Eigen::VectorXd sv = seig.eigenvalues();
    const double smax = sv(n - 1);
    if (!(smax > 0)) throw singular_overlap_error("overlap matrix has no positive directions", 0);
    std::vector<int> keep;
    for (int i = 0; i < n; ++i) {
      if (sv(i) > opts.drop_tol * smax)
        keep.push_back(i);
      else
        out.dropped.push_back(i);
    }
    const int k = static_cast<int>(keep.size());
    Eigen::MatrixXd X(n, k);
    for (int i = 0; i < k; ++i)
      X.col(i) = seig.eigenvectors().col(keep[i]) / std::sqrt(sv(keep[i]));
    Eigen::MatrixXd Ht = X.transpose() * H * X;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (Ht + Ht.transpose()));
    out.eigenvalue = es.eigenvalues()(0);
    out.eigenvector = X * es.eigenvectors().col(0);
  }
  // S-normalize (and fix an overall sign for reproducibility).
  const double nrm = out.eigenvector.transpose() * S * out.eigenvector;
  out.eigenvector /= std::sqrt(nrm);
  int imax;
  out.eigenvector.cwiseAbs().maxCoeff(&imax);
  if (out.eigenvector(imax) < 0) out.eigenvector = -out.eigenvector;
  return out;
}

LinearSolveReport solve_complex_system(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& b,
                                       double near_singular_threshold) {
  if (A.rows() != A.cols() || A.rows() != b.size())
    throw std::invalid_argument("solve_complex_system: dimension mismatch");
  const int n = static_cast<int>(A.rows());

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
  const Eigen::MatrixXcd& LU = lu.matrixLU();
  double umax = 0.0, umin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double d = std::abs(LU(i, i));
    umax = std::max(umax, d);
    umin = std::min(umin, d);
  }
  if (umin == 0.0 || umax == 0.0)
    throw singular_system_error("solve_complex_system: matrix is exactly singular");

  LinearSolveReport rep;
  rep.x = lu.solve(b);
  const double bn = b.norm();
  rep.residual = bn > 0 ? (A * rep.x - b).norm() / bn : (A * rep.x).norm();

  // Hager/Higham 1-norm estimate of ||A^-1||_1 from the factorization.
  const double anorm = A.cwiseAbs().colwise().sum().maxCoeff();
  Eigen::VectorXcd x = Eigen::VectorXcd::Constant(n, std::complex<double>(1.0 / n, 0.0));
  double est = 0.0;
  int last_j = -1;
  for (int iter = 0; iter < 5; ++iter) {
    Eigen::VectorXcd y = lu.solve(x);
    est = y.cwiseAbs().sum();
    Eigen::VectorXcd xi(n);
    for (int i = 0; i < n; ++i) {
      const double m = std::abs(y(i));
      xi(i) = m > 0 ? y(i) / m : std::complex<double>(1.0, 0.0);
    }
    Eigen::VectorXcd z = lu.adjoint().solve(xi);
    int j;
    z.cwiseAbs().maxCoeff(&j);
    if (j == last_j) break;
    const double zmax = std::abs(z(j));
    if (iter > 0 && zmax <= std::real(z.dot(x))) break;
    x.setZero();
    x(j) = 1.0;
    last_j = j;
  }
  rep.condition = std::max(1.0, anorm * est);
  rep.near_singular = rep.condition > near_singular_threshold;
  return rep;
}

}  // namespace kohnlab::num
