#pragma once

#include <Eigen/Core>
#include <utility>

#include "fwis/errors.hpp"

namespace fwis::linalg {

// Rectangular matrices (n x p) carry no extra invariants beyond their
// shape, so they are plain Eigen matrices.
using RectMatrix = Eigen::MatrixXd;

double frobenius(const Eigen::MatrixXd& a);

// Symmetric p x p matrix, symmetric by construction: the constructor
// mirrors the lower triangle so entries(i,j) == entries(j,i) holds
// bitwise, not merely within tolerance.
class SymMatrix {
 public:
  explicit SymMatrix(int dim);

  // Checks |A - A'| <= sym_tol * (1 + |A|), then symmetrizes exactly.
  static SymMatrix from_matrix(const Eigen::MatrixXd& a,
                               double sym_tol = 1e-10);
  static SymMatrix identity(int dim);
  static SymMatrix diagonal(const Eigen::VectorXd& d);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  double trace() const { return m_.trace(); }

 private:
  Eigen::MatrixXd m_;
};

// Symmetric PSD matrix with its smallest eigenvalue cached at
// construction.  Construction rejects matrices more than a rounding
// margin outside the cone; use psd_project to clamp instead.
class PsdMatrix {
 public:
  static PsdMatrix from_sym(const SymMatrix& a, double cone_tol = 1e-10);
  static PsdMatrix identity(int dim);
  static PsdMatrix diagonal(const Eigen::VectorXd& d);
  static PsdMatrix zero(int dim);

  // Caller guarantees PSD-ness and supplies the known smallest
  // eigenvalue (used where PSD holds by construction, e.g. G'G).
  static PsdMatrix trusted(SymMatrix a, double min_eig);

  int dim() const { return base_.dim(); }
  const SymMatrix& sym() const { return base_; }
  const Eigen::MatrixXd& mat() const { return base_.mat(); }
  double min_eig() const { return min_eig_; }
  bool is_pd() const { return min_eig_ > 0.0; }

 private:
  PsdMatrix(SymMatrix base, double min_eig)
      : base_(std::move(base)), min_eig_(min_eig) {}
  SymMatrix base_;
  double min_eig_;
};

// Eigendecomposition of a symmetric matrix; eigenvalues ascending.
// Closed forms for dim 1 and 2, Eigen's self-adjoint solver above.
struct SymEig {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;  // columns
};
SymEig sym_eig(const Eigen::MatrixXd& a);

double min_eigenvalue(const Eigen::MatrixXd& sym);

// Symmetric PSD square root R with R*R = A within 1e-10*(1+|A|).
// Negative eigenvalues from rounding are clamped to zero.
PsdMatrix sym_sqrt(const PsdMatrix& a);

struct ProjectionResult {
  PsdMatrix matrix;
  bool clamped = false;          // true when any eigenvalue was lifted
  double min_eig_before = 0.0;
};

// Eigenvalue clamp onto {min_eig >= floor}.  Inputs already inside
// return bitwise unchanged.
ProjectionResult psd_project(const SymMatrix& a, double floor = 0.0);

// Scale-relative default clamp floor.
double default_clamp_floor(const SymMatrix& a);

// Lower-triangular L with L L' = A; fails with the 1-based order of
// the first non-positive leading minor.
Eigen::MatrixXd cholesky(const PsdMatrix& a);

// Same factorization for raw symmetric data (grid covariances).
Eigen::MatrixXd cholesky_raw(const Eigen::MatrixXd& a);

}  // namespace fwis::linalg
