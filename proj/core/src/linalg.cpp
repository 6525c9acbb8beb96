#include "fwis/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace fwis::linalg {

double frobenius(const Eigen::MatrixXd& a) { return a.norm(); }

SymMatrix::SymMatrix(int dim) {
  if (dim < 1) throw ContractViolation("SymMatrix: dim must be >= 1");
  m_ = Eigen::MatrixXd::Zero(dim, dim);
}

SymMatrix SymMatrix::from_matrix(const Eigen::MatrixXd& a, double sym_tol) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw ContractViolation("SymMatrix: matrix must be square, dim >= 1");
  double asym = (a - a.transpose()).norm();
  if (!(asym <= sym_tol * (1.0 + a.norm()))) {
    std::ostringstream os;
    os << "SymMatrix: input is not symmetric (|A - A'| = " << asym << ")";
    throw ContractViolation(os.str());
  }
  SymMatrix s(static_cast<int>(a.rows()));
  const int p = s.dim();
  for (int i = 0; i < p; ++i) {
    s.m_(i, i) = a(i, i);
    for (int j = 0; j < i; ++j) {
      double v = 0.5 * (a(i, j) + a(j, i));
      s.m_(i, j) = v;
      s.m_(j, i) = v;
    }
  }
  return s;
}

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix s(dim);
  s.m_.setIdentity();
  return s;
}

SymMatrix SymMatrix::diagonal(const Eigen::VectorXd& d) {
  SymMatrix s(static_cast<int>(d.size()));
  s.m_ = d.asDiagonal();
  return s;
}

PsdMatrix PsdMatrix::from_sym(const SymMatrix& a, double cone_tol) {
  double mineig = min_eigenvalue(a.mat());
  double scale = 1.0 + a.mat().norm();
  if (mineig < -cone_tol * scale) {
    std::ostringstream os;
    os << "PsdMatrix: smallest eigenvalue " << mineig
       << " is outside the PSD cone";
    throw ContractViolation(os.str());
  }
  return PsdMatrix(a, mineig);
}

PsdMatrix PsdMatrix::identity(int dim) {
  return PsdMatrix(SymMatrix::identity(dim), 1.0);
}

PsdMatrix PsdMatrix::diagonal(const Eigen::VectorXd& d) {
  if (d.minCoeff() < 0.0)
    throw ContractViolation("PsdMatrix::diagonal: negative entry");
  return PsdMatrix(SymMatrix::diagonal(d), d.minCoeff());
}

PsdMatrix PsdMatrix::zero(int dim) { return PsdMatrix(SymMatrix(dim), 0.0); }

PsdMatrix PsdMatrix::trusted(SymMatrix a, double min_eig) {
  return PsdMatrix(std::move(a), min_eig);
}

namespace {

// Analytic 2x2 symmetric eigen pair via a Jacobi rotation.
SymEig eig2(const Eigen::MatrixXd& a) {
  double a11 = a(0, 0), a12 = 0.5 * (a(0, 1) + a(1, 0)), a22 = a(1, 1);
  double m = 0.5 * (a11 + a22);
  double d = 0.5 * (a11 - a22);
  double r = std::hypot(d, a12);
  double c, s;
  if (r == 0.0) {
    c = 1.0;
    s = 0.0;
  } else {
    double theta = 0.5 * std::atan2(2.0 * a12, a11 - a22);
    c = std::cos(theta);
    s = std::sin(theta);
  }
  SymEig e;
  e.eigenvalues = Eigen::Vector2d(m - r, m + r);
  e.eigenvectors = Eigen::MatrixXd(2, 2);
  // column 1 = [c, s] carries m + r; column 0 is its orthogonal mate
  e.eigenvectors(0, 0) = -s;
  e.eigenvectors(1, 0) = c;
  e.eigenvectors(0, 1) = c;
  e.eigenvectors(1, 1) = s;
  return e;
}

}  // namespace

SymEig sym_eig(const Eigen::MatrixXd& a) {
  const int p = static_cast<int>(a.rows());
  if (p == 1) {
    SymEig e;
    e.eigenvalues = Eigen::VectorXd::Constant(1, a(0, 0));
    e.eigenvectors = Eigen::MatrixXd::Identity(1, 1);
    return e;
  }
  if (p == 2) return eig2(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "sym_eig: eigensolver failed to converge on\n" << a;
    throw NumericError(os.str());
  }
  SymEig e;
  e.eigenvalues = solver.eigenvalues();
  e.eigenvectors = solver.eigenvectors();
  return e;
}

double min_eigenvalue(const Eigen::MatrixXd& sym) {
  return sym_eig(sym).eigenvalues.minCoeff();
}

PsdMatrix sym_sqrt(const PsdMatrix& a) {
  SymEig e = sym_eig(a.mat());
  const int p = a.dim();
  Eigen::VectorXd sq(p);
  for (int i = 0; i < p; ++i)
    sq(i) = std::sqrt(std::max(e.eigenvalues(i), 0.0));
  Eigen::MatrixXd r =
      e.eigenvectors * sq.asDiagonal() * e.eigenvectors.transpose();
  return PsdMatrix::trusted(SymMatrix::from_matrix(r, 1e-8), sq.minCoeff());
}

ProjectionResult psd_project(const SymMatrix& a, double floor) {
  if (floor < 0.0) throw ContractViolation("psd_project: floor must be >= 0");
  SymEig e = sym_eig(a.mat());
  double mineig = e.eigenvalues.minCoeff();
  if (mineig >= floor) {
    return ProjectionResult{PsdMatrix::trusted(a, mineig), false, mineig};
  }
  const int p = a.dim();
  Eigen::VectorXd lam(p);
  for (int i = 0; i < p; ++i) lam(i) = std::max(e.eigenvalues(i), floor);
  Eigen::MatrixXd r =
      e.eigenvectors * lam.asDiagonal() * e.eigenvectors.transpose();
  return ProjectionResult{
      PsdMatrix::trusted(SymMatrix::from_matrix(r, 1e-8), lam.minCoeff()),
      true, mineig};
}

double default_clamp_floor(const SymMatrix& a) {
  return 1e-12 * a.trace() / a.dim();
}

Eigen::MatrixXd cholesky_raw(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    double d = a(k, k);
    for (int j = 0; j < k; ++j) d -= l(k, j) * l(k, j);
    if (!(d > 0.0)) {
      std::ostringstream os;
      os << "cholesky: leading minor of order " << (k + 1)
         << " is not positive definite";
      throw ConeError(os.str(), k + 1);
    }
    l(k, k) = std::sqrt(d);
    for (int i = k + 1; i < n; ++i) {
      double s = a(i, k);
      for (int j = 0; j < k; ++j) s -= l(i, j) * l(k, j);
      l(i, k) = s / l(k, k);
    }
  }
  return l;
}

Eigen::MatrixXd cholesky(const PsdMatrix& a) {
  if (!(a.min_eig() > 0.0)) {
    throw ConeError("cholesky: matrix is singular (min_eig <= 0)", 1);
  }
  return cholesky_raw(a.mat());
}

}  // namespace fwis::linalg
