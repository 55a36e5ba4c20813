// matker.hpp
// Dense complex-matrix kernel shared by every texlab module: Hermitian
// eigendecomposition, trace norm, PSD square root, support projectors and
// the tolerance policy.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace texlab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

enum class ErrorKind {
  NotHermitian,
  NotPSD,
  TraceNotOne,
  NotSquare,
  NotFinite,
  InvalidDimension,
  IndexOutOfRange,
  ParameterOutOfRange,
  NonpositiveTemperature,
  InvalidRank,
  InvalidSize,
  DimensionMismatch,
  IncompleteChannel,
  NotFree,
  UnknownMeasure,
  NotNormalized,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::NonpositiveTemperature: return "NonpositiveTemperature";
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IncompleteChannel: return "IncompleteChannel";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::UnknownMeasure: return "UnknownMeasure";
    case ErrorKind::NotNormalized: return "NotNormalized";
  }
  return "Unknown";
}

/// Every failure raised by texlab. `violation()` carries the measured
/// quantity that broke the invariant (NaN when not applicable).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        double violation = std::numeric_limits<double>::quiet_NaN())
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        violation_(violation) {}

  ErrorKind kind() const noexcept { return kind_; }
  double violation() const noexcept { return violation_; }

 private:
  ErrorKind kind_;
  double violation_;
};

struct Tolerances {
  double hermiticity_tol = 1e-9;
  double psd_tol = 1e-9;
  double trace_tol = 1e-9;
  double rank_rel_tol = 1e-10;
  double monotonicity_slack = 1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double hermiticity_residual(const ComplexMatrix& m) {
  return max_abs(m - m.adjoint());
}

inline bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

inline void require_square_finite(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << "matrix is " << m.rows() << "x" << m.cols();
    throw Error(ErrorKind::NotSquare, os.str());
  }
  if (!all_finite(m)) throw Error(ErrorKind::NotFinite, "matrix has NaN or Inf entries");
}

inline void require_hermitian(const ComplexMatrix& m, const Tolerances& tol = kDefaultTolerances) {
  require_square_finite(m);
  const double r = hermiticity_residual(m);
  if (r > tol.hermiticity_tol) {
    std::ostringstream os;
    os << "max |M - M^dagger| = " << r << " exceeds " << tol.hermiticity_tol;
    throw Error(ErrorKind::NotHermitian, os.str(), r);
  }
}

struct EigenDecomposition {
  RealVector values;       // ascending
  ComplexMatrix vectors;   // orthonormal columns, vectors.col(k) <-> values(k)
};

inline EigenDecomposition hermitian_eig(const ComplexMatrix& m,
                                        const Tolerances& tol = kDefaultTolerances) {
  require_hermitian(m, tol);
  if (m.rows() == 0) return {RealVector(0), ComplexMatrix(0, 0)};
  // The solver reads only the lower triangle; symmetrize so both halves count.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

inline RealVector hermitian_eigenvalues(const ComplexMatrix& m,
                                        const Tolerances& tol = kDefaultTolerances) {
  require_hermitian(m, tol);
  if (m.rows() == 0) return RealVector(0);
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

inline double trace_norm(const ComplexMatrix& m, const Tolerances& tol = kDefaultTolerances) {
  return hermitian_eigenvalues(m, tol).cwiseAbs().sum();
}

namespace detail {

inline void require_psd_spectrum(const RealVector& values, const Tolerances& tol) {
  if (values.size() > 0 && values(0) < -tol.psd_tol) {
    std::ostringstream os;
    os << "min eigenvalue " << values(0) << " below -" << tol.psd_tol;
    throw Error(ErrorKind::NotPSD, os.str(), values(0));
  }
}

// Number of leading (largest) eigenvalues above rank_rel_tol * lambda_max.
// Eigenvalues arrive ascending, so the support occupies the trailing columns.
inline Eigen::Index support_rank(const RealVector& values, const Tolerances& tol) {
  if (values.size() == 0) return 0;
  const double lmax = values(values.size() - 1);
  if (lmax <= 0.0) return 0;
  const double cut = tol.rank_rel_tol * lmax;
  Eigen::Index r = 0;
  for (Eigen::Index k = values.size() - 1; k >= 0 && values(k) > cut; --k) ++r;
  return r;
}

}  // namespace detail

inline ComplexMatrix psd_sqrt(const ComplexMatrix& m, const Tolerances& tol = kDefaultTolerances) {
  const auto eig = hermitian_eig(m, tol);
  detail::require_psd_spectrum(eig.values, tol);
  const RealVector roots = eig.values.cwiseMax(0.0).cwiseSqrt();
  ComplexMatrix r = eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
  return 0.5 * (r + r.adjoint());
}

/// Orthonormal basis (as columns) of the support of a PSD matrix.
inline ComplexMatrix support_basis(const ComplexMatrix& m, const Tolerances& tol = kDefaultTolerances) {
  const auto eig = hermitian_eig(m, tol);
  detail::require_psd_spectrum(eig.values, tol);
  const Eigen::Index r = detail::support_rank(eig.values, tol);
  return eig.vectors.rightCols(r);
}

inline ComplexMatrix support_projector(const ComplexMatrix& m, const Tolerances& tol = kDefaultTolerances) {
  const ComplexMatrix basis = support_basis(m, tol);
  if (basis.cols() == 0) return ComplexMatrix::Zero(m.rows(), m.cols());
  return basis * basis.adjoint();
}

inline Eigen::Index numerical_rank(const ComplexMatrix& m, const Tolerances& tol = kDefaultTolerances) {
  return support_basis(m, tol).cols();
}

}  // namespace texlab
