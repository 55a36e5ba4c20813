// measures.hpp
// Texture quantifiers. Each returns an ExtendedValue: a nonnegative real or
// +infinity. All measures are taken relative to the textureless state |f1>.

#pragma once

#include "texlab/states.hpp"

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace texlab {

class ExtendedValue {
 public:
  static constexpr double kClipTol = 1e-12;

  static ExtendedValue finite(double v) {
    if (!std::isfinite(v)) throw Error(ErrorKind::NotFinite, "finite measure value is not finite");
    if (v < -kClipTol) throw Error(ErrorKind::ParameterOutOfRange, "negative measure value", v);
    return ExtendedValue(v < 0.0 ? 0.0 : v, false);
  }
  static ExtendedValue infinity() { return ExtendedValue(0.0, true); }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }
  /// +inf for infinite values.
  double value() const { return inf_ ? std::numeric_limits<double>::infinity() : v_; }

  friend bool operator==(const ExtendedValue&, const ExtendedValue&) = default;

 private:
  ExtendedValue(double v, bool inf) : v_(v), inf_(inf) {}
  double v_;
  bool inf_;
};

enum class MeasureId { Rugosity, Trace, Geometric, Fidelity, Bures, RelEntropy, Robustness, L1 };

inline constexpr std::array<MeasureId, 8> kAllMeasures{
    MeasureId::Rugosity, MeasureId::Trace,      MeasureId::Geometric,  MeasureId::Fidelity,
    MeasureId::Bures,    MeasureId::RelEntropy, MeasureId::Robustness, MeasureId::L1};

inline std::string_view measure_name(MeasureId id) {
  switch (id) {
    case MeasureId::Rugosity: return "rugosity";
    case MeasureId::Trace: return "trace";
    case MeasureId::Geometric: return "geometric";
    case MeasureId::Fidelity: return "fidelity";
    case MeasureId::Bures: return "bures";
    case MeasureId::RelEntropy: return "rel_entropy";
    case MeasureId::Robustness: return "robustness";
    case MeasureId::L1: return "l1";
  }
  return "?";
}

inline MeasureId parse_measure(std::string_view name) {
  for (auto id : kAllMeasures)
    if (measure_name(id) == name) return id;
  throw Error(ErrorKind::UnknownMeasure, "unknown measure '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

/// Overlaps at or below this are summation noise and read as exactly 0.
/// Without the snap, sqrt() in the Bures measure turns 1e-17 of noise into
/// errors of order 1e-8 on states orthogonal to f1.
inline constexpr double kRugosityInfinityThreshold = 1e-15;

/// <f1|rho|f1> = sum_ij rho_ij / d, clipped into [0, 1].
inline double overlap_f1(const DensityMatrix& rho) {
  const double v = rho.matrix().sum().real() / static_cast<double>(rho.dim());
  if (v <= kRugosityInfinityThreshold) return 0.0;
  return std::min(v, 1.0);
}

inline ExtendedValue rugosity(const DensityMatrix& rho) {
  const double ov = overlap_f1(rho);
  if (ov == 0.0) return ExtendedValue::infinity();
  return ExtendedValue::finite(-std::log(ov));
}

/// Half the trace norm of a difference of Hermitian matrices.
inline double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw Error(ErrorKind::DimensionMismatch, "trace distance of unequal dims");
  return 0.5 * trace_norm(rho.matrix() - sigma.matrix());
}

inline ExtendedValue texture_trace(const DensityMatrix& rho) {
  return ExtendedValue::finite(std::min(1.0, trace_distance(rho, textureless_density(rho.dim()))));
}

inline double texture_geometric_pure(const PureState& psi) {
  const double ov = std::norm(textureless_state(psi.dim()).inner(psi));
  return std::clamp(1.0 - ov, 0.0, 1.0);
}

// Closed form: sum_i p_i |<f1|psi_i>|^2 = <f1|rho|f1> for every decomposition,
// so the roof is constant over the feasible set. roof.hpp verifies this.
inline ExtendedValue texture_geometric(const DensityMatrix& rho) {
  return ExtendedValue::finite(1.0 - overlap_f1(rho));
}

inline double geometric_lower_bound(const DensityMatrix& rho) {
  const double t = texture_trace(rho).value();
  return t * t;
}

/// [Tr sqrt(sqrt(rho) sigma sqrt(rho))]^2.
///
/// Evaluated as the squared trace norm of A = sqrt(rho) sqrt(sigma) with both
/// square roots restricted to their supports, A being formed in the r x s
/// eigenbasis coordinates. Singular values come from a Jacobi SVD, which keeps
/// the tiny ones accurate to machine precision instead of sqrt(eps).
inline double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma,
                               const Tolerances& tol = kDefaultTolerances) {
  if (rho.dim() != sigma.dim()) throw Error(ErrorKind::DimensionMismatch, "fidelity of unequal dims");
  const auto er = hermitian_eig(rho.matrix(), tol);
  const auto es = hermitian_eig(sigma.matrix(), tol);
  const auto r = detail::support_rank(er.values, tol);
  const auto s = detail::support_rank(es.values, tol);
  if (r == 0 || s == 0) return 0.0;
  const RealVector root_r = er.values.tail(r).cwiseSqrt();
  const RealVector root_s = es.values.tail(s).cwiseSqrt();
  const ComplexMatrix a =
      root_r.asDiagonal() * (er.vectors.rightCols(r).adjoint() * es.vectors.rightCols(s)) * root_s.asDiagonal();
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const double tn = svd.singularValues().sum();
  return std::clamp(tn * tn, 0.0, 1.0);
}

/// 1 - F(rho, f1) = 1 - <f1|rho|f1>.
inline ExtendedValue texture_fidelity(const DensityMatrix& rho) {
  return ExtendedValue::finite(1.0 - overlap_f1(rho));
}

inline ExtendedValue texture_bures(const DensityMatrix& rho) {
  return ExtendedValue::finite(2.0 * (1.0 - std::sqrt(overlap_f1(rho))));
}

inline constexpr double kSupportLeakTol = 1e-10;

/// S(rho||sigma) = Tr rho ln rho - Tr rho ln sigma (natural log, 0 ln 0 = 0).
/// +inf when rho has weight outside the support of sigma.
inline ExtendedValue relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                      const Tolerances& tol = kDefaultTolerances) {
  if (rho.dim() != sigma.dim()) throw Error(ErrorKind::DimensionMismatch, "relative entropy of unequal dims");
  const auto d = rho.dim();
  const auto es = hermitian_eig(sigma.matrix(), tol);
  const auto s = detail::support_rank(es.values, tol);
  const ComplexMatrix basis = es.vectors.rightCols(s);
  const ComplexMatrix kernel = ComplexMatrix::Identity(d, d) - basis * basis.adjoint();
  if (max_abs(kernel * rho.matrix() * kernel) > kSupportLeakTol) return ExtendedValue::infinity();

  const RealVector lr = hermitian_eigenvalues(rho.matrix(), tol);
  double neg_entropy = 0.0;
  for (Eigen::Index k = 0; k < lr.size(); ++k)
    if (lr(k) > 0.0) neg_entropy += lr(k) * std::log(lr(k));

  double cross = 0.0;
  const RealVector ls = es.values.tail(s);
  for (Eigen::Index k = 0; k < s; ++k) {
    const ComplexVector w = basis.col(k);
    cross += std::log(ls(k)) * w.dot(rho.matrix() * w).real();
  }
  const double v = neg_entropy - cross;
  // Klein's inequality: any negative value is rounding
  return ExtendedValue::finite(std::max(v, 0.0));
}

inline ExtendedValue texture_relative_entropy(const DensityMatrix& rho) {
  return relative_entropy(rho, textureless_density(rho.dim()));
}

struct RobustnessResult {
  ExtendedValue value;
  /// Largest eigenvalue of (I - f1) rho (I - f1): the weight rho keeps
  /// outside span{|f1>}. Any positive value rules out rho <= (1+s) f1.
  double orthogonal_weight;
  std::string witness;
};

inline constexpr double kRobustnessZeroTol = 1e-9;

/// min s >= 0 such that (rho + s sigma)/(1 + s) = f1 for some state sigma.
/// Such a sigma is PSD only if rho <= (1+s) f1, which confines the support of
/// rho to span{|f1>}: the value is 0 at f1 and +inf everywhere else.
inline RobustnessResult texture_robustness(const DensityMatrix& rho) {
  const ComplexMatrix f1 = textureless_density(rho.dim()).matrix();
  const ComplexMatrix q = ComplexMatrix::Identity(rho.dim(), rho.dim()) - f1;
  const RealVector ev = hermitian_eigenvalues(q * rho.matrix() * q);
  const double perp = std::max(0.0, ev(ev.size() - 1));
  if (max_abs(rho.matrix() - f1) <= kRobustnessZeroTol)
    return {ExtendedValue::finite(0.0), perp, "rho = f1"};
  std::ostringstream os;
  os << "support of rho leaves span{|f1>}: largest eigenvalue of (I-f1)rho(I-f1) = " << perp;
  return {ExtendedValue::infinity(), perp, os.str()};
}

/// sum_ij |rho_ij - 1/d|.
inline ExtendedValue texture_l1(const DensityMatrix& rho) {
  const double inv_d = 1.0 / static_cast<double>(rho.dim());
  return ExtendedValue::finite((rho.matrix().array() - Complex(inv_d, 0.0)).abs().sum());
}

inline ExtendedValue evaluate(MeasureId id, const DensityMatrix& rho) {
  switch (id) {
    case MeasureId::Rugosity: return rugosity(rho);
    case MeasureId::Trace: return texture_trace(rho);
    case MeasureId::Geometric: return texture_geometric(rho);
    case MeasureId::Fidelity: return texture_fidelity(rho);
    case MeasureId::Bures: return texture_bures(rho);
    case MeasureId::RelEntropy: return texture_relative_entropy(rho);
    case MeasureId::Robustness: return texture_robustness(rho).value;
    case MeasureId::L1: return texture_l1(rho);
  }
  throw Error(ErrorKind::UnknownMeasure, "unhandled measure id");
}

struct MeasureReport {
  Eigen::Index dim = 0;
  double overlap = 0.0;
  double geometric_lower_bound = 0.0;
  std::array<std::optional<ExtendedValue>, 8> values{};
  std::string robustness_witness;

  ExtendedValue get(MeasureId id) const { return values[static_cast<std::size_t>(id)].value(); }
};

inline MeasureReport measure_all(const DensityMatrix& rho) {
  MeasureReport r;
  r.dim = rho.dim();
  r.overlap = overlap_f1(rho);
  r.geometric_lower_bound = geometric_lower_bound(rho);
  for (auto id : kAllMeasures) {
    if (id == MeasureId::Robustness) {
      auto rob = texture_robustness(rho);
      r.values[static_cast<std::size_t>(id)] = rob.value;
      r.robustness_witness = std::move(rob.witness);
    } else {
      r.values[static_cast<std::size_t>(id)] = evaluate(id, rho);
    }
  }
  return r;
}

}  // namespace texlab
