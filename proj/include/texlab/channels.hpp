// channels.hpp
// Kraus-form channels, CPTP/freeness diagnostics, and the generator families
// of free operations (channels that fix the textureless state).

#pragma once

#include "texlab/states.hpp"

#include <vector>

namespace texlab {

enum class Freeness { Certified, Uncertified };

struct Residual {
  bool ok = false;
  double residual = 0.0;
};

inline constexpr double kChannelTol = 1e-9;

class KrausChannel {
 public:
  /// Unchecked channel; use is_cptp / is_free to diagnose it.
  explicit KrausChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) throw Error(ErrorKind::InvalidSize, "channel needs at least one Kraus operator");
    const auto d = kraus_.front().rows();
    if (d < 1) throw Error(ErrorKind::InvalidDimension, "Kraus operators of dimension 0");
    for (const auto& k : kraus_) {
      if (k.rows() != d || k.cols() != d)
        throw Error(ErrorKind::DimensionMismatch, "Kraus operators must all be d x d");
      if (!all_finite(k)) throw Error(ErrorKind::NotFinite, "Kraus operator has NaN or Inf entries");
    }
  }

  /// Checks completeness and Lambda(f1) = f1; throws otherwise.
  static KrausChannel certified(std::vector<ComplexMatrix> kraus);

  Eigen::Index dim() const { return kraus_.front().rows(); }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  Freeness freeness() const { return freeness_; }

  /// sum_n K_n rho K_n^dagger without validation.
  ComplexMatrix apply_raw(const ComplexMatrix& rho) const {
    ComplexMatrix out = ComplexMatrix::Zero(dim(), dim());
    for (const auto& k : kraus_) out.noalias() += k * rho * k.adjoint();
    return out;
  }

 private:
  std::vector<ComplexMatrix> kraus_;
  Freeness freeness_ = Freeness::Uncertified;
};

inline Residual is_cptp(const KrausChannel& ch) {
  ComplexMatrix s = ComplexMatrix::Zero(ch.dim(), ch.dim());
  for (const auto& k : ch.kraus()) s.noalias() += k.adjoint() * k;
  const double r = max_abs(s - ComplexMatrix::Identity(ch.dim(), ch.dim()));
  return {r <= kChannelTol, r};
}

inline Residual is_free(const KrausChannel& ch) {
  const ComplexMatrix f1 = textureless_state(ch.dim()).projector();
  const double r = max_abs(ch.apply_raw(f1) - f1);
  return {r <= kChannelTol, r};
}

inline KrausChannel KrausChannel::certified(std::vector<ComplexMatrix> kraus) {
  KrausChannel ch(std::move(kraus));
  const auto c = is_cptp(ch);
  if (!c.ok) throw Error(ErrorKind::IncompleteChannel, "sum K^dagger K != I", c.residual);
  const auto f = is_free(ch);
  if (!f.ok) throw Error(ErrorKind::NotFree, "channel does not fix the textureless state", f.residual);
  ch.freeness_ = Freeness::Certified;
  return ch;
}

inline DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho,
                           const Tolerances& tol = kDefaultTolerances) {
  if (ch.dim() != rho.dim()) throw Error(ErrorKind::DimensionMismatch, "channel and state dims differ");
  if (ch.freeness() != Freeness::Certified) {
    const auto c = is_cptp(ch);
    if (!c.ok) throw Error(ErrorKind::IncompleteChannel, "sum K^dagger K != I", c.residual);
  }
  const ComplexMatrix out = ch.apply_raw(rho.matrix());
  return validate_density(0.5 * (out + out.adjoint()), tol);
}

// ---------------------------------------------------------------------------
// free families

inline KrausChannel identity_channel(Eigen::Index d) {
  return KrausChannel::certified({ComplexMatrix::Identity(d, d)});
}

/// Householder reflection exchanging e_1 and |f1>; real symmetric, self-inverse.
inline ComplexMatrix textureless_reflection(Eigen::Index d) {
  ComplexVector v = -textureless_state(d).amplitudes();
  v(0) += 1.0;
  const double nn = v.squaredNorm();
  ComplexMatrix h = ComplexMatrix::Identity(d, d);
  if (nn > 0.0) h -= (2.0 / nn) * (v * v.adjoint());
  return h;
}

/// e^{i theta}|f1><f1| (+) W, where W acts on the orthocomplement of |f1>.
/// `block` must be (d-1) x (d-1) unitary.
inline ComplexMatrix embed_free_unitary(Eigen::Index d, double theta, const ComplexMatrix& block) {
  if (block.rows() != d - 1 || block.cols() != d - 1)
    throw Error(ErrorKind::DimensionMismatch, "unitary block must be (d-1) x (d-1)");
  ComplexMatrix u = ComplexMatrix::Zero(d, d);
  u(0, 0) = std::polar(1.0, theta);
  if (d > 1) u.bottomRightCorner(d - 1, d - 1) = block;
  const ComplexMatrix h = textureless_reflection(d);
  return h * u * h;
}

/// Kraus set {sqrt(p_n) U_n} with each U_n = e^{i theta_n} f1 (+) W_n, W_n Haar.
inline KrausChannel free_unitary_mixture(Eigen::Index d, int n_unitaries, Rng& rng) {
  if (d < 1) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 1");
  if (n_unitaries < 1) throw Error(ErrorKind::InvalidSize, "need at least one unitary");
  const auto p = simplex_weights(static_cast<std::size_t>(n_unitaries), rng);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(p.size());
  for (double pn : p) {
    const double theta = 2.0 * std::numbers::pi * uniform01(rng);
    const ComplexMatrix w = d > 1 ? haar_unitary(d - 1, rng) : ComplexMatrix(0, 0);
    kraus.push_back(std::sqrt(pn) * embed_free_unitary(d, theta, w));
  }
  return KrausChannel::certified(std::move(kraus));
}

inline KrausChannel free_unitary_mixture(Eigen::Index d, int n_unitaries, std::uint64_t seed) {
  auto rng = make_rng(seed);
  return free_unitary_mixture(d, n_unitaries, rng);
}

/// Projective dephasing in the Fourier basis: {|f_k><f_k|}.
inline KrausChannel fourier_dephasing(Eigen::Index d) {
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index k = 1; k <= d; ++k) kraus.push_back(fourier_state(d, k).projector());
  return KrausChannel::certified(std::move(kraus));
}

/// K_1 = |f1><f1|, K_k = |phi_k><f_k| for k = 2..d; targets[k-2] = phi_k.
inline KrausChannel fourier_replace(Eigen::Index d, std::span<const PureState> targets) {
  if (d < 1) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 1");
  if (static_cast<Eigen::Index>(targets.size()) != d - 1)
    throw Error(ErrorKind::InvalidSize, "fourier_replace needs d-1 targets");
  std::vector<ComplexMatrix> kraus;
  kraus.push_back(textureless_state(d).projector());
  for (Eigen::Index k = 2; k <= d; ++k) {
    const auto& phi = targets[static_cast<std::size_t>(k - 2)];
    if (phi.dim() != d) throw Error(ErrorKind::DimensionMismatch, "target dimension differs from d");
    kraus.push_back(phi.amplitudes() * fourier_state(d, k).amplitudes().adjoint());
  }
  return KrausChannel::certified(std::move(kraus));
}

inline KrausChannel random_fourier_replace(Eigen::Index d, Rng& rng) {
  std::vector<PureState> targets;
  for (Eigen::Index k = 2; k <= d; ++k) targets.push_back(random_pure(d, rng));
  return fourier_replace(d, targets);
}

/// |f*> = (sqrt(3)/2)|0> - (1/2)|1>, the qubit state reachable from |f2>
/// by a free map while increasing the l1 measure.
inline PureState l1_counterexample_target() {
  ComplexVector v(2);
  v << std::sqrt(3.0) / 2.0, -0.5;
  return PureState(v);
}

/// Max over n of the component of K_n|f1> orthogonal to |f1> (max-entry norm).
/// Zero when every Kraus operator maps |f1> to a multiple of itself.
inline double textureless_leakage(const KrausChannel& ch) {
  const ComplexVector f1 = textureless_state(ch.dim()).amplitudes();
  double worst = 0.0;
  for (const auto& k : ch.kraus()) {
    const ComplexVector kf = k * f1;
    const ComplexVector perp = kf - f1 * f1.dot(kf);
    worst = std::max(worst, perp.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace texlab
