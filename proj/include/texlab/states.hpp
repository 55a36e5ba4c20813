// states.hpp
// Validated pure states and density matrices, the named states used across
// the library (textureless state, Fourier basis, Bell states, the sigma/tau
// families, Gibbs states and coherent Gibbs kets) and seeded random states.

#pragma once

#include "texlab/matker.hpp"
#include "texlab/random.hpp"

#include <numbers>
#include <span>
#include <vector>

namespace texlab {

class PureState {
 public:
  static constexpr double kNormTol = 1e-10;

  /// Validating constructor; amplitudes must already have unit norm.
  explicit PureState(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() == 0) throw Error(ErrorKind::InvalidDimension, "pure state of dimension 0");
    for (Eigen::Index i = 0; i < amps_.size(); ++i)
      if (!std::isfinite(amps_(i).real()) || !std::isfinite(amps_(i).imag()))
        throw Error(ErrorKind::NotFinite, "pure state has NaN or Inf amplitudes");
    const double dev = std::abs(amps_.norm() - 1.0);
    if (dev > kNormTol)
      throw Error(ErrorKind::NotNormalized, "norm deviates from 1 by " + std::to_string(dev), dev);
  }

  /// Normalizes `v`; throws if it is (numerically) zero.
  static PureState normalized(const ComplexVector& v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n))
      throw Error(ErrorKind::NotNormalized, "cannot normalize a zero or non-finite vector");
    return PureState(v / n);
  }

  Eigen::Index dim() const { return amps_.size(); }
  const ComplexVector& amplitudes() const { return amps_; }
  Complex operator[](Eigen::Index i) const { return amps_(i); }

  /// <this|other>
  Complex inner(const PureState& other) const {
    if (other.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "inner product of unequal dims");
    return amps_.dot(other.amps_);
  }

  ComplexMatrix projector() const { return amps_ * amps_.adjoint(); }

 private:
  ComplexVector amps_;
};

class DensityMatrix;
DensityMatrix validate_density(const ComplexMatrix& m, const Tolerances& tol = kDefaultTolerances);

class DensityMatrix {
 public:
  explicit DensityMatrix(const PureState& psi) : m_(psi.projector()) {}

  Eigen::Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

 private:
  friend DensityMatrix validate_density(const ComplexMatrix&, const Tolerances&);
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

inline DensityMatrix validate_density(const ComplexMatrix& m, const Tolerances& tol) {
  require_hermitian(m, tol);
  if (m.rows() == 0) throw Error(ErrorKind::InvalidDimension, "density matrix of dimension 0");
  const Complex tr = m.trace();
  const double dev = std::abs(tr - Complex(1.0, 0.0));
  if (dev > tol.trace_tol) {
    std::ostringstream os;
    os << "trace " << tr.real() << " deviates from 1 by " << dev;
    throw Error(ErrorKind::TraceNotOne, os.str(), dev);
  }
  const RealVector ev = hermitian_eigenvalues(m, tol);
  if (ev(0) < -tol.psd_tol) {
    std::ostringstream os;
    os << "min eigenvalue " << ev(0) << " below -" << tol.psd_tol;
    throw Error(ErrorKind::NotPSD, os.str(), ev(0));
  }
  return DensityMatrix(m);
}

/// t * a + (1 - t) * b for t in [0, 1].
inline DensityMatrix mix(double t, const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "mixing states of unequal dims");
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::ParameterOutOfRange, "mixing weight outside [0,1]", t);
  return validate_density(t * a.matrix() + (1.0 - t) * b.matrix());
}

/// sum_i w_i rho_i with w on the probability simplex.
inline DensityMatrix mix(std::span<const double> weights, std::span<const DensityMatrix> states) {
  if (weights.size() != states.size() || states.empty())
    throw Error(ErrorKind::InvalidSize, "mixture needs one weight per state");
  ComplexMatrix m = ComplexMatrix::Zero(states[0].dim(), states[0].dim());
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dim() != states[0].dim())
      throw Error(ErrorKind::DimensionMismatch, "mixing states of unequal dims");
    m += weights[i] * states[i].matrix();
  }
  return validate_density(m);
}

// ---------------------------------------------------------------------------
// named states

inline PureState textureless_state(Eigen::Index d) {
  if (d < 1) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 1");
  return PureState(ComplexVector::Constant(d, Complex(1.0 / std::sqrt(static_cast<double>(d)), 0.0)));
}

inline DensityMatrix textureless_density(Eigen::Index d) { return DensityMatrix(textureless_state(d)); }

/// |f_k> with amplitude j (0-based) = omega^{(k-1) j} / sqrt(d); k is 1-based.
inline PureState fourier_state(Eigen::Index d, Eigen::Index k) {
  if (d < 1) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 1");
  if (k < 1 || k > d) throw Error(ErrorKind::IndexOutOfRange, "Fourier index must lie in 1..d");
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexVector v(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    // reduce the exponent mod d so the phase stays exact for large indices
    const auto e = ((k - 1) * j) % d;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(d);
    v(j) = scale * Complex(std::cos(angle), std::sin(angle));
  }
  return PureState(v);
}

enum class BellSign { Plus, Minus };

/// (|00> +- |11>)/sqrt(2) in the order |00>,|01>,|10>,|11>.
inline PureState bell_state(BellSign sign) {
  const double h = std::numbers::sqrt2 / 2.0;
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = h;
  v(3) = sign == BellSign::Plus ? h : -h;
  return PureState(v);
}

namespace detail {
inline void require_unit_interval(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw Error(ErrorKind::ParameterOutOfRange, "alpha must lie in [0,1]", alpha);
}
}  // namespace detail

inline DensityMatrix sigma_alpha(double alpha) {
  detail::require_unit_interval(alpha);
  ComplexMatrix m = ComplexMatrix::Identity(4, 4) * 0.25;
  m(0, 3) = m(3, 0) = m(1, 2) = m(2, 1) = alpha / 4.0;
  return validate_density(m);
}

inline DensityMatrix tau_alpha(double alpha) {
  detail::require_unit_interval(alpha);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = 0.5;
  m(0, 3) = m(3, 0) = alpha / 2.0;
  return validate_density(m);
}

/// Energies E_i and temperature T in units with k_B = 1.
struct HamiltonianSpec {
  std::vector<double> energies;
  double temperature = 1.0;
};

namespace detail {

inline void require_valid(const HamiltonianSpec& h) {
  if (!(h.temperature > 0.0) || !std::isfinite(h.temperature))
    throw Error(ErrorKind::NonpositiveTemperature, "temperature must be positive", h.temperature);
  if (h.energies.empty()) throw Error(ErrorKind::InvalidDimension, "no energy levels");
  for (double e : h.energies)
    if (!std::isfinite(e)) throw Error(ErrorKind::NotFinite, "energies must be finite");
}

// exp(-(E_i - E_min) * scale / T); identical shift in numerator and partition sum.
inline std::vector<double> shifted_boltzmann(const HamiltonianSpec& h, double scale) {
  const double emin = *std::min_element(h.energies.begin(), h.energies.end());
  std::vector<double> w(h.energies.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = std::exp(-(h.energies[i] - emin) * scale / h.temperature);
  return w;
}

}  // namespace detail

inline DensityMatrix gibbs_state(const HamiltonianSpec& h) {
  detail::require_valid(h);
  const auto w = detail::shifted_boltzmann(h, 1.0);
  double z = 0.0;
  for (double x : w) z += x;
  const auto d = static_cast<Eigen::Index>(w.size());
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(i, i) = w[static_cast<std::size_t>(i)] / z;
  return validate_density(m);
}

inline PureState coherent_gibbs_ket(const HamiltonianSpec& h) {
  detail::require_valid(h);
  const auto w = detail::shifted_boltzmann(h, 0.5);
  ComplexVector v(static_cast<Eigen::Index>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i) v(static_cast<Eigen::Index>(i)) = w[i];
  return PureState::normalized(v);
}

// ---------------------------------------------------------------------------
// random states

inline PureState random_pure(Eigen::Index d, Rng& rng) {
  if (d < 1) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 1");
  return PureState::normalized(ginibre(d, 1, rng).col(0));
}

inline PureState random_pure(Eigen::Index d, std::uint64_t seed) {
  auto rng = make_rng(seed);
  return random_pure(d, rng);
}

inline DensityMatrix random_density(Eigen::Index d, Eigen::Index rank, Rng& rng) {
  if (d < 1) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 1");
  if (rank < 1 || rank > d) throw Error(ErrorKind::InvalidRank, "rank must lie in 1..d");
  const ComplexMatrix g = ginibre(d, rank, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return validate_density(0.5 * (m + m.adjoint()));
}

inline DensityMatrix random_density(Eigen::Index d, Eigen::Index rank, std::uint64_t seed) {
  auto rng = make_rng(seed);
  return random_density(d, rank, rng);
}

}  // namespace texlab
