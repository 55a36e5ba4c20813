// roof.hpp
// Pure-state ensemble decompositions and a sampling convex-roof evaluator.
//
// Every size-m decomposition of rho arises from an m x r isometry V applied to
// the spectral ensemble: |psi~_i> = sum_j V_ij sqrt(lambda_j) |e_j>. Sampling V
// therefore samples the feasible set of the roof minimization.

#pragma once

#include "texlab/measures.hpp"

#include <concepts>
#include <vector>

namespace texlab {

struct EnsembleDecomposition {
  std::vector<double> weights;
  std::vector<PureState> states;

  std::size_t size() const { return weights.size(); }

  ComplexMatrix reconstruct() const {
    const auto d = states.front().dim();
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < size(); ++i) m += weights[i] * states[i].projector();
    return m;
  }
};

namespace detail {

struct Spectral {
  RealVector values;       // descending, support only
  ComplexMatrix vectors;   // matching columns
};

inline Spectral support_spectrum(const DensityMatrix& rho, const Tolerances& tol) {
  const auto eig = hermitian_eig(rho.matrix(), tol);
  const auto r = support_rank(eig.values, tol);
  return {eig.values.tail(r).reverse(), eig.vectors.rightCols(r).rowwise().reverse()};
}

}  // namespace detail

inline EnsembleDecomposition spectral_ensemble(const DensityMatrix& rho,
                                               const Tolerances& tol = kDefaultTolerances) {
  const auto sp = detail::support_spectrum(rho, tol);
  const double total = sp.values.sum();
  EnsembleDecomposition e;
  for (Eigen::Index k = 0; k < sp.values.size(); ++k) {
    e.weights.push_back(sp.values(k) / total);
    e.states.push_back(PureState::normalized(sp.vectors.col(k)));
  }
  return e;
}

inline constexpr double kEnsembleDropTol = 1e-12;

/// Ensemble steered by an explicit m x r isometry (r = support rank of rho).
inline EnsembleDecomposition steer_ensemble(const DensityMatrix& rho, const ComplexMatrix& isometry,
                                            const Tolerances& tol = kDefaultTolerances) {
  const auto sp = detail::support_spectrum(rho, tol);
  const auto r = sp.values.size();
  if (isometry.cols() != r || isometry.rows() < r)
    throw Error(ErrorKind::InvalidSize, "isometry must be m x rank with m >= rank");
  const ComplexMatrix scaled = sp.vectors * sp.values.cwiseSqrt().asDiagonal();  // d x r
  EnsembleDecomposition e;
  double total = 0.0;
  for (Eigen::Index i = 0; i < isometry.rows(); ++i) {
    const ComplexVector v = scaled * isometry.row(i).transpose();
    const double p = v.squaredNorm();
    if (p < kEnsembleDropTol) continue;
    e.weights.push_back(p);
    e.states.push_back(PureState::normalized(v));
    total += p;
  }
  for (auto& w : e.weights) w /= total;
  return e;
}

inline EnsembleDecomposition random_ensemble(const DensityMatrix& rho, Eigen::Index m, Rng& rng,
                                             const Tolerances& tol = kDefaultTolerances) {
  const auto r = numerical_rank(rho.matrix(), tol);
  if (m < r) throw Error(ErrorKind::InvalidSize, "ensemble size below rank");
  return steer_ensemble(rho, random_isometry(m, r, rng), tol);
}

inline EnsembleDecomposition random_ensemble(const DensityMatrix& rho, Eigen::Index m, std::uint64_t seed,
                                             const Tolerances& tol = kDefaultTolerances) {
  auto rng = make_rng(seed);
  return random_ensemble(rho, m, rng, tol);
}

template <typename F>
concept PureFunctional = std::invocable<F, const PureState&> &&
                         std::convertible_to<std::invoke_result_t<F, const PureState&>, double>;

template <PureFunctional F>
double ensemble_average(const EnsembleDecomposition& e, F&& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) acc += e.weights[i] * static_cast<double>(f(e.states[i]));
  return acc;
}

struct RoofResult {
  double value = 0.0;              // minimum found
  double max_value = 0.0;          // largest sampled average, for spread diagnostics
  double spectral_value = 0.0;     // average over the spectral ensemble
  std::size_t argmin_index = 0;    // 0 = spectral ensemble, i >= 1 = random sample i
  EnsembleDecomposition argmin;
  std::size_t samples = 0;
};

/// Minimum of the ensemble average over the spectral ensemble plus `budget`
/// random ensembles with sizes drawn from rank..2*rank. Ties go to the lowest
/// sample index.
template <PureFunctional F>
RoofResult roof_minimize(const DensityMatrix& rho, F&& f, int budget, std::uint64_t seed,
                         const Tolerances& tol = kDefaultTolerances) {
  if (budget < 1) throw Error(ErrorKind::InvalidSize, "budget must be >= 1");
  RoofResult res;
  res.argmin = spectral_ensemble(rho, tol);
  res.value = res.max_value = res.spectral_value = ensemble_average(res.argmin, f);
  res.samples = 1;
  const auto r = static_cast<int>(res.argmin.size());
  for (int i = 1; i <= budget; ++i) {
    auto rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int m = uniform_int(rng, r, 2 * r);
    auto e = random_ensemble(rho, m, rng, tol);
    const double v = ensemble_average(e, f);
    ++res.samples;
    res.max_value = std::max(res.max_value, v);
    if (v < res.value) {
      res.value = v;
      res.argmin = std::move(e);
      res.argmin_index = static_cast<std::size_t>(i);
    }
  }
  return res;
}

}  // namespace texlab
