#include "texlab/states.hpp"

#include <gtest/gtest.h>

using namespace texlab;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no texlab::Error thrown";
  return ErrorKind::NotFinite;
}

}  // namespace

TEST(PureState, RejectsUnnormalizedAndNonFinite) {
  ComplexVector v = ComplexVector::Constant(2, 1.0);
  EXPECT_EQ(kind_of([&] { PureState p(v); }), ErrorKind::NotNormalized);
  v(0) = std::numeric_limits<double>::infinity();
  EXPECT_EQ(kind_of([&] { PureState p(v); }), ErrorKind::NotFinite);
  EXPECT_NEAR(PureState::normalized(ComplexVector::Constant(3, 2.0)).amplitudes().norm(), 1.0, 1e-15);
}

TEST(DensityMatrix, ValidationErrorsCarryKind) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2) * 0.5;
  EXPECT_NO_THROW(validate_density(m));
  ComplexMatrix bad_trace = m * 1.1;
  EXPECT_EQ(kind_of([&] { validate_density(bad_trace); }), ErrorKind::TraceNotOne);
  ComplexMatrix not_psd = ComplexMatrix::Zero(2, 2);
  not_psd(0, 0) = 1.5;
  not_psd(1, 1) = -0.5;
  EXPECT_EQ(kind_of([&] { validate_density(not_psd); }), ErrorKind::NotPSD);
  ComplexMatrix not_herm = m;
  not_herm(0, 1) = Complex(0.0, 0.1);
  EXPECT_EQ(kind_of([&] { validate_density(not_herm); }), ErrorKind::NotHermitian);
}

TEST(DensityMatrix, AcceptsTinyNegativeEigenvalues) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0 + 5e-11;
  m(1, 1) = -5e-11;
  EXPECT_NO_THROW(validate_density(m));
}

TEST(NamedStates, TexturelessStateIsFlat) {
  for (int d = 1; d <= 8; ++d) {
    const auto f1 = textureless_density(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) EXPECT_NEAR(std::abs(f1(i, j) - 1.0 / d), 0.0, 1e-15);
  }
  EXPECT_EQ(kind_of([] { textureless_state(0); }), ErrorKind::InvalidDimension);
}

TEST(NamedStates, FourierBasisIsOrthonormal) {
  for (int d = 1; d <= 9; ++d)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k) {
        const double want = j == k ? 1.0 : 0.0;
        EXPECT_NEAR(std::abs(fourier_state(d, j).inner(fourier_state(d, k))), want, 1e-14);
      }
  EXPECT_EQ(kind_of([] { fourier_state(3, 0); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([] { fourier_state(3, 4); }), ErrorKind::IndexOutOfRange);
}

TEST(NamedStates, FourierOneIsTextureless) {
  for (int d = 1; d <= 8; ++d)
    EXPECT_LT((fourier_state(d, 1).amplitudes() - textureless_state(d).amplitudes()).norm(), 1e-15);
}

TEST(NamedStates, SecondFourierQubitIsMinusState) {
  const auto f2 = fourier_state(2, 2);
  EXPECT_NEAR(f2[0].real(), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(f2[1].real(), -std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(std::abs(f2[1].imag()), 0.0, 1e-15);
}

TEST(NamedStates, BellStates) {
  const auto plus = DensityMatrix(bell_state(BellSign::Plus));
  const auto minus = DensityMatrix(bell_state(BellSign::Minus));
  EXPECT_NEAR(plus(0, 3).real(), 0.5, 1e-15);
  EXPECT_NEAR(minus(0, 3).real(), -0.5, 1e-15);
  EXPECT_NEAR(std::abs(bell_state(BellSign::Plus).inner(bell_state(BellSign::Minus))), 0.0, 1e-15);
}

TEST(NamedStates, SigmaTauFamilies) {
  for (double a : {0.0, 0.3, 1.0}) {
    const auto s = sigma_alpha(a);
    const auto t = tau_alpha(a);
    EXPECT_NEAR(s(0, 3).real(), a / 4, 1e-15);
    EXPECT_NEAR(s(1, 2).real(), a / 4, 1e-15);
    EXPECT_NEAR(t(0, 3).real(), a / 2, 1e-15);
    EXPECT_NEAR(t(1, 1).real(), 0.0, 1e-15);
  }
  EXPECT_EQ(kind_of([] { sigma_alpha(1.5); }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind_of([] { tau_alpha(-0.1); }), ErrorKind::ParameterOutOfRange);
}

TEST(NamedStates, MixtureValidatesWeights) {
  const auto a = textureless_density(2);
  const auto b = DensityMatrix(fourier_state(2, 2));
  const auto m = mix(0.5, a, b);
  EXPECT_NEAR(m(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(m(0, 1)), 0.0, 1e-15);
  EXPECT_EQ(kind_of([&] { mix(1.2, a, b); }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(kind_of([&] { mix(0.5, a, textureless_density(3)); }), ErrorKind::DimensionMismatch);
}

// Oracle: exp(-E/T)/Z computed directly without the energy shift.
TEST(Gibbs, MatchesDirectBoltzmannWeights) {
  const HamiltonianSpec h{{0.0, 0.3, 1.1}, 0.7};
  const auto g = gibbs_state(h);
  double z = 0.0;
  for (double e : h.energies) z += std::exp(-e / h.temperature);
  for (int i = 0; i < 3; ++i)
    EXPECT_NEAR(g(i, i).real(), std::exp(-h.energies[static_cast<std::size_t>(i)] / h.temperature) / z, 1e-14);
  const auto ket = coherent_gibbs_ket(h);
  for (int i = 0; i < 3; ++i)
    EXPECT_NEAR(ket[i].real(), std::sqrt(std::exp(-h.energies[static_cast<std::size_t>(i)] / h.temperature) / z),
                1e-14);
}

TEST(Gibbs, ExtremeTemperaturesStayFinite) {
  const HamiltonianSpec cold{{0.0, 1.0, 2.0}, 1e-3};
  const auto g = gibbs_state(cold);
  EXPECT_NEAR(g(0, 0).real(), 1.0, 1e-12);
  const HamiltonianSpec shifted{{1000.0, 1001.0}, 0.01};
  EXPECT_NO_THROW(gibbs_state(shifted));
  EXPECT_NO_THROW(coherent_gibbs_ket(shifted));
}

TEST(Gibbs, RejectsBadInput) {
  EXPECT_EQ(kind_of([] { gibbs_state({{0.0, 1.0}, 0.0}); }), ErrorKind::NonpositiveTemperature);
  EXPECT_EQ(kind_of([] { gibbs_state({{0.0, 1.0}, -1.0}); }), ErrorKind::NonpositiveTemperature);
  EXPECT_EQ(kind_of([] { gibbs_state({{}, 1.0}); }), ErrorKind::InvalidDimension);
}

TEST(RandomStates, DensityHasRequestedRank) {
  for (int d = 1; d <= 8; ++d)
    for (int r = 1; r <= d; ++r) {
      const auto rho = random_density(d, r, static_cast<std::uint64_t>(100 * d + r));
      EXPECT_EQ(numerical_rank(rho.matrix()), r);
      EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
    }
  EXPECT_EQ(kind_of([] { random_density(3, 4, 1ull); }), ErrorKind::InvalidRank);
  EXPECT_EQ(kind_of([] { random_density(3, 0, 1ull); }), ErrorKind::InvalidRank);
}

// Rank-2 qubit-pair states: every draw has exactly two positive eigenvalues.
TEST(RandomStates, RankTwoSweep) {
  auto rng = make_rng(99);
  for (int i = 0; i < 200; ++i) {
    const auto rho = random_density(4, 2, rng);
    const RealVector ev = hermitian_eigenvalues(rho.matrix());
    EXPECT_LT(std::abs(ev(0)), 1e-12);
    EXPECT_LT(std::abs(ev(1)), 1e-12);
    EXPECT_GT(ev(2), 1e-10);
  }
}

TEST(RandomStates, SeedDeterminesDraw) {
  EXPECT_EQ(random_density(5, 3, 77ull).matrix(), random_density(5, 3, 77ull).matrix());
  EXPECT_NE(random_density(5, 3, 77ull).matrix(), random_density(5, 3, 78ull).matrix());
  EXPECT_EQ(random_pure(4, 5ull).amplitudes(), random_pure(4, 5ull).amplitudes());
}
