#include "texlab/proplab.hpp"

#include <gtest/gtest.h>

using namespace texlab;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST(Tracker, CountsFailuresAndKeepsFirstCounterexample) {
  ViolationTracker t("demo", 3);
  t.record(-1.0, 0.0, [] { return json{{"i", 0}}; });
  t.record(0.5, 0.0, [] { return json{{"i", 1}}; });
  t.record(2.0, 0.0, [] { return json{{"i", 2}}; });
  const auto r = std::move(t).finish();
  EXPECT_EQ(r.trials, 3);
  EXPECT_EQ(r.failures, 2);
  EXPECT_EQ(r.worst_violation, 2.0);
  EXPECT_EQ((*r.counterexample)["i"], 1);
  EXPECT_FALSE(r.passed());
}

TEST(Tracker, WorstPolicyKeepsLargestViolation) {
  ViolationTracker t("demo", 3, CounterexamplePolicy::Worst);
  t.record(0.5, 0.0, [] { return json{{"i", 1}}; });
  t.record(2.0, 0.0, [] { return json{{"i", 2}}; });
  t.record(1.0, 0.0, [] { return json{{"i", 3}}; });
  EXPECT_EQ((*std::move(t).finish().counterexample)["i"], 2);
}

TEST(Tracker, NanIsAFailure) {
  ViolationTracker t("demo", 0);
  t.record(std::numeric_limits<double>::quiet_NaN(), 1.0);
  EXPECT_EQ(std::move(t).finish().failures, 1);
}

TEST(ExtendedComparisons, MonotonicityConventions) {
  const auto inf = ExtendedValue::infinity();
  const auto one = ExtendedValue::finite(1.0), two = ExtendedValue::finite(2.0);
  EXPECT_EQ(increase(two, one), -1.0);
  EXPECT_EQ(increase(inf, inf), -kInf);
  EXPECT_EQ(increase(inf, one), -kInf);
  EXPECT_EQ(increase(one, inf), kInf);
}

TEST(ExtendedComparisons, ConvexityConventions) {
  const auto inf = ExtendedValue::infinity();
  const auto one = ExtendedValue::finite(1.0);
  EXPECT_EQ(convexity_gap(one, 0.5, one, one), 0.0);
  EXPECT_EQ(convexity_gap(inf, 0.5, inf, one), -kInf);
  EXPECT_EQ(convexity_gap(inf, 0.5, one, one), kInf);
}

TEST(L1Counterexample, IncreaseIsExact) {
  const auto cert = l1_certificate();
  const auto out = apply(cert.channel, cert.state);
  EXPECT_NEAR(texture_l1(out).value() - texture_l1(cert.state).value(), (std::sqrt(3.0) - 1.0) / 2.0, 1e-12);
  for (auto id : {MeasureId::Trace, MeasureId::Geometric, MeasureId::Fidelity, MeasureId::Bures, MeasureId::Rugosity})
    EXPECT_LE(increase(evaluate(id, cert.state), evaluate(id, out)), 1e-9) << measure_name(id);
}

TEST(Certificates, ReplayReproducesViolation) {
  const auto r = falsify_monotonicity(MeasureId::L1, {2, 3}, 300, 9);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_TRUE(r.passed());
  const double recorded = (*r.counterexample)["violation"].get<double>();
  EXPECT_NEAR(replay_monotonicity(*r.counterexample), recorded, 1e-12);
  EXPECT_EQ(recorded, r.worst_violation);
  // round trip through text as well
  EXPECT_NEAR(replay_monotonicity(json::parse(r.counterexample->dump())), recorded, 1e-12);
}

TEST(Axioms, SmallRunPassesForWellBehavedMeasures) {
  for (auto id : kAllMeasures) {
    const auto r = check_axioms(id, {2, 3}, 60, 5);
    EXPECT_TRUE(r.nonnegativity.passed()) << measure_name(id);
    EXPECT_TRUE(r.convexity.passed()) << measure_name(id);
    if (id == MeasureId::L1) {
      EXPECT_TRUE(r.monotonicity.expected_violation);
      EXPECT_GT(r.monotonicity.failures, 0);
      EXPECT_NEAR((*r.monotonicity.counterexample)["violation"].get<double>(), (std::sqrt(3.0) - 1.0) / 2.0, 1e-10);
    } else {
      EXPECT_EQ(r.monotonicity.failures, 0) << measure_name(id);
    }
  }
}

TEST(Axioms, ExpectedViolationNeedsCounterexample) {
  // without the anchor an l1 report still has to discover a violation to pass
  CheckReport empty;
  empty.expected_violation = true;
  EXPECT_FALSE(empty.passed());
}

TEST(Checks, LowerBoundAndConvexity) {
  EXPECT_TRUE(check_theorem3({2, 3, 4}, 300, 100, 1).passed());
  EXPECT_TRUE(check_trace_distance_convexity(200, 2).passed());
}

TEST(Checks, FourierMixtureSpectrum) {
  const auto fm = fourier_mixture(4, {0.5, 0.3, 0.2});
  const RealVector ev = hermitian_eigenvalues(textureless_density(4).matrix() - fm.state.matrix());
  EXPECT_NEAR(ev(0), -0.5, 1e-12);
  EXPECT_NEAR(ev(1), -0.3, 1e-12);
  EXPECT_NEAR(ev(2), -0.2, 1e-12);
  EXPECT_NEAR(ev(3), 1.0, 1e-12);
  EXPECT_TRUE(check_appendixD({2, 3, 8}, 20, 3).passed());
  EXPECT_THROW(check_appendixD({9}, 1, 3), Error);
}

TEST(Checks, ExamplesAndGibbs) {
  EXPECT_TRUE(check_examples().passed());
  EXPECT_TRUE(check_gibbs({2, 5}, 3, {0.1, 1.0, 10.0}, 4).passed());
  EXPECT_THROW(check_gibbs({2}, 1, {0.0}, 4), Error);
}

TEST(Suites, DeterministicForFixedSeed) {
  SuiteOptions opt;
  opt.trials = 40;
  opt.seed = 123;
  const auto a = run_suite("all", opt);
  const auto b = run_suite("all", opt);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].to_json().dump(), b[i].to_json().dump());
    EXPECT_TRUE(a[i].passed()) << a[i].to_json().dump();
  }
  opt.seed = 124;
  const auto c = run_suite("axioms", opt);
  EXPECT_NE(c[0].seed, a[0].seed);
  EXPECT_THROW(run_suite("nope", opt), Error);
}

// The l1 measure also increases under free unitary mixtures, not only under
// the Fourier replacement channel.
TEST(L1Counterexample, UnitaryMixturesAlsoIncreaseL1) {
  double best = 0.0;
  for (int i = 0; i < 200; ++i) {
    auto rng = make_rng(derive_seed(31, static_cast<std::uint64_t>(i)));
    const int d = uniform_int(rng, 3, 6);
    const DensityMatrix rho(fourier_state(d, uniform_int(rng, 2, d)));
    const auto ch = free_unitary_mixture(d, 1, rng);
    best = std::max(best, increase(texture_l1(rho), texture_l1(apply(ch, rho))));
  }
  EXPECT_GT(best, 0.5);
}
