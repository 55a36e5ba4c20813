// proplab.hpp
// Falsification harness: axiom suites (nonnegativity, free monotonicity,
// convexity), the trace-distance lower bound on the geometric measure, strong
// convexity of the trace distance, Fourier-mixture maximality, the worked
// examples, Gibbs constants, and randomized monotonicity search.
//
// Every check is a deterministic function of its seed. Trial i draws from
// derive_seed(seed, i), so reordering or parallelizing trials cannot change a
// report.

#pragma once

#include "texlab/io.hpp"
#include "texlab/roof.hpp"

#include <functional>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace texlab {

struct CheckReport {
  std::string name;
  long long trials = 0;
  long long failures = 0;
  double worst_violation = 0.0;
  std::uint64_t seed = 0;
  std::optional<json> counterexample;
  /// Set for checks that are supposed to find a violation (the l1 measure
  /// under free operations).
  bool expected_violation = false;

  bool passed() const {
    if (expected_violation) return failures > 0 && counterexample.has_value();
    return failures == 0;
  }

  json to_json() const {
    json j{{"name", name},
           {"trials", trials},
           {"failures", failures},
           {"worst_violation", real_to_json(worst_violation)},
           {"seed", seed},
           {"passed", passed()}};
    if (expected_violation) j["expected_violation"] = true;
    if (counterexample) j["counterexample"] = *counterexample;
    return j;
  }
};

enum class CounterexamplePolicy { First, Worst };

/// Accumulates per-trial violations. A trial fails when its violation exceeds
/// its threshold; the report keeps the maximum violation seen.
class ViolationTracker {
 public:
  ViolationTracker(std::string name, std::uint64_t seed, CounterexamplePolicy policy = CounterexamplePolicy::First)
      : policy_(policy) {
    report_.name = std::move(name);
    report_.seed = seed;
  }

  void record(double violation, double threshold, const std::function<json()>& certificate = {}) {
    ++report_.trials;
    const bool failed = std::isnan(violation) || violation > threshold;
    const bool worse = !std::isnan(violation) && (!seen_ || violation > report_.worst_violation);
    if (worse) {
      report_.worst_violation = violation;
      seen_ = true;
    }
    if (failed) {
      ++report_.failures;
      if (!report_.counterexample || (policy_ == CounterexamplePolicy::Worst && worse))
        report_.counterexample = certificate ? certificate() : json{{"trial", report_.trials - 1}};
    }
  }

  CheckReport finish() && {
    if (!seen_) report_.worst_violation = 0.0;
    return std::move(report_);
  }

 private:
  CheckReport report_;
  CounterexamplePolicy policy_;
  bool seen_ = false;
};

// ---------------------------------------------------------------------------
// extended-real comparisons

/// after - before for "after <= before"; -inf when vacuous (before = +inf),
/// +inf when after is infinite and before finite.
inline double increase(const ExtendedValue& before, const ExtendedValue& after) {
  if (before.is_infinite()) return -std::numeric_limits<double>::infinity();
  if (after.is_infinite()) return std::numeric_limits<double>::infinity();
  return after.value() - before.value();
}

/// lhs - (t a + (1-t) b) for "lhs <= t a + (1-t) b" with t in (0,1).
inline double convexity_gap(const ExtendedValue& lhs, double t, const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_infinite() || b.is_infinite()) return -std::numeric_limits<double>::infinity();
  if (lhs.is_infinite()) return std::numeric_limits<double>::infinity();
  return lhs.value() - (t * a.value() + (1.0 - t) * b.value());
}

// ---------------------------------------------------------------------------
// samplers

inline Eigen::Index pick_dim(const std::vector<int>& dims, Rng& rng) {
  if (dims.empty()) throw Error(ErrorKind::InvalidSize, "empty dimension set");
  return dims[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(dims.size()) - 1))];
}

/// Random state of uniformly drawn rank 1..d.
inline DensityMatrix random_trial_state(Eigen::Index d, Rng& rng) {
  const int rank = uniform_int(rng, 1, static_cast<int>(d));
  return random_density(d, rank, rng);
}

enum class FreeFamily { UnitaryMixture = 0, FourierDephasing = 1, FourierReplace = 2 };

inline constexpr std::array<FreeFamily, 3> kFreeFamilies{FreeFamily::UnitaryMixture, FreeFamily::FourierDephasing,
                                                         FreeFamily::FourierReplace};

inline const char* family_name(FreeFamily f) {
  switch (f) {
    case FreeFamily::UnitaryMixture: return "free_unitary_mixture";
    case FreeFamily::FourierDephasing: return "fourier_dephasing";
    case FreeFamily::FourierReplace: return "fourier_replace";
  }
  return "?";
}

inline KrausChannel random_free_channel(FreeFamily family, Eigen::Index d, Rng& rng) {
  switch (family) {
    case FreeFamily::UnitaryMixture: return free_unitary_mixture(d, uniform_int(rng, 1, 4), rng);
    case FreeFamily::FourierDephasing: return fourier_dephasing(d);
    case FreeFamily::FourierReplace: return random_fourier_replace(d, rng);
  }
  throw Error(ErrorKind::InvalidSize, "unknown family");
}

/// The qubit pair |f2> -> |f*> under fourier_replace(2, f*).
struct L1Certificate {
  DensityMatrix state;
  KrausChannel channel;
};

inline L1Certificate l1_certificate() {
  const PureState target = l1_counterexample_target();
  return {DensityMatrix(fourier_state(2, 2)), fourier_replace(2, std::span<const PureState>(&target, 1))};
}

inline json monotonicity_certificate(MeasureId id, const std::string& family, long long trial,
                                     const DensityMatrix& rho, const KrausChannel& ch, const ExtendedValue& before,
                                     const ExtendedValue& after) {
  return json{{"measure", std::string(measure_name(id))},
              {"trial", trial},
              {"family", family},
              {"state", density_to_json(rho)},
              {"channel", channel_to_json(ch)},
              {"before", extended_to_json(before)},
              {"after", extended_to_json(after)},
              {"violation", real_to_json(increase(before, after))}};
}

/// Re-evaluates a monotonicity certificate from its serialized state and
/// channel alone.
inline double replay_monotonicity(const json& certificate) {
  const MeasureId id = parse_measure(certificate.at("measure").get<std::string>());
  const DensityMatrix rho = validate_density(matrix_from_json(certificate.at("state")));
  const KrausChannel ch = channel_from_json(certificate.at("channel"));
  return increase(evaluate(id, rho), evaluate(id, apply(ch, rho)));
}

// ---------------------------------------------------------------------------
// checks

struct AxiomReports {
  CheckReport nonnegativity;
  CheckReport monotonicity;
  CheckReport convexity;
};

inline bool contains(const std::vector<int>& dims, int d) {
  return std::find(dims.begin(), dims.end(), d) != dims.end();
}

/// Nonnegativity (plus zero at f1), free monotonicity and convexity of one
/// measure: `trials` random states, `trials` (state, channel) pairs per free
/// family, and `trials` random triples. The monotonicity suite opens with the
/// |f2> -> |f*> certificate whenever qubits are in `dims`.
inline AxiomReports check_axioms(MeasureId id, const std::vector<int>& dims, int trials, std::uint64_t seed,
                                 const Tolerances& tol = kDefaultTolerances) {
  const std::string base(measure_name(id));
  const double slack = tol.monotonicity_slack;

  ViolationTracker nonneg(base + "/nonnegativity", seed);
  for (int i = 0; i < trials; ++i) {
    auto rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const auto rho = random_trial_state(pick_dim(dims, rng), rng);
    const auto v = evaluate(id, rho);
    nonneg.record(v.is_infinite() ? -std::numeric_limits<double>::infinity() : -v.value(), slack,
                  [&] { return json{{"trial", i}, {"state", density_to_json(rho)}, {"value", extended_to_json(v)}}; });
  }
  for (int d = 1; d <= 8; ++d) {
    const auto f1 = textureless_density(d);
    const auto v = evaluate(id, f1);
    nonneg.record(v.value(), slack, [&] { return json{{"zero_at_f1_dim", d}, {"value", extended_to_json(v)}}; });
  }

  ViolationTracker mono(base + "/monotonicity", seed);
  if (contains(dims, 2)) {
    const auto cert = l1_certificate();
    const auto before = evaluate(id, cert.state);
    const auto after = evaluate(id, apply(cert.channel, cert.state));
    mono.record(increase(before, after), slack, [&] {
      return monotonicity_certificate(id, "fourier_replace(2, f*)", 0, cert.state, cert.channel, before, after);
    });
  }
  for (std::size_t f = 0; f < kFreeFamilies.size(); ++f) {
    const FreeFamily family = kFreeFamilies[f];
    for (int i = 0; i < trials; ++i) {
      const auto idx = static_cast<long long>(f) * trials + i;
      auto rng = make_rng(derive_seed(seed ^ 0x6D6F6E6Full, static_cast<std::uint64_t>(idx)));
      const auto d = pick_dim(dims, rng);
      const auto rho = random_trial_state(d, rng);
      const auto ch = random_free_channel(family, d, rng);
      const auto before = evaluate(id, rho);
      const auto after = evaluate(id, apply(ch, rho));
      mono.record(increase(before, after), slack, [&] {
        return monotonicity_certificate(id, family_name(family), idx, rho, ch, before, after);
      });
    }
  }

  ViolationTracker conv(base + "/convexity", seed);
  for (int i = 0; i < trials; ++i) {
    auto rng = make_rng(derive_seed(seed ^ 0x636F6E76ull, static_cast<std::uint64_t>(i)));
    const auto d = pick_dim(dims, rng);
    const auto a = random_trial_state(d, rng);
    const auto b = random_trial_state(d, rng);
    double t = uniform01(rng);
    if (t <= 0.0) t = 0.5;
    const auto m = mix(t, a, b);
    const auto va = evaluate(id, a), vb = evaluate(id, b), vm = evaluate(id, m);
    conv.record(convexity_gap(vm, t, va, vb), slack, [&] {
      return json{{"trial", i},
                  {"t", t},
                  {"rho1", density_to_json(a)},
                  {"rho2", density_to_json(b)},
                  {"values", {extended_to_json(va), extended_to_json(vb), extended_to_json(vm)}}};
    });
  }

  AxiomReports out{std::move(nonneg).finish(), std::move(mono).finish(), std::move(conv).finish()};
  if (id == MeasureId::L1) out.monotonicity.expected_violation = true;
  return out;
}

/// T_g(rho) >= T_tr(rho)^2 on random states; equality on pure states.
inline CheckReport check_theorem3(const std::vector<int>& dims, int trials, int pure_trials, std::uint64_t seed,
                                  const Tolerances& tol = kDefaultTolerances) {
  ViolationTracker t("geometric/trace_distance_bound", seed);
  for (int i = 0; i < trials; ++i) {
    auto rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const auto rho = random_trial_state(pick_dim(dims, rng), rng);
    const double lb = geometric_lower_bound(rho);
    const double g = texture_geometric(rho).value();
    t.record(lb - g, tol.monotonicity_slack,
             [&] { return json{{"trial", i}, {"state", density_to_json(rho)}, {"bound", lb}, {"geometric", g}}; });
  }
  for (int i = 0; i < pure_trials; ++i) {
    auto rng = make_rng(derive_seed(seed ^ 0x70757265ull, static_cast<std::uint64_t>(i)));
    const auto psi = random_pure(pick_dim(dims, rng), rng);
    const DensityMatrix rho(psi);
    const double lb = geometric_lower_bound(rho);
    const double g = texture_geometric_pure(psi);
    t.record(std::abs(lb - g), 1e-10, [&] {
      return json{{"pure_trial", i}, {"state", density_to_json(rho)}, {"bound", lb}, {"geometric", g}};
    });
  }
  return std::move(t).finish();
}

/// D(sum p_i rho_i, sum q_i sigma_i) <= D(p, q) + sum p_i D(rho_i, sigma_i),
/// with every other trial using q = p (joint convexity).
inline CheckReport check_trace_distance_convexity(int trials, std::uint64_t seed,
                                                  const Tolerances& tol = kDefaultTolerances) {
  ViolationTracker t("trace_distance/strong_convexity", seed);
  for (int i = 0; i < trials; ++i) {
    auto rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int n = uniform_int(rng, 1, 3);
    const Eigen::Index d = uniform_int(rng, 2, 4);
    std::vector<DensityMatrix> rhos, sigmas;
    for (int k = 0; k < n; ++k) {
      rhos.push_back(random_trial_state(d, rng));
      sigmas.push_back(random_trial_state(d, rng));
    }
    const auto p = simplex_weights(static_cast<std::size_t>(n), rng);
    const auto q = (i % 2 == 0) ? p : simplex_weights(static_cast<std::size_t>(n), rng);
    const double lhs = trace_distance(mix(p, rhos), mix(q, sigmas));
    double rhs = 0.0;
    for (int k = 0; k < n; ++k) {
      rhs += 0.5 * std::abs(p[static_cast<std::size_t>(k)] - q[static_cast<std::size_t>(k)]);
      rhs += p[static_cast<std::size_t>(k)] * trace_distance(rhos[static_cast<std::size_t>(k)], sigmas[static_cast<std::size_t>(k)]);
    }
    t.record(lhs - rhs, tol.monotonicity_slack,
             [&] { return json{{"trial", i}, {"n", n}, {"dim", d}, {"lhs", lhs}, {"rhs", rhs}}; });
  }
  return std::move(t).finish();
}

struct FourierMixture {
  std::vector<double> weights;  // weights[j] multiplies f_{j+2}
  DensityMatrix state;
};

inline FourierMixture fourier_mixture(Eigen::Index d, const std::vector<double>& weights) {
  std::vector<DensityMatrix> fs;
  for (std::size_t j = 0; j < weights.size(); ++j)
    fs.emplace_back(fourier_state(d, static_cast<Eigen::Index>(j) + 2));
  return {weights, mix(weights, fs)};
}

/// Spectrum of f1 - sum p_j f_j and the maximal measure values on Fourier
/// mixtures.
inline CheckReport check_appendixD(const std::vector<int>& dims, int trials, std::uint64_t seed) {
  ViolationTracker t("fourier/maximality", seed);
  long long idx = 0;
  for (int d : dims) {
    if (d < 2 || d > 8) throw Error(ErrorKind::InvalidDimension, "Fourier maximality dims must lie in 2..8");
    for (int i = 0; i < trials; ++i, ++idx) {
      auto rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(idx)));
      const int n = uniform_int(rng, 2, d);
      const auto fm = fourier_mixture(d, simplex_weights(static_cast<std::size_t>(n - 1), rng));
      const ComplexMatrix diff = textureless_density(d).matrix() - fm.state.matrix();
      const RealVector got = hermitian_eigenvalues(diff);
      std::vector<double> want(static_cast<std::size_t>(d), 0.0);
      want[0] = 1.0;
      for (std::size_t j = 0; j < fm.weights.size(); ++j) want[j + 1] = -fm.weights[j];
      std::sort(want.begin(), want.end());
      double spectrum_err = 0.0;
      for (int k = 0; k < d; ++k) spectrum_err = std::max(spectrum_err, std::abs(got(k) - want[static_cast<std::size_t>(k)]));
      auto cert = [&] { return json{{"dim", d}, {"weights", fm.weights}, {"state", density_to_json(fm.state)}}; };
      t.record(spectrum_err, 1e-9, cert);

      const double vtr = texture_trace(fm.state).value();
      const double vg = texture_geometric(fm.state).value();
      const double vf = texture_fidelity(fm.state).value();
      const double vb = texture_bures(fm.state).value();
      const double fid = uhlmann_fidelity(fm.state, textureless_density(d));
      const double dev = std::max({std::abs(vtr - 1.0), std::abs(vg - 1.0), std::abs(vf - 1.0),
                                   std::abs(vb - 2.0), std::abs(fid)});
      t.record(dev, 1e-10, cert);
    }
  }
  return std::move(t).finish();
}

/// The Bell-state table and the sigma/tau families on a 101-point grid.
inline CheckReport check_examples() {
  ViolationTracker t("examples/bell_and_families", 0);
  const double inf = std::numeric_limits<double>::infinity();
  auto expect = [&](const std::string& label, const ExtendedValue& got, double want, double tol) {
    double v;
    if (std::isinf(want))
      v = got.is_infinite() ? 0.0 : inf;
    else
      v = got.is_infinite() ? inf : std::abs(got.value() - want);
    t.record(v, tol, [&] { return json{{"quantity", label}, {"got", extended_to_json(got)}, {"want", real_to_json(want)}}; });
  };

  struct Row {
    const char* name;
    BellSign sign;
    double tr, g, fid, bures, rugosity;
  };
  const Row rows[] = {
      {"psi+", BellSign::Plus, std::numbers::sqrt2 / 2.0, 0.5, 0.5, 2.0 - std::numbers::sqrt2, std::numbers::ln2},
      {"psi-", BellSign::Minus, 1.0, 1.0, 1.0, 2.0, inf},
  };
  for (const auto& row : rows) {
    const auto r = measure_all(DensityMatrix(bell_state(row.sign)));
    const std::string n = row.name;
    expect("T_tr(" + n + ")", r.get(MeasureId::Trace), row.tr, 1e-10);
    expect("T_g(" + n + ")", r.get(MeasureId::Geometric), row.g, 1e-10);
    expect("T_F(" + n + ")", r.get(MeasureId::Fidelity), row.fid, 1e-10);
    expect("T_B(" + n + ")", r.get(MeasureId::Bures), row.bures, 1e-10);
    expect("T_r(" + n + ")", r.get(MeasureId::RelEntropy), inf, 0.0);
    expect("T_R(" + n + ")", r.get(MeasureId::Robustness), inf, 0.0);
    expect("R(" + n + ")", r.get(MeasureId::Rugosity), row.rugosity, 1e-10);
  }

  for (int k = 0; k <= 100; ++k) {
    const double a = k / 100.0;
    const auto s = sigma_alpha(a);
    const auto u = tau_alpha(a);
    const auto ts = texture_trace(s), tu = texture_trace(u);
    expect("T_tr(sigma_" + format_number(a) + ")", ts, (3.0 - a) / 4.0, 1e-10);
    expect("T_tr(tau_" + format_number(a) + ")", tu, (1.0 - a + std::sqrt(a * a + 2.0 * a + 5.0)) / 4.0, 1e-10);
    expect("R(sigma_" + format_number(a) + ")", rugosity(s), -std::log((1.0 + a) / 4.0), 1e-10);
    expect("R(sigma) - R(tau) at " + format_number(a), rugosity(u), rugosity(s).value(), 1e-12);
    // strict ordering: violation is sigma - tau, must stay negative
    t.record(ts.value() - tu.value(), -std::numeric_limits<double>::min(), [&] {
      return json{{"quantity", "T_tr(tau) > T_tr(sigma)"}, {"alpha", a}, {"sigma", ts.value()}, {"tau", tu.value()}};
    });
  }
  return std::move(t).finish();
}

/// Gibbs states: T_F = (d-1)/d and T_B = 2(d - sqrt d)/d for every energy
/// draw and temperature. Coherent Gibbs kets: T_F strictly decreasing along
/// the sorted temperature grid, consecutive gaps > 1e-12.
inline CheckReport check_gibbs(const std::vector<int>& dims, int energy_draws, std::vector<double> temperatures,
                               std::uint64_t seed) {
  for (double temp : temperatures)
    if (!(temp > 0.0)) throw Error(ErrorKind::NonpositiveTemperature, "temperatures must be positive", temp);
  std::sort(temperatures.begin(), temperatures.end());
  temperatures.erase(std::unique(temperatures.begin(), temperatures.end()), temperatures.end());

  ViolationTracker t("gibbs/constants_and_coherent_kets", seed);
  long long idx = 0;
  for (int d : dims) {
    const double dd = d;
    const double want_f = (dd - 1.0) / dd;
    const double want_b = 2.0 * (dd - std::sqrt(dd)) / dd;
    for (int i = 0; i < energy_draws; ++i, ++idx) {
      auto rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(idx)));
      HamiltonianSpec h;
      for (int k = 0; k < d; ++k) h.energies.push_back(uniform01(rng));
      std::vector<double> coherent;
      for (double temp : temperatures) {
        h.temperature = temp;
        const auto g = gibbs_state(h);
        const double dev = std::max(std::abs(texture_fidelity(g).value() - want_f),
                                    std::abs(texture_bures(g).value() - want_b));
        t.record(dev, 1e-10, [&] { return json{{"dim", d}, {"energies", h.energies}, {"T", temp}}; });
        coherent.push_back(texture_fidelity(DensityMatrix(coherent_gibbs_ket(h))).value());
      }
      for (std::size_t k = 1; k < coherent.size(); ++k) {
        // T_F must drop by more than 1e-12 from each temperature to the next
        t.record(coherent[k] - coherent[k - 1] + 1e-12, 0.0, [&] {
          return json{{"dim", d}, {"energies", h.energies}, {"T_low", temperatures[k - 1]},
                      {"T_high", temperatures[k]}, {"T_F_low", coherent[k - 1]}, {"T_F_high", coherent[k]}};
        });
      }
    }
  }
  return std::move(t).finish();
}

/// Randomized search for the largest increase of a measure under free
/// channels. Starts from the |f2> -> |f*> pair when qubits are allowed; the
/// certificate is the largest violation found.
inline CheckReport falsify_monotonicity(MeasureId id, const std::vector<int>& dims, int budget, std::uint64_t seed,
                                        const Tolerances& tol = kDefaultTolerances) {
  if (budget < 1) throw Error(ErrorKind::InvalidSize, "budget must be >= 1");
  ViolationTracker t("falsify/" + std::string(measure_name(id)), seed, CounterexamplePolicy::Worst);
  if (contains(dims, 2)) {
    const auto cert = l1_certificate();
    const auto before = evaluate(id, cert.state);
    const auto after = evaluate(id, apply(cert.channel, cert.state));
    t.record(increase(before, after), tol.monotonicity_slack, [&] {
      return monotonicity_certificate(id, "fourier_replace(2, f*)", 0, cert.state, cert.channel, before, after);
    });
  }
  for (int i = 1; i <= budget; ++i) {
    auto rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const auto d = pick_dim(dims, rng);
    DensityMatrix rho = textureless_density(d);
    switch (uniform_int(rng, 0, 2)) {
      case 0: rho = random_trial_state(d, rng); break;
      case 1: rho = DensityMatrix(random_pure(d, rng)); break;
      default:
        if (d >= 2) rho = DensityMatrix(fourier_state(d, uniform_int(rng, 2, static_cast<int>(d))));
        break;
    }
    const FreeFamily family = kFreeFamilies[static_cast<std::size_t>(uniform_int(rng, 0, 2))];
    const auto ch = random_free_channel(family, d, rng);
    const auto before = evaluate(id, rho);
    const auto after = evaluate(id, apply(ch, rho));
    t.record(increase(before, after), tol.monotonicity_slack, [&] {
      return monotonicity_certificate(id, family_name(family), i, rho, ch, before, after);
    });
  }
  auto report = std::move(t).finish();
  if (id == MeasureId::L1) report.expected_violation = true;
  return report;
}

// ---------------------------------------------------------------------------
// suites

inline constexpr std::array<std::string_view, 6> kSuiteNames{"axioms", "theorem3", "appendixD",
                                                             "examples", "gibbs",    "falsify"};

struct SuiteOptions {
  std::optional<std::vector<int>> dims;  // per-suite defaults when unset
  int trials = 1000;
  std::uint64_t seed = 42;
  std::vector<MeasureId> measures{kAllMeasures.begin(), kAllMeasures.end()};
};

inline std::vector<int> dim_range(int lo, int hi) {
  std::vector<int> v;
  for (int d = lo; d <= hi; ++d) v.push_back(d);
  return v;
}

/// Runs one named suite ("all" runs every suite in order).
inline std::vector<CheckReport> run_suite(std::string_view suite, const SuiteOptions& opt) {
  std::vector<CheckReport> out;
  auto dims_or = [&](std::vector<int> fallback) { return opt.dims.value_or(std::move(fallback)); };
  if (suite == "all") {
    for (auto s : kSuiteNames) {
      auto part = run_suite(s, opt);
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
  }
  if (suite == "axioms") {
    const auto dims = dims_or(dim_range(2, 5));
    for (auto id : opt.measures) {
      auto r = check_axioms(id, dims, opt.trials, derive_seed(opt.seed, static_cast<std::uint64_t>(id)));
      out.push_back(std::move(r.nonnegativity));
      out.push_back(std::move(r.monotonicity));
      out.push_back(std::move(r.convexity));
    }
  } else if (suite == "theorem3") {
    const auto dims = dims_or(dim_range(2, 6));
    out.push_back(check_theorem3(dims, 10 * opt.trials, opt.trials, opt.seed));
    out.push_back(check_trace_distance_convexity(opt.trials, opt.seed));
  } else if (suite == "appendixD") {
    std::vector<int> dims;
    for (int d : dims_or(dim_range(2, 8)))
      if (d >= 2 && d <= 8) dims.push_back(d);
    out.push_back(check_appendixD(dims, std::max(1, opt.trials / 20), opt.seed));
  } else if (suite == "examples") {
    out.push_back(check_examples());
  } else if (suite == "gibbs") {
    out.push_back(check_gibbs(dims_or(dim_range(2, 10)), std::max(1, opt.trials / 50), {0.1, 1.0, 10.0}, opt.seed));
  } else if (suite == "falsify") {
    const auto dims = dims_or(dim_range(2, 6));
    for (auto id : opt.measures)
      out.push_back(falsify_monotonicity(id, dims, 10 * opt.trials,
                                         derive_seed(opt.seed ^ 0x66616C73ull, static_cast<std::uint64_t>(id))));
  } else {
    throw Error(ErrorKind::InvalidSize, "unknown suite '" + std::string(suite) + "'");
  }
  return out;
}

}  // namespace texlab
