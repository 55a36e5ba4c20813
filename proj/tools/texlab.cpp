// texlab command-line interface.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
// 3 state validation error, 4 I/O error.

#include "texlab/texlab.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace {

using namespace texlab;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kParse = 2, kValidation = 3, kIo = 4 };

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<MeasureId> parse_measures(const std::string& list) {
  if (list.empty() || list == "all") return {kAllMeasures.begin(), kAllMeasures.end()};
  std::vector<MeasureId> ids;
  for (const auto& name : split_list(list)) {
    try {
      ids.push_back(parse_measure(name));
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  return ids;
}

std::vector<double> parse_doubles(const std::string& list) {
  std::vector<double> out;
  for (const auto& tok : split_list(list)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed number '" + tok + "'");
    }
    if (used != tok.size() || !std::isfinite(v)) throw ParseError("malformed number '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty number list");
  return out;
}

std::vector<int> parse_ints(const std::string& list) {
  std::vector<int> out;
  for (double v : parse_doubles(list)) {
    if (v != std::floor(v) || v < 1 || v > 64) throw ParseError("dimensions must be integers in 1..64");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_text_file(out_path, text);
}

// ---------------------------------------------------------------------------

struct MeasureArgs {
  std::string in;
  std::string measures = "all";
  bool as_json = false;
  bool as_table = false;
};

int run_measure(const MeasureArgs& a) {
  const auto ids = parse_measures(a.measures);
  const DensityMatrix rho = read_state_file(a.in);
  const MeasureReport r = measure_all(rho);
  if (a.as_json) {
    json j = report_to_json(r);
    json subset = json::object();
    for (auto id : ids) subset[std::string(measure_name(id))] = extended_to_json(r.get(id));
    j["measures"] = std::move(subset);
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::ostringstream os;
  os << "dim " << r.dim << "\n";
  os << "overlap " << format_number(r.overlap) << "\n";
  for (auto id : ids) os << measure_name(id) << " " << format_number(r.get(id)) << "\n";
  os << "geometric_lower_bound " << format_number(r.geometric_lower_bound) << "\n";
  std::cout << os.str();
  return kOk;
}

int run_examples_bell() {
  const MeasureReport plus = measure_all(DensityMatrix(bell_state(BellSign::Plus)));
  const MeasureReport minus = measure_all(DensityMatrix(bell_state(BellSign::Minus)));
  const MeasureId rows[] = {MeasureId::Trace,      MeasureId::Geometric,  MeasureId::Fidelity, MeasureId::Bures,
                            MeasureId::RelEntropy, MeasureId::Robustness, MeasureId::Rugosity};
  std::ostringstream os;
  os << "measure,psi_plus,psi_minus\n";
  for (auto id : rows)
    os << measure_name(id) << "," << format_number(plus.get(id)) << "," << format_number(minus.get(id)) << "\n";
  std::cout << os.str();
  return kOk;
}

int run_examples_families(int grid, const std::string& out) {
  if (grid < 1) throw ParseError("--grid must be >= 1");
  std::ostringstream os;
  os << "alpha,T_tr_sigma,T_tr_tau,rugosity_sigma,rugosity_tau\n";
  for (int k = 0; k <= grid; ++k) {
    const double a = static_cast<double>(k) / grid;
    const auto s = sigma_alpha(a);
    const auto t = tau_alpha(a);
    os << format_number(a) << "," << format_number(texture_trace(s)) << "," << format_number(texture_trace(t))
       << "," << format_number(rugosity(s)) << "," << format_number(rugosity(t)) << "\n";
  }
  emit(os.str(), out);
  return kOk;
}

struct GibbsArgs {
  int dim = 0;
  std::string energies;
  double tmin = 0.1;
  double tmax = 10.0;
  int steps = 10;
  bool coherent = false;
  bool log_spacing = false;
  std::string out;
};

int run_gibbs(const GibbsArgs& a) {
  HamiltonianSpec h;
  if (!a.energies.empty()) {
    h.energies = parse_doubles(a.energies);
  } else {
    if (a.dim < 1) throw ParseError("give --dim or --energies");
    for (int i = 0; i < a.dim; ++i) h.energies.push_back(i);
  }
  if (!(a.tmin > 0.0) || !(a.tmax >= a.tmin)) throw ParseError("need 0 < tmin <= tmax");
  if (a.steps < 1) throw ParseError("--steps must be >= 1");

  std::ostringstream os;
  os << "T,T_F_gibbs,T_B_gibbs";
  if (a.coherent) os << ",T_F_coherent,T_B_coherent";
  os << "\n";
  for (int k = 0; k < a.steps; ++k) {
    const double frac = a.steps == 1 ? 0.0 : static_cast<double>(k) / (a.steps - 1);
    h.temperature = a.log_spacing ? a.tmin * std::pow(a.tmax / a.tmin, frac) : a.tmin + (a.tmax - a.tmin) * frac;
    const auto g = gibbs_state(h);
    os << format_number(h.temperature) << "," << format_number(texture_fidelity(g)) << ","
       << format_number(texture_bures(g));
    if (a.coherent) {
      const DensityMatrix c(coherent_gibbs_ket(h));
      os << "," << format_number(texture_fidelity(c)) << "," << format_number(texture_bures(c));
    }
    os << "\n";
  }
  emit(os.str(), a.out);
  return kOk;
}

std::string grid_csv(const ComplexMatrix& m, bool imag) {
  std::ostringstream os;
  os << "row";
  for (Eigen::Index j = 0; j < m.cols(); ++j) os << ",c" << j;
  os << "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << i;
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << "," << format_number(imag ? m(i, j).imag() : m(i, j).real());
    os << "\n";
  }
  return os.str();
}

int run_textureplot(const std::string& in, const std::string& out_re, const std::string& out_im) {
  const DensityMatrix rho = read_state_file(in);
  write_text_file(out_re, grid_csv(rho.matrix(), false));
  write_text_file(out_im, grid_csv(rho.matrix(), true));
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string dims;
  int trials = 1000;
  std::uint64_t seed = 42;
  std::string measures = "all";
};

int run_verify(const VerifyArgs& a) {
  if (a.suite != "all" &&
      std::find(kSuiteNames.begin(), kSuiteNames.end(), std::string_view(a.suite)) == kSuiteNames.end())
    throw ParseError("unknown suite '" + a.suite + "'");
  if (a.trials < 1) throw ParseError("--trials must be >= 1");
  SuiteOptions opt;
  if (!a.dims.empty()) opt.dims = parse_ints(a.dims);
  opt.trials = a.trials;
  opt.seed = a.seed;
  opt.measures = parse_measures(a.measures);
  const auto reports = run_suite(a.suite, opt);
  int failed = 0;
  for (const auto& r : reports) {
    std::cout << r.to_json().dump() << "\n";
    if (!r.passed()) ++failed;
  }
  std::cerr << reports.size() - static_cast<std::size_t>(failed) << "/" << reports.size() << " checks passed\n";
  return failed == 0 ? kOk : kVerifyFailed;
}

struct StateArgs {
  std::string kind;
  int dim = 2;
  int k = 2;
  double alpha = 0.5;
  std::string energies;
  double temperature = 1.0;
  std::string out;
};

int run_state(const StateArgs& a) {
  auto make = [&]() -> DensityMatrix {
    if (a.kind == "f1") return textureless_density(a.dim);
    if (a.kind == "fourier") return DensityMatrix(fourier_state(a.dim, a.k));
    if (a.kind == "bell+") return DensityMatrix(bell_state(BellSign::Plus));
    if (a.kind == "bell-") return DensityMatrix(bell_state(BellSign::Minus));
    if (a.kind == "maximally-mixed")
      return validate_density(ComplexMatrix::Identity(a.dim, a.dim) / static_cast<double>(a.dim));
    if (a.kind == "sigma") return sigma_alpha(a.alpha);
    if (a.kind == "tau") return tau_alpha(a.alpha);
    if (a.kind == "fstar") return DensityMatrix(l1_counterexample_target());
    if (a.kind == "gibbs" || a.kind == "coherent-gibbs") {
      HamiltonianSpec h{parse_doubles(a.energies), a.temperature};
      return a.kind == "gibbs" ? gibbs_state(h) : DensityMatrix(coherent_gibbs_ket(h));
    }
    throw ParseError("unknown state kind '" + a.kind + "'");
  };
  const auto rho = make();
  emit(density_to_json(rho).dump(2) + "\n", a.out);
  return kOk;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TEXLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed TEXLAB_SEED='" << env << "'\n";
    }
  }
  return 42;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"texlab: quantum-state texture measures and axiom checks"};
  app.require_subcommand(1);

  MeasureArgs measure_args;
  auto* measure = app.add_subcommand("measure", "Evaluate texture measures of a state file");
  measure->add_option("--in", measure_args.in, "State file (JSON: dim, re, im)")->required();
  measure->add_option("--measures", measure_args.measures, "Comma-separated measure names or 'all'");
  auto* json_flag = measure->add_flag("--json", measure_args.as_json, "JSON output");
  measure->add_flag("--table", measure_args.as_table, "Plain table output (default)")->excludes(json_flag);

  auto* examples = app.add_subcommand("examples", "Reproduce the Bell table and the sigma/tau families");
  examples->require_subcommand(1);
  auto* bell = examples->add_subcommand("bell", "Measure table for the two Bell states");
  int grid = 100;
  std::string families_out;
  auto* families = examples->add_subcommand("families", "CSV of T_tr and rugosity for sigma_alpha, tau_alpha");
  families->add_option("--grid", grid, "Number of alpha intervals on [0,1]");
  families->add_option("--out", families_out, "Output CSV path (stdout if omitted)");

  GibbsArgs gibbs_args;
  auto* gibbs = app.add_subcommand("gibbs", "Texture of Gibbs states and coherent Gibbs kets over temperature");
  auto* dim_opt = gibbs->add_option("--dim", gibbs_args.dim, "Dimension; energies default to 0..d-1");
  gibbs->add_option("--energies", gibbs_args.energies, "Comma-separated energies E1,...,Ed")->excludes(dim_opt);
  gibbs->add_option("--tmin", gibbs_args.tmin, "Lowest temperature (> 0)");
  gibbs->add_option("--tmax", gibbs_args.tmax, "Highest temperature");
  gibbs->add_option("--steps", gibbs_args.steps, "Number of temperatures");
  gibbs->add_flag("--coherent", gibbs_args.coherent, "Add coherent Gibbs ket columns");
  gibbs->add_flag("--log", gibbs_args.log_spacing, "Geometric temperature spacing");
  gibbs->add_option("--out", gibbs_args.out, "Output CSV path (stdout if omitted)");

  std::string plot_in, plot_re, plot_im;
  auto* plot = app.add_subcommand("textureplot", "Real and imaginary entry grids of a state");
  plot->add_option("--in", plot_in, "State file")->required();
  plot->add_option("--out-re", plot_re, "CSV path for the real parts")->required();
  plot->add_option("--out-im", plot_im, "CSV path for the imaginary parts")->required();

  VerifyArgs verify_args;
  verify_args.seed = default_seed();
  auto* verify = app.add_subcommand("verify", "Run the falsification suites; one JSON report per line");
  verify->add_option("--suite", verify_args.suite, "all|axioms|theorem3|appendixD|examples|gibbs|falsify");
  verify->add_option("--dims", verify_args.dims, "Comma-separated dimensions (suite defaults if omitted)");
  verify->add_option("--trials", verify_args.trials, "Base trial count");
  verify->add_option("--seed", verify_args.seed, "Seed (default: TEXLAB_SEED or 42)");
  verify->add_option("--measures", verify_args.measures, "Measures for axioms/falsify");

  StateArgs state_args;
  auto* state = app.add_subcommand("state", "Write a named state as a JSON state file");
  state->add_option("--kind", state_args.kind,
                    "f1|fourier|bell+|bell-|maximally-mixed|sigma|tau|fstar|gibbs|coherent-gibbs")
      ->required();
  state->add_option("--dim", state_args.dim, "Dimension");
  state->add_option("--k", state_args.k, "Fourier index (1-based)");
  state->add_option("--alpha", state_args.alpha, "Family parameter in [0,1]");
  state->add_option("--energies", state_args.energies, "Comma-separated energies");
  state->add_option("--temperature", state_args.temperature, "Temperature (> 0)");
  state->add_option("--out", state_args.out, "Output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*measure) return run_measure(measure_args);
    if (*bell) return run_examples_bell();
    if (*families) return run_examples_families(grid, families_out);
    if (*gibbs) return run_gibbs(gibbs_args);
    if (*plot) return run_textureplot(plot_in, plot_re, plot_im);
    if (*verify) return run_verify(verify_args);
    if (*state) return run_state(state_args);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  }
  return kParse;
}
