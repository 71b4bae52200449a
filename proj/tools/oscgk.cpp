#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "oscgk/counting.hpp"
#include "oscgk/report.hpp"

using namespace oscgk;

namespace {

// Exit codes: 0 pass, 1 verification failure, 2 budget/instability, 3 config error.
constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitBudget = 2;
constexpr int kExitConfig = 3;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

struct CommonArgs {
  std::string algebra = "o-even";
  int n = 2;
  int n1 = 1;
  int n2 = 1;
  int kprime = -1;
  std::string seed = "auto";
  int K = 14;
  int N = 6;
  int window = 3;
  int threads = 1;
  std::size_t product_cap = 200000;
  std::size_t term_budget = 40000000;
  int sweep_cap = 64;
  int mcap = 4;
  std::string config_file;
  std::string csv_path;
  std::string json_path;
  std::string out_path;
};

/// Registers the option set shared by the representation commands and wires
/// the flags-over-file-over-default layering.
struct OptionRefs {
  std::map<std::string, CLI::Option*> opts;

  void add(const std::string& key, CLI::Option* opt) { opts[key] = opt; }

  void apply_config_file(const std::string& path, CommonArgs& args) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    auto maybe = [&](const std::string& key, auto& slot) {
      auto it = opts.find(key);
      bool flag_given = it != opts.end() && it->second->count() > 0;
      if (!flag_given && j.contains(key)) slot = j.at(key).get<std::decay_t<decltype(slot)>>();
    };
    maybe("algebra", args.algebra);
    maybe("n", args.n);
    maybe("n1", args.n1);
    maybe("n2", args.n2);
    maybe("kprime", args.kprime);
    maybe("seed", args.seed);
    maybe("K", args.K);
    maybe("N", args.N);
    maybe("window", args.window);
    maybe("threads", args.threads);
    maybe("product_cap", args.product_cap);
    maybe("term_budget", args.term_budget);
    maybe("sweep_cap", args.sweep_cap);
    maybe("mcap", args.mcap);
  }
};

RepConfig rep_config_of(const CommonArgs& args) {
  auto kind = algebra_from_string(args.algebra);
  if (!kind) throw std::invalid_argument("unknown algebra: " + args.algebra + " (o-even, o-odd, sp)");
  RepConfig cfg{*kind, args.n, args.n1, args.n2};
  cfg.validate();
  return cfg;
}

ExperimentConfig experiment_config_of(const CommonArgs& args, const RepConfig& cfg) {
  ExperimentConfig e;
  e.rep = cfg;
  e.kprime = args.kprime;
  e.seed = args.seed;
  e.K = args.K;
  e.N = args.N;
  e.window = args.window;
  e.threads = args.threads;
  e.product_cap = args.product_cap;
  e.term_budget = args.term_budget;
  e.sweep_cap = args.sweep_cap;
  e.mcap = args.mcap;
  return e;
}

SingularVector resolve_seed(const RepConfig& cfg, int kprime, const std::string& selector) {
  RingDesc R = cfg.ring();
  if (selector == "auto") return default_seed(cfg, kprime);
  if (selector == "unit") return {Polynomial::constant(R, Rational(1)), "1"};
  if (selector == "zeta") {
    if (cfg.n < 2) throw std::invalid_argument("seed zeta needs n >= 2");
    Polynomial z =
        Polynomial::variable(R, VarIndex::x(cfg.n - 1)) * Polynomial::variable(R, VarIndex::y(cfg.n)) -
        Polynomial::variable(R, VarIndex::x(cfg.n)) * Polynomial::variable(R, VarIndex::y(cfg.n - 1));
    return {std::move(z), "zeta"};
  }
  return {Polynomial::parse(R, selector), selector};
}

int cmd_verify_rep(const CommonArgs& args, bool mutate, bool dump) {
  RepConfig cfg = rep_config_of(args);
  RepTable table = build_rep(cfg);
  if (mutate) {
    std::map<BasisElement, DiffOp> ops;
    for (const auto& e : table.basis()) ops.emplace(e, table.op(e));
    BasisElement victim = table.labeled_roots().empty() ? table.basis().front()
                                                        : table.labeled_roots().front().elem;
    ops.at(victim) = -ops.at(victim);
    table = RepTable(cfg, std::move(ops), table.basis(), case_table(cfg));
  }
  auto violations = check_homomorphism(table, args.threads);
  std::string report = report_verify(table, violations);
  if (dump) report += table.dump();
  write_output(args.out_path, report);
  return violations.empty() ? kExitPass : kExitVerificationFailure;
}

int cmd_gk(const CommonArgs& args) {
  RepConfig cfg = rep_config_of(args);
  ExperimentConfig e = experiment_config_of(args, cfg);
  RepTable table = build_rep(cfg);
  SingularVector seed = resolve_seed(cfg, args.kprime, args.seed);
  int seed_weight = 0;
  if (!weight_homogeneous(cfg, seed.poly, seed_weight) || seed_weight != args.kprime)
    throw std::invalid_argument("seed is not weight-homogeneous of weight k'");
  SeedModule m0 = seed_module(table, std::move(seed), args.sweep_cap);
  GrowthBudget budget;
  budget.max_terms = args.term_budget;
  budget.threads = args.threads;
  FiltrationSeries series = filtration_series(table, m0, args.K, budget);
  GrowthEstimate estimate;
  estimate.window = args.window;
  if (static_cast<int>(series.phi.size()) >= args.window + 2)
    estimate = estimate_gk(series, args.window);
  std::string csv = csv_gk(e, series);
  std::string json = json_gk(e, series, estimate, &m0);
  if (args.csv_path.empty() && args.json_path.empty()) {
    std::cout << csv << json;
  } else {
    if (!args.csv_path.empty()) write_output(args.csv_path, csv);
    if (!args.json_path.empty()) write_output(args.json_path, json);
  }
  if (series.truncated || !estimate.degree) return kExitBudget;
  return kExitPass;
}

int cmd_harmonic(const CommonArgs& args) {
  RepConfig cfg = rep_config_of(args);
  if (cfg.kind == AlgebraKind::Symplectic) {
    std::cerr << "refused: the symplectic grading operator has no kernel condition; "
                 "B_<k'> itself is the module (use gk)\n";
    return kExitConfig;
  }
  ExperimentConfig e = experiment_config_of(args, cfg);
  RepTable table = build_rep(cfg);
  std::vector<Polynomial> basis = harmonic_basis(cfg, args.kprime, args.N);
  std::vector<CatalogAudit> audits;
  if (cfg.kind == AlgebraKind::EvenOrthogonal) {
    for (const auto& sv : singular_catalog(cfg, args.kprime, args.mcap)) {
      audits.push_back({sv.label, is_singular(table, sv.poly)});
    }
  }
  write_output(args.out_path, report_harmonic(e, basis, audits));
  for (const auto& a : audits) {
    if (!a.singular) return kExitVerificationFailure;
  }
  return kExitPass;
}

int cmd_oracle(const CommonArgs& args, const std::string& family_name, int kmax) {
  auto name = family_from_string(family_name);
  if (!name) throw std::invalid_argument("unknown family: " + family_name);
  GeneratorFamily family = build_family(*name, args.n, args.n1, args.n2);
  ExponentFit fit = fit_family_exponent(family, kmax, args.window, args.product_cap, args.threads);
  write_output(args.csv_path, csv_oracle(family, fit, args.threads));
  if (fit.verdict == "mismatch") return kExitVerificationFailure;
  if (fit.verdict == "unstable") return kExitBudget;
  return kExitPass;
}

int cmd_calibrate(const CommonArgs& args, int vars) {
  if (vars < 1 || vars > 6) throw std::invalid_argument("calibrate: vars must be in 1..6");
  RingDesc ring{vars, false};
  std::vector<DiffOp> ops;
  for (int i = 1; i <= vars; ++i)
    ops.push_back(DiffOp::mul(Polynomial::variable(ring, VarIndex::x(i))));
  GrowthBudget budget;
  budget.max_terms = args.term_budget;
  budget.threads = args.threads;
  FiltrationSeries series = filtration_series_ops(
      ring, ops, {Polynomial::constant(ring, Rational(1))}, args.K, budget);
  series.seed_label = "1";
  GrowthEstimate estimate;
  estimate.window = args.window;
  if (static_cast<int>(series.phi.size()) >= args.window + 2)
    estimate = estimate_gk(series, args.window);
  ExperimentConfig e;
  e.rep = RepConfig{AlgebraKind::EvenOrthogonal, vars, 1, 1};
  e.kprime = 0;
  e.seed = "1";
  e.K = args.K;
  e.window = args.window;
  e.threads = args.threads;
  std::string csv = csv_gk(e, series);
  bool values_ok = true;
  for (std::size_t k = 0; k < series.phi.size(); ++k) {
    values_ok &= (mpz_class(static_cast<long>(series.phi[k])) ==
                  binom(vars + static_cast<long>(k), static_cast<long>(k)));
  }
  bool degree_ok = estimate.degree && *estimate.degree == vars;
  csv += std::string("# calibration phi(k) == C(c+k,k): ") + (values_ok ? "PASS" : "FAIL") + "\n";
  csv += std::string("# calibration degree == c: ") + (degree_ok ? "PASS" : "FAIL") + "\n";
  write_output(args.csv_path, csv);
  return (values_ok && degree_ok) ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic engine for Z-graded oscillator representations and their "
               "Gelfand-Kirillov growth"};
  app.require_subcommand(1);

  CommonArgs args;
  bool mutate = false, dump = false;
  std::string family_name = "Rk";
  int kmax = 8;
  int calibrate_vars = 2;

  auto add_common = [&](CLI::App* cmd, OptionRefs& refs, bool with_rep) {
    if (with_rep) {
      refs.add("algebra", cmd->add_option("--algebra", args.algebra, "o-even | o-odd | sp"));
      refs.add("n", cmd->add_option("--n", args.n, "rank parameter n"));
      refs.add("n1", cmd->add_option("--n1", args.n1, "split parameter n1"));
      refs.add("n2", cmd->add_option("--n2", args.n2, "split parameter n2"));
    }
    refs.add("window", cmd->add_option("--window", args.window, "stabilization window"));
    refs.add("threads", cmd->add_option("--threads", args.threads, "parallelism level"));
    refs.add("product_cap",
             cmd->add_option("--product-cap", args.product_cap, "oracle product budget")
                 ->envname("OSCGK_PRODUCT_CAP"));
    refs.add("term_budget",
             cmd->add_option("--term-budget", args.term_budget, "stored-term budget")
                 ->envname("OSCGK_TERM_BUDGET"));
    cmd->add_option("--config", args.config_file, "JSON config file (flags override)");
  };

  OptionRefs verify_refs, gk_refs, harmonic_refs, oracle_refs, calibrate_refs;

  CLI::App* verify = app.add_subcommand("verify-rep", "check the representation homomorphism");
  add_common(verify, verify_refs, true);
  verify->add_flag("--self-test-mutate", mutate, "negate one table entry first (must FAIL)");
  verify->add_flag("--dump", dump, "append the full operator table");
  verify->add_option("--out", args.out_path, "report path (default stdout)");

  CLI::App* gk = app.add_subcommand("gk", "measure the GK growth of U(g2)M0");
  add_common(gk, gk_refs, true);
  gk_refs.add("kprime", gk->add_option("--kprime", args.kprime, "grading weight k'"));
  gk_refs.add("seed", gk->add_option("--seed", args.seed, "auto | unit | zeta | polynomial text"));
  gk_refs.add("K", gk->add_option("--K", args.K, "filtration horizon"));
  gk_refs.add("sweep_cap", gk->add_option("--sweep-cap", args.sweep_cap, "M0 closure sweep cap"));
  gk->add_option("--csv", args.csv_path, "series CSV path");
  gk->add_option("--json", args.json_path, "estimate JSON path");

  CLI::App* harmonic = app.add_subcommand("harmonic", "harmonic slice basis and catalog audit");
  add_common(harmonic, harmonic_refs, true);
  harmonic_refs.add("kprime", harmonic->add_option("--kprime", args.kprime, "grading weight k'"));
  harmonic_refs.add("N", harmonic->add_option("--N", args.N, "degree cap"));
  harmonic_refs.add("mcap", harmonic->add_option("--mcap", args.mcap, "catalog parameter bound"));
  harmonic->add_option("--out", args.out_path, "report path (default stdout)");

  CLI::App* oracle = app.add_subcommand("oracle", "span-dimension oracle for a generator family");
  add_common(oracle, oracle_refs, true);
  oracle->add_option("--family", family_name, "Mk Tk Sk Rk Uk Vk Wk Zk Nk")->required();
  oracle->add_option("--kmax", kmax, "largest multidegree");
  oracle->add_option("--csv", args.csv_path, "CSV path (default stdout)");

  CLI::App* calibrate = app.add_subcommand("calibrate", "polynomial-ring growth self-test");
  add_common(calibrate, calibrate_refs, false);
  calibrate->add_option("--vars", calibrate_vars, "number of variables c");
  calibrate_refs.add("K", calibrate->add_option("--K", args.K, "filtration horizon"));
  calibrate->add_option("--csv", args.csv_path, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (verify->parsed()) {
      verify_refs.apply_config_file(args.config_file, args);
      return cmd_verify_rep(args, mutate, dump);
    }
    if (gk->parsed()) {
      gk_refs.apply_config_file(args.config_file, args);
      return cmd_gk(args);
    }
    if (harmonic->parsed()) {
      harmonic_refs.apply_config_file(args.config_file, args);
      return cmd_harmonic(args);
    }
    if (oracle->parsed()) {
      oracle_refs.apply_config_file(args.config_file, args);
      return cmd_oracle(args, family_name, kmax);
    }
    if (calibrate->parsed()) {
      calibrate_refs.apply_config_file(args.config_file, args);
      return cmd_calibrate(args, calibrate_vars);
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  }
  return kExitConfig;
}
