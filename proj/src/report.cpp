#include "oscgk/report.hpp"

#include "json.hpp"

namespace oscgk {

namespace {

nlohmann::json config_to_json(const ExperimentConfig& c) {
  return nlohmann::json{
      {"algebra", to_string(c.rep.kind)},
      {"n", c.rep.n},
      {"n1", c.rep.n1},
      {"n2", c.rep.n2},
      {"kprime", c.kprime},
      {"seed", c.seed},
      {"K", c.K},
      {"N", c.N},
      {"window", c.window},
      {"threads", c.threads},
      {"product_cap", c.product_cap},
      {"term_budget", c.term_budget},
      {"sweep_cap", c.sweep_cap},
      {"mcap", c.mcap},
  };
}

std::vector<std::vector<long long>> difference_table(const std::vector<long long>& phi, int orders) {
  std::vector<std::vector<long long>> table;
  std::vector<long long> cur = phi;
  for (int d = 1; d <= orders; ++d) {
    std::vector<long long> next;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) next.push_back(cur[i + 1] - cur[i]);
    table.push_back(next);
    cur = std::move(next);
  }
  return table;
}

}  // namespace

std::string config_json(const ExperimentConfig& config) { return config_to_json(config).dump(); }

std::string module_label(const RepConfig& config, int kprime) {
  std::string slice = "<" + std::to_string(kprime) + ">";
  if (config.kind == AlgebraKind::Symplectic) {
    bool degenerate = config.n1 == config.n2 && kprime == 0;
    return degenerate ? "component of B_" + slice : "B_" + slice;
  }
  std::string name = config.kind == AlgebraKind::OddOrthogonal ? "H'_" : "H_";
  if (config.kind == AlgebraKind::EvenOrthogonal) {
    int bound = config.n1 - config.n2 + 1 - (config.n1 == config.n2 ? 1 : 0);
    if (kprime > bound) return "component of " + name + slice;
  }
  return name + slice;
}

std::string csv_gk(const ExperimentConfig& config, const FiltrationSeries& series) {
  std::string out;
  out += "# version: ";
  out += kEngineVersion;
  out += "\n# config: " + config_json(config) + "\n";
  out += "# module: " + module_label(config.rep, config.kprime) + "\n";
  out += "# seed: " + series.seed_label + "\n";
  if (series.truncated) out += "# truncated: budget exhausted\n";
  out += "k,phi,diff1,diff2,diff3,diff4,diff5\n";
  auto diffs = difference_table(series.phi, 5);
  for (std::size_t k = 0; k < series.phi.size(); ++k) {
    out += std::to_string(k) + "," + std::to_string(series.phi[k]);
    for (int d = 1; d <= 5; ++d) {
      out += ",";
      const auto& row = diffs[static_cast<std::size_t>(d - 1)];
      if (k < row.size()) out += std::to_string(row[k]);
    }
    out += "\n";
  }
  return out;
}

std::string json_gk(const ExperimentConfig& config, const FiltrationSeries& series,
                    const GrowthEstimate& estimate, const SeedModule* m0) {
  nlohmann::json j;
  j["version"] = kEngineVersion;
  j["config"] = config_to_json(config);
  j["module"] = module_label(config.rep, config.kprime);
  j["seed"] = series.seed_label;
  if (m0) {
    j["m0"]["seed"] = m0->seed.label;
    j["m0"]["dimension"] = m0->profile.rank;
    std::vector<std::string> pivots;
    for (const auto& p : m0->profile.pivots) pivots.push_back(p.to_string());
    j["m0"]["pivot_monomials"] = pivots;
  }
  j["phi"] = series.phi;
  j["truncated"] = series.truncated;
  if (estimate.degree) {
    j["estimate"]["degree"] = *estimate.degree;
    j["estimate"]["leading_coefficient"] = to_string(*estimate.leading);
    j["estimate"]["bernstein_degree"] = *estimate.bernstein;
  } else {
    j["estimate"]["degree"] = "unstable";
  }
  j["estimate"]["window"] = estimate.window;
  return j.dump(2) + "\n";
}

std::string csv_oracle(const GeneratorFamily& family, const ExponentFit& fit, int threads) {
  std::string out;
  out += "# version: ";
  out += kEngineVersion;
  out += "\n# family: " + to_string(family.name) + " n=" + std::to_string(family.n) +
         " n1=" + std::to_string(family.n1) + " n2=" + std::to_string(family.n2) +
         " generators=" + std::to_string(family.gens.size()) +
         " threads=" + std::to_string(threads) + "\n";
  out += "k,d_k,claimed_exponent,measured_degree,verdict\n";
  std::string claimed = fit.claimed ? std::to_string(*fit.claimed) : "";
  std::string measured = fit.measured ? std::to_string(*fit.measured) : "unstable";
  for (std::size_t k = 0; k < fit.dk.size(); ++k) {
    out += std::to_string(k) + "," + std::to_string(fit.dk[k]) + "," + claimed + "," + measured +
           "," + fit.verdict + "\n";
  }
  return out;
}

std::string report_harmonic(const ExperimentConfig& config, const std::vector<Polynomial>& basis,
                            const std::vector<CatalogAudit>& audits) {
  std::string out;
  out += "# version: ";
  out += kEngineVersion;
  out += "\n# config: " + config_json(config) + "\n";
  out += "# harmonic basis, dim " + std::to_string(basis.size()) + "\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out += "basis " + std::to_string(i) + ": " + basis[i].to_string() + "\n";
  }
  for (const auto& audit : audits) {
    out += "catalog " + audit.label + ": " + (audit.singular ? "PASS" : "FAIL") + "\n";
  }
  return out;
}

std::string report_verify(const RepTable& table, const std::vector<Violation>& violations) {
  const RepConfig& cfg = table.config();
  std::string out;
  out += "# version: ";
  out += kEngineVersion;
  out += "\n# algebra: " + to_string(cfg.kind) + " n=" + std::to_string(cfg.n) +
         " n1=" + std::to_string(cfg.n1) + " n2=" + std::to_string(cfg.n2) +
         " dim=" + std::to_string(table.basis().size()) + "\n";
  if (violations.empty()) {
    out += "homomorphism check: PASS (" + std::to_string(table.basis().size()) + "^2 pairs)\n";
    return out;
  }
  out += "homomorphism check: FAIL (" + std::to_string(violations.size()) + " pairs)\n";
  for (const auto& v : violations) {
    out += "pair " + v.a.to_string(cfg) + " , " + v.b.to_string(cfg) + "\n";
    out += "  bracket of operators: " + v.lhs.to_string() + "\n";
    out += "  matrix bracket image: " + v.rhs.to_string() + "\n";
  }
  return out;
}

}  // namespace oscgk
