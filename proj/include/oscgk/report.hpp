#pragma once

#include <string>
#include <vector>

#include "oscgk/families.hpp"
#include "oscgk/growth.hpp"

namespace oscgk {

inline constexpr const char* kEngineVersion = "oscgk 0.1.0";

/// Everything a run depends on; echoed verbatim into each output artifact so
/// results are reproducible from the file alone.
struct ExperimentConfig {
  RepConfig rep;
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
};

std::string config_json(const ExperimentConfig& config);

/// What the measured module is: H_<k'> / B_<k'>, or a component label when
/// irreducibility is not asserted for the configuration.
std::string module_label(const RepConfig& config, int kprime);

/// CSV: header comments with config and version, then k,phi,diff1..diff5.
std::string csv_gk(const ExperimentConfig& config, const FiltrationSeries& series);

/// JSON document with config, version, series, the growth estimate and the
/// M0 descriptor (seed label, dimension, pivot monomials) when given.
std::string json_gk(const ExperimentConfig& config, const FiltrationSeries& series,
                    const GrowthEstimate& estimate, const SeedModule* m0 = nullptr);

/// CSV: k, d_k, claimed exponent, measured degree, verdict.
std::string csv_oracle(const GeneratorFamily& family, const ExponentFit& fit, int threads);

struct CatalogAudit {
  std::string label;
  bool singular = false;
};

/// Text report: harmonic basis dump plus one PASS/FAIL line per catalog entry.
std::string report_harmonic(const ExperimentConfig& config, const std::vector<Polynomial>& basis,
                            const std::vector<CatalogAudit>& audits);

/// Text report of the homomorphism verification.
std::string report_verify(const RepTable& table, const std::vector<Violation>& violations);

}  // namespace oscgk
