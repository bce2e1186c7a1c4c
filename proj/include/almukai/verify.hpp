#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "almukai/corr.hpp"
#include "almukai/fmcalc.hpp"
#include "almukai/halfplane.hpp"

namespace almukai {

enum class OutputFormat { json, csv, text };

struct VerifyConfig {
  Integer d_min = 1;
  Integer d_max = 50;
  std::size_t samples_per_coset = 50;
  std::uint64_t seed = 20121;
  double tolerance = 1e-9;
  OutputFormat format = OutputFormat::json;
  unsigned threads = 0;  // 0: hardware concurrency

  // Throws InvalidArgument.
  void validate() const;
};

struct CheckFailure {
  std::string input;
  std::string detail;
};

struct CheckResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<CheckFailure> failures;
  std::optional<double> max_defect;  // floating checks only
};

struct LevelReport {
  Integer d;
  CorrespondenceReport dolgachev;
  std::vector<CheckResult> checks;

  std::size_t failure_count() const;
};

// Generator seeded from (seed, d) so that per-level work is independent of
// scheduling.
Rng level_rng(std::uint64_t seed, const Integer& d, std::uint64_t stream = 0);

HalfPlanePoint random_point(Rng& rng);

// A random morphism of the partner groupoid of level d, built by composing
// `steps` generators (universal-family transforms, their inverses,
// translations and Fricke autoequivalences) along matching endpoints.
InducedTransform random_composite(const Integer& d, Rng& rng, int steps);

LevelReport verify_level(const Integer& d, const VerifyConfig& config);

// Reports ordered by d.
std::vector<LevelReport> run_verify(const VerifyConfig& config);

}  // namespace almukai
