#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "greenosher/greenosher.hpp"

namespace greenosher {

struct SweepOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  int degree = 4;
  double decay = 2.5;
  std::size_t grid = 1024;
  double tol = 1e-9;
  int jobs = 0;  // <= 0: hardware concurrency
  double power_exponent = 3.0;
};

struct TrialRecord {
  std::uint64_t seed = 0;
  bool error = false;
  std::string message;

  std::vector<double> slack;  // parallel to the functional list
  double rho1_bound = 0.0;    // rho1 - (-t2)
  double b_bound = 0.0;       // b - delta/V(L)
  double chain_low = 0.0;     // r - (-t1)
  double chain_mid = 0.0;     // R - r
  double chain_high = 0.0;    // (-t2) - R
  double minkowski_radicand = 0.0;  // V(K,L)^2 - V(K)V(L), unclamped
  double residual = 0.0;
  bool homothetic = false;
  double partition_measure_error = 0.0;
  double rho_identity_error = 0.0;  // |rho1 + rho2 - 2 V(K,L)/V(L)|

  bool pass(double tol) const;
};

struct SweepSummary {
  int trials = 0;
  int failures = 0;
  std::vector<std::string> functional_names;
  std::vector<double> min_slack;  // parallel to functional_names
  double min_rho1_bound = 0.0;
  double min_b_bound = 0.0;
  std::vector<std::uint64_t> failed_seeds;
};

struct SweepResult {
  SweepSummary summary;
  std::vector<TrialRecord> records;
};

/// Deterministic in (seed, trials, degree): trial i derives independent
/// seed streams from seed + i for body K, body L, and the initial
/// translations.  Trials run concurrently on `jobs` threads; records are
/// stored and merged in trial order, so the result does not depend on
/// scheduling.  Individual trial errors are recorded, not fatal.
SweepResult run_sweep(const SweepOptions& options);

std::string summary_to_json(const SweepSummary& summary);

}  // namespace greenosher
