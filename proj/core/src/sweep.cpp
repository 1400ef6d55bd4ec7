#include "greenosher/sweep.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include <json.hpp>

namespace greenosher {

bool TrialRecord::pass(double tol) const {
  if (error) return false;
  for (double s : slack)
    if (s < -tol) return false;
  if (rho1_bound < -tol || b_bound < -tol) return false;
  if (chain_low < -1e-7 || chain_mid < -1e-7 || chain_high < -1e-7)
    return false;
  if (minkowski_radicand < -1e-12) return false;
  return true;
}

namespace {

TrialRecord run_trial(std::uint64_t trial_seed, const SweepOptions& opt,
                      const std::vector<ConvexFunctional>& functionals) {
  TrialRecord rec;
  rec.seed = trial_seed;
  try {
    SupportBody k = random_body(mix_seed(trial_seed, 1), opt.degree, opt.decay);
    SupportBody l = random_body(mix_seed(trial_seed, 2), opt.degree, opt.decay);

    std::mt19937_64 rng(mix_seed(trial_seed, 3));
    std::uniform_real_distribution<double> shift(-0.3, 0.3);
    k = translate(k, {shift(rng), shift(rng)});
    l = translate(l, {shift(rng), shift(rng)});

    DilationPlacement placed = to_dilation_position(k, l, opt.grid);
    GreenOsherReport report = verify(placed.k, placed.l, placed.certificate,
                                     functionals, opt.grid);

    for (const FunctionalCheck& f : report.functionals)
      rec.slack.push_back(f.slack);
    rec.rho1_bound = report.rho1_bound;
    rec.b_bound = report.b_bound;
    const SteinerData& sd = report.steiner;
    rec.chain_low = placed.certificate.r - (-sd.t1);
    rec.chain_mid = placed.certificate.R - placed.certificate.r;
    rec.chain_high = (-sd.t2) - placed.certificate.R;
    rec.minkowski_radicand = sd.vKL * sd.vKL - sd.vK * sd.vL;
    rec.residual = report.residual;
    rec.homothetic = report.homothetic;
    rec.partition_measure_error = report.partition.measure_error;
    rec.rho_identity_error =
        std::abs(report.partition.rho1 + report.partition.rho2 -
                 2.0 * sd.vKL / sd.vL);
  } catch (const std::exception& e) {
    rec.error = true;
    rec.message = e.what();
  }
  return rec;
}

}  // namespace

SweepResult run_sweep(const SweepOptions& options) {
  std::vector<ConvexFunctional> functionals =
      functional_registry(options.power_exponent);

  SweepResult result;
  result.records.resize(options.trials < 0 ? 0 : options.trials);

  const int trials = static_cast<int>(result.records.size());
  int jobs = options.jobs;
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  if (jobs > trials) jobs = trials > 0 ? trials : 1;

  auto work = [&](int worker) {
    for (int i = worker; i < trials; i += jobs)
      result.records[i] = run_trial(options.seed + i, options, functionals);
  };
  if (trials > 0) {
    std::vector<std::thread> pool;
    for (int w = 1; w < jobs; ++w) pool.emplace_back(work, w);
    work(0);
    for (std::thread& t : pool) t.join();
  }

  SweepSummary& summary = result.summary;
  summary.trials = trials;
  for (const ConvexFunctional& f : functionals)
    summary.functional_names.push_back(f.name);
  summary.min_slack.assign(functionals.size(),
                           std::numeric_limits<double>::infinity());
  summary.min_rho1_bound = std::numeric_limits<double>::infinity();
  summary.min_b_bound = std::numeric_limits<double>::infinity();

  bool any_ok = false;
  for (const TrialRecord& rec : result.records) {
    if (!rec.pass(options.tol)) {
      ++summary.failures;
      summary.failed_seeds.push_back(rec.seed);
    }
    if (rec.error) continue;
    any_ok = true;
    for (std::size_t f = 0; f < rec.slack.size(); ++f)
      if (rec.slack[f] < summary.min_slack[f])
        summary.min_slack[f] = rec.slack[f];
    if (rec.rho1_bound < summary.min_rho1_bound)
      summary.min_rho1_bound = rec.rho1_bound;
    if (rec.b_bound < summary.min_b_bound)
      summary.min_b_bound = rec.b_bound;
  }
  if (!any_ok) {
    summary.min_slack.assign(functionals.size(), 0.0);
    summary.min_rho1_bound = 0.0;
    summary.min_b_bound = 0.0;
  }
  return result;
}

std::string summary_to_json(const SweepSummary& summary) {
  nlohmann::json j;
  j["trials"] = summary.trials;
  j["failures"] = summary.failures;
  nlohmann::json slack = nlohmann::json::object();
  for (std::size_t f = 0; f < summary.functional_names.size(); ++f)
    slack[summary.functional_names[f]] = summary.min_slack[f];
  j["min_slack"] = slack;
  j["min_rho1_bound"] = summary.min_rho1_bound;
  j["min_b_bound"] = summary.min_b_bound;
  j["failed_seeds"] = summary.failed_seeds;
  return j.dump(2) + "\n";
}

}  // namespace greenosher
