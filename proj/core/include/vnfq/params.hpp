#pragma once

#include <algorithm>

namespace vnfq {

/// Inputs of the autoscaling queueing model.
///
/// The system consists of n0 always-on legacy servers plus k on-demand VNF
/// instances, each serving one job at rate mu. Jobs arrive Poisson(lambda)
/// into a FCFS queue of total capacity K (jobs in system, including those in
/// service). Instance i is ordered on when the job count rises to n0 + i and
/// powered off when it falls back to n0 + i - 1; an ordered instance becomes
/// active after an exponential setup time with rate alpha. A waiting job
/// abandons when its exponential deadline (rate theta) expires before service
/// begins.
struct ModelParams {
  double lambda = 0.0; ///< arrival rate
  double mu = 0.0;     ///< per-server service rate
  double alpha = 0.0;  ///< per-instance setup rate
  double theta = 0.0;  ///< per-waiting-job abandonment rate
  int n0 = 0;          ///< legacy capacity, in server units
  int k = 0;           ///< number of on-demand VNF instances
  int capacity = 0;    ///< K, max jobs in system

  /// Total server count N = n0 + k.
  int total_servers() const { return n0 + k; }

  /// Active server count at level i: n_i = n0 + i.
  int servers_at_level(int level) const { return n0 + level; }

  /// Busy servers in state (level, jobs).
  int busy_servers(int level, int jobs) const {
    return std::min(jobs, servers_at_level(level));
  }

  /// Jobs waiting (not in service) in state (level, jobs).
  int waiting_jobs(int level, int jobs) const {
    return std::max(jobs - servers_at_level(level), 0);
  }

  /// Instances in setup in state (level, jobs): min(j - n_i, N - n_i),
  /// clamped at zero for j < n_i.
  int instances_in_setup(int level, int jobs) const {
    return std::clamp(jobs - servers_at_level(level), 0, k - level);
  }
};

/// Checks all ModelParams invariants and returns the validated copy.
/// Throws ValidationError naming the offending field.
ModelParams validate_params(const ModelParams& raw);

/// Weight factors of the scalar performance score
/// P = w1*Wq + w2*S + w3*Pb + w4*Pd.
struct Weights {
  double w1 = 0.0;
  double w2 = 0.0;
  double w3 = 0.0;
  double w4 = 0.0;
};

/// Rejects negative weights and all-zero weight vectors.
Weights validate_weights(const Weights& w);

} // namespace vnfq
