#pragma once

#include <span>
#include <vector>

#include "vnfq/params.hpp"
#include "vnfq/state_space.hpp"

namespace vnfq {

/// Backward-recursion coefficients of one level.
///
/// Level 0 has only b: pi(0,j) = b_j * pi(0,j-1) for j = 1..K.
/// Level i >= 1 has pi(i,j) = a_j + b_j * pi(i,j-1) for j = n_i+1..K.
/// Entries are stored from `first_jobs` upward; a level whose range is empty
/// (n_i == K, possible only for i == k) has no entries.
struct LevelCoefficients {
  int level = 0;
  int first_jobs = 0;            ///< jobs value of a[0]/b[0]
  std::vector<double> a;         ///< empty for level 0
  std::vector<double> b;

  double a_at(int jobs) const { return a[jobs - first_jobs]; }
  double b_at(int jobs) const { return b[jobs - first_jobs]; }
};

/// Stationary distribution aligned to StateSpace's linear indexing.
struct StationaryDistribution {
  std::vector<double> probability;
  /// Cumulative log of the rescaling factors applied while propagating the
  /// unnormalized masses (diagnostic; log of the mass that pi(0,0)=1 grew to).
  double log_scale = 0.0;
};

/// Level-0 coefficients b(0)_j for j = 1..K:
///   b_j = lambda/(j*mu) for j <= n0, and for j > n0 the backward recursion
///   from b_K = lambda/(n0*mu + (N-n0)*alpha + (K-n0)*theta) with
///   A1_j = lambda + n0*mu + min(j-n0,N-n0)*alpha + (j-n0)*theta
///          - (n0*mu + (j+1-n0)*theta) * b_{j+1}.
/// Throws InternalError if any denominator fails the positivity the bound
/// guarantees.
LevelCoefficients level0_coefficients(const ModelParams& m);

/// Coefficients of level i in 1..k given the unnormalized masses of level
/// i-1 (indexed from that level's smallest job count). The backward
/// recursion runs from
///   a_K = (N-n_{i-1})*alpha*pi_prev(K) / d,  b_K = lambda / d,
///   d   = n_i*mu + (N-n_i)*alpha + (K-n_i)*theta
/// down to j = n_i+1 via
///   A = lambda + min(N-n_i,j-n_i)*alpha + n_i*mu + (j-n_i)*theta
///       - (n_i*mu + (j+1-n_i)*theta) * b_{j+1}
///   a_j = ((n_i*mu + (j+1-n_i)*theta)*a_{j+1}
///          + min(N-n_{i-1},j-n_{i-1})*alpha*pi_prev(j)) / A
///   b_j = lambda / A.
/// At i == k the setup terms vanish (n_k == N) and the inflow coefficient is
/// (N-n_{k-1})*alpha = alpha.
LevelCoefficients level_i_coefficients(const ModelParams& m, int level,
                                       std::span<const double> pi_prev);

/// Unnormalized mass of the first state of level i+1 from the flow balance
/// across the cut between levels <= i and > i:
///   n_{i+1}*mu*pi(i+1,n_{i+1}) = sum_{j>n_i} min(j-n_i,N-n_i)*alpha*pi(i,j).
double boundary_mass(const ModelParams& m, int level,
                     std::span<const double> pi_level);

/// Exact stationary distribution via the level recursion: O(k*K) time and
/// memory. Masses propagate unnormalized from pi(0,0)=1; after each level's
/// forward pass the whole mass array is rescaled by its maximum (the
/// cumulative factor is kept in log_scale) and the result is normalized at
/// the end.
StationaryDistribution solve_stationary(const ModelParams& m);

} // namespace vnfq
