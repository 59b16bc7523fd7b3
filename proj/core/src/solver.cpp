#include "vnfq/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vnfq/errors.hpp"

namespace vnfq {

namespace {

// Rounding slack for the coefficient bound checks; the bounds themselves are
// exact in real arithmetic.
constexpr double kBoundSlack = 1e-12;

void check_coefficient(const ModelParams& m, int level, int jobs, double a,
                       double b) {
  const int ni = m.servers_at_level(level);
  const int n = m.total_servers();
  const double bound =
      m.lambda / (ni * m.mu + std::min(jobs - ni, n - ni) * m.alpha +
                  (jobs - ni) * m.theta);
  if (!(a >= 0.0) || !(b >= 0.0) || b > bound * (1.0 + kBoundSlack))
    throw InternalError("coefficient bound violated at level " +
                        std::to_string(level) + ", jobs " +
                        std::to_string(jobs) + ": a=" + std::to_string(a) +
                        " b=" + std::to_string(b) +
                        " bound=" + std::to_string(bound));
}

void check_denominator(double denom, int level, int jobs) {
  if (!(denom > 0.0) || !std::isfinite(denom))
    throw InternalError("non-positive recursion denominator at level " +
                        std::to_string(level) + ", jobs " +
                        std::to_string(jobs));
}

} // namespace

LevelCoefficients level0_coefficients(const ModelParams& m) {
  const int n0 = m.n0;
  const int n = m.total_servers();
  const int cap = m.capacity;

  LevelCoefficients c;
  c.level = 0;
  c.first_jobs = 1;
  c.b.assign(cap, 0.0);

  for (int j = 1; j <= std::min(n0, cap); ++j)
    c.b[j - 1] = m.lambda / (j * m.mu);

  if (cap > n0) {
    const double d_terminal =
        n0 * m.mu + (n - n0) * m.alpha + (cap - n0) * m.theta;
    check_denominator(d_terminal, 0, cap);
    c.b[cap - 1] = m.lambda / d_terminal;
    check_coefficient(m, 0, cap, 0.0, c.b[cap - 1]);
    for (int j = cap - 1; j >= n0 + 1; --j) {
      const double down_above = n0 * m.mu + (j + 1 - n0) * m.theta;
      const double a1 = m.lambda + n0 * m.mu +
                        std::min(j - n0, n - n0) * m.alpha +
                        (j - n0) * m.theta - down_above * c.b[j];
      check_denominator(a1, 0, j);
      c.b[j - 1] = m.lambda / a1;
      check_coefficient(m, 0, j, 0.0, c.b[j - 1]);
    }
  }
  return c;
}

LevelCoefficients level_i_coefficients(const ModelParams& m, int level,
                                       std::span<const double> pi_prev) {
  const int ni = m.servers_at_level(level);
  const int n_below = m.servers_at_level(level - 1);
  const int n = m.total_servers();
  const int cap = m.capacity;
  const int prev_min = level == 1 ? 0 : n_below;

  LevelCoefficients c;
  c.level = level;
  c.first_jobs = ni + 1;
  if (cap == ni) return c; // single-state level; no recursion range

  const int count = cap - ni;
  c.a.assign(count, 0.0);
  c.b.assign(count, 0.0);
  auto prev = [&](int jobs) { return pi_prev[jobs - prev_min]; };

  const double d_terminal =
      ni * m.mu + (n - ni) * m.alpha + (cap - ni) * m.theta;
  check_denominator(d_terminal, level, cap);
  c.a[count - 1] = (n - n_below) * m.alpha * prev(cap) / d_terminal;
  c.b[count - 1] = m.lambda / d_terminal;
  check_coefficient(m, level, cap, c.a[count - 1], c.b[count - 1]);

  for (int j = cap - 1; j >= ni + 1; --j) {
    const int idx = j - c.first_jobs;
    const double down_above = ni * m.mu + (j + 1 - ni) * m.theta;
    const double denom = m.lambda + std::min(n - ni, j - ni) * m.alpha +
                         ni * m.mu + (j - ni) * m.theta -
                         down_above * c.b[idx + 1];
    check_denominator(denom, level, j);
    const double inflow =
        std::min(n - n_below, j - n_below) * m.alpha * prev(j);
    c.a[idx] = (down_above * c.a[idx + 1] + inflow) / denom;
    c.b[idx] = m.lambda / denom;
    check_coefficient(m, level, j, c.a[idx], c.b[idx]);
  }
  return c;
}

double boundary_mass(const ModelParams& m, int level,
                     std::span<const double> pi_level) {
  const int ni = m.servers_at_level(level);
  const int n = m.total_servers();
  const int min_jobs = level == 0 ? 0 : ni;

  double flow_up = 0.0;
  for (int j = ni + 1; j <= m.capacity; ++j)
    flow_up += std::min(j - ni, n - ni) * m.alpha * pi_level[j - min_jobs];
  return flow_up / (m.servers_at_level(level + 1) * m.mu);
}

StationaryDistribution solve_stationary(const ModelParams& raw) {
  const ModelParams m = validate_params(raw);
  const StateSpace space(m);

  StationaryDistribution dist;
  dist.probability.assign(space.size(), 0.0);
  auto& pi = dist.probability;

  auto level_span = [&](int level) {
    return std::span<const double>(pi).subspan(space.level_offset(level),
                                               space.level_size(level));
  };
  // Rescale everything computed so far by its maximum; ratios are exact.
  auto rescale = [&](int through_index) {
    double peak = 0.0;
    for (int s = 0; s <= through_index; ++s) peak = std::max(peak, pi[s]);
    if (peak <= 0.0)
      throw InternalError("mass vanished during level propagation");
    for (int s = 0; s <= through_index; ++s) pi[s] /= peak;
    dist.log_scale += std::log(peak);
  };

  pi[space.index(0, 0)] = 1.0;
  const LevelCoefficients b0 = level0_coefficients(m);
  for (int j = 1; j <= m.capacity; ++j)
    pi[space.index(0, j)] = b0.b_at(j) * pi[space.index(0, j - 1)];
  rescale(space.level_offset(1) - 1);

  for (int i = 1; i <= m.k; ++i) {
    const auto prev = level_span(i - 1);
    const int ni = m.servers_at_level(i);
    pi[space.index(i, ni)] = boundary_mass(m, i - 1, prev);
    if (m.capacity > ni) {
      const LevelCoefficients c = level_i_coefficients(m, i, prev);
      for (int j = ni + 1; j <= m.capacity; ++j)
        pi[space.index(i, j)] = c.a_at(j) + c.b_at(j) * pi[space.index(i, j - 1)];
    }
    rescale(space.level_offset(i + 1) - 1);
  }

  double total = 0.0;
  for (double p : pi) total += p;
  if (!(total > 0.0) || !std::isfinite(total))
    throw InternalError("non-normalizable mass vector");
  for (double& p : pi) p /= total;
  dist.log_scale += std::log(total);
  return dist;
}

} // namespace vnfq
