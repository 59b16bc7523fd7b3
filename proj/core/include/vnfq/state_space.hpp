#pragma once

#include <cstdint>
#include <vector>

#include "vnfq/params.hpp"

namespace vnfq {

/// A state of the chain: `level` active VNF instances, `jobs` jobs in system.
struct State {
  int level;
  int jobs;
  friend bool operator==(const State&, const State&) = default;
};

/// Level-major enumeration of the state space
///   {(0,j): 0 <= j <= K}  union  {(i,j): 1 <= i <= k, n_i <= j <= K},
/// mapping states to contiguous linear indices (level ascending, jobs
/// ascending within a level). The ordering is deterministic so serialized
/// distributions are byte-stable.
class StateSpace {
public:
  explicit StateSpace(const ModelParams& m);

  int size() const { return size_; }
  int levels() const { return k_ + 1; }
  int capacity() const { return capacity_; }

  /// Smallest job count of a level (0 for level 0, n_i otherwise).
  int level_min_jobs(int level) const { return level == 0 ? 0 : n0_ + level; }

  /// Number of states in a level.
  int level_size(int level) const {
    return capacity_ - level_min_jobs(level) + 1;
  }

  /// First linear index of a level.
  int level_offset(int level) const { return offsets_[level]; }

  int index(int level, int jobs) const {
    return offsets_[level] + (jobs - level_min_jobs(level));
  }

  State state(int index) const;

private:
  int n0_;
  int k_;
  int capacity_;
  int size_;
  std::vector<int> offsets_;
};

} // namespace vnfq
