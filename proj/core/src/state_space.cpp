#include "vnfq/state_space.hpp"

#include "vnfq/errors.hpp"

namespace vnfq {

StateSpace::StateSpace(const ModelParams& m)
    : n0_(m.n0), k_(m.k), capacity_(m.capacity) {
  offsets_.reserve(k_ + 2);
  int offset = 0;
  for (int i = 0; i <= k_; ++i) {
    offsets_.push_back(offset);
    offset += level_size(i);
  }
  offsets_.push_back(offset);
  size_ = offset;
}

State StateSpace::state(int index) const {
  if (index < 0 || index >= size_)
    throw InternalError("state index out of range");
  int level = 0;
  while (offsets_[level + 1] <= index) ++level;
  return {level, level_min_jobs(level) + (index - offsets_[level])};
}

} // namespace vnfq
