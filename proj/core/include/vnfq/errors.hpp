#pragma once

#include <stdexcept>
#include <string>

namespace vnfq {

/// Bad user input: rejected parameters, malformed config, infeasible request.
/// The CLI maps this to exit status 1.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A broken internal invariant (e.g. a recursion denominator that the theory
/// guarantees positive turning up non-positive). The CLI maps this to exit
/// status 2.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace vnfq
