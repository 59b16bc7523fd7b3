#include "vnfq/params.hpp"

#include <cmath>
#include <sstream>

#include "vnfq/errors.hpp"

namespace vnfq {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

std::string describe(const ModelParams& m) {
  std::ostringstream os;
  os << " (lambda=" << m.lambda << ", mu=" << m.mu << ", alpha=" << m.alpha
     << ", theta=" << m.theta << ", n0=" << m.n0 << ", k=" << m.k
     << ", K=" << m.capacity << ")";
  return os.str();
}

} // namespace

ModelParams validate_params(const ModelParams& raw) {
  require(std::isfinite(raw.lambda) && raw.lambda >= 0.0,
          "lambda must be finite and >= 0" + describe(raw));
  require(std::isfinite(raw.mu) && raw.mu > 0.0,
          "mu must be finite and > 0" + describe(raw));
  require(std::isfinite(raw.alpha) && raw.alpha >= 0.0,
          "alpha must be finite and >= 0" + describe(raw));
  require(std::isfinite(raw.theta) && raw.theta >= 0.0,
          "theta must be finite and >= 0" + describe(raw));
  require(raw.n0 >= 0, "n0 must be >= 0" + describe(raw));
  require(raw.k >= 0, "k must be >= 0" + describe(raw));
  require(raw.n0 + raw.k >= 1, "n0 + k must be >= 1" + describe(raw));
  require(!(raw.k > 0 && raw.alpha == 0.0),
          "alpha must be > 0 when k > 0 (setup would never complete)" + describe(raw));
  require(raw.capacity >= raw.n0 + raw.k, "K < n0+k" + describe(raw));
  return raw;
}

Weights validate_weights(const Weights& w) {
  auto bad = [](double x) { return !std::isfinite(x) || x < 0.0; };
  if (bad(w.w1) || bad(w.w2) || bad(w.w3) || bad(w.w4))
    throw ValidationError("weights w1..w4 must be finite and >= 0");
  if (w.w1 == 0.0 && w.w2 == 0.0 && w.w3 == 0.0 && w.w4 == 0.0)
    throw ValidationError("weights must not all be zero");
  return w;
}

} // namespace vnfq
