#include "dpc/entropy.hpp"

#include <cmath>
#include <string>

#include "dpc/errors.hpp"

namespace dpc {

namespace {
// Below this threshold x*log2(x) is treated as its limit 0, which also keeps
// 0 * log2(0) from producing NaN.
constexpr double kXLogFloor = 1e-300;
}  // namespace

PhotonNumber::PhotonNumber(double value) : value_(value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw DomainError("photon number must be finite and >= 0, got " + std::to_string(value));
  }
}

double xlog2x(double x) {
  if (x < kXLogFloor) {
    return 0.0;
  }
  return x * std::log2(x);
}

double thermal_entropy(PhotonNumber n) {
  const double v = n.value();
  return xlog2x(v + 1.0) - xlog2x(v);
}

}  // namespace dpc
