#pragma once

namespace dpc {

/// Mean photon number of an optical mode. Dimensionless, non-negative.
class PhotonNumber {
public:
  PhotonNumber() = default;
  explicit PhotonNumber(double value);

  double value() const noexcept { return value_; }

private:
  double value_ = 0.0;
};

/// x*log2(x) with the continuous extension 0 at x = 0.
double xlog2x(double x);

/// Von Neumann entropy of a thermal state with mean photon number n, in bits:
/// g(n) = (n+1)*log2(n+1) - n*log2(n), with g(0) = 0. Continuous at 0 and
/// strictly increasing and concave on n >= 0.
double thermal_entropy(PhotonNumber n);

}  // namespace dpc
