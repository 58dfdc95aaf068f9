#pragma once

#include "dpc/entropy.hpp"

namespace dpc {

/// Beam-splitter channel parameters: transmissivity eta in [0,1] and an
/// environment mode in a thermal state with mean photon number n_e.
/// The channel is pure-loss when n_e = 0.
class LossyChannelParams {
public:
  LossyChannelParams(double transmissivity, PhotonNumber environment_photons);

  double transmissivity() const noexcept { return eta_; }
  PhotonNumber environment_photons() const noexcept { return n_e_; }
  bool is_pure_loss() const noexcept { return n_e_.value() == 0.0; }

private:
  double eta_;
  PhotonNumber n_e_;
};

/// Thermal amplifier channel parameters: gain kappa > 1 and environment
/// mean photon number n_e.
class AmplifierChannelParams {
public:
  AmplifierChannelParams(double gain, PhotonNumber environment_photons);

  double gain() const noexcept { return kappa_; }
  PhotonNumber environment_photons() const noexcept { return n_e_; }

private:
  double kappa_;
  PhotonNumber n_e_;
};

/// Transmitter-side parameters: the input photon budget n_a and the mean
/// photon number n_s of the interference known at the transmitter.
class SignalParams {
public:
  SignalParams(PhotonNumber input_photons, PhotonNumber interference_photons);

  PhotonNumber input_photons() const noexcept { return n_a_; }
  PhotonNumber interference_photons() const noexcept { return n_s_; }

private:
  PhotonNumber n_a_;
  PhotonNumber n_s_;
};

/// Canonical classical dirty-paper instance Y = X + S + Z with input power p,
/// interference power q and noise variance n, all in common variance units.
///
/// Instances produced by heterodyne_reduction are marked complex_valued: one
/// complex channel whose p and q are total complex powers while n is the
/// per-real-dimension noise variance (total noise power recovered by doubling).
class ClassicalDpcInstance {
public:
  ClassicalDpcInstance(double input_power, double interference_power, double noise_variance,
                       bool complex_valued = false);

  double input_power() const noexcept { return p_; }
  double interference_power() const noexcept { return q_; }
  double noise_variance() const noexcept { return n_; }
  bool complex_valued() const noexcept { return complex_; }

private:
  double p_;
  double q_;
  double n_;
  bool complex_;
};

/// Noise variance of the real Gaussian channel seen through homodyne
/// detection: (2*(1-eta)*n_e + 1)/4. Never below the vacuum floor 1/4.
double homodyne_noise_variance(const LossyChannelParams& ch);

/// Per-real-dimension noise variance of the complex Gaussian channel seen
/// through heterodyne detection: ((1-eta)*n_e + 1)/2. Never below 1/2.
double heterodyne_noise_variance(const LossyChannelParams& ch);

/// Classical dirty-paper instance of the homodyne reduction. The sqrt(eta)
/// channel gain is folded into the effective powers (p = eta*n_a,
/// q = eta*n_s), matching the canonical Y = X + S + Z form.
ClassicalDpcInstance homodyne_reduction(const LossyChannelParams& ch, const SignalParams& sig);

/// Classical dirty-paper instance of the heterodyne reduction, flagged
/// complex-valued: p = eta*n_a, q = eta*n_s (total complex powers) with the
/// per-real-dimension noise variance.
ClassicalDpcInstance heterodyne_reduction(const LossyChannelParams& ch, const SignalParams& sig);

}  // namespace dpc
