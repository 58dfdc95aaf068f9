#include "dpc/channels.hpp"

#include <cmath>
#include <string>

#include "dpc/errors.hpp"

namespace dpc {

LossyChannelParams::LossyChannelParams(double transmissivity, PhotonNumber environment_photons)
    : eta_(transmissivity), n_e_(environment_photons) {
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) {
    throw DomainError("transmissivity must lie in [0,1], got " + std::to_string(transmissivity));
  }
}

AmplifierChannelParams::AmplifierChannelParams(double gain, PhotonNumber environment_photons)
    : kappa_(gain), n_e_(environment_photons) {
  if (!(gain > 1.0) || !std::isfinite(gain)) {
    throw DomainError("amplification gain must be finite and > 1, got " + std::to_string(gain));
  }
}

SignalParams::SignalParams(PhotonNumber input_photons, PhotonNumber interference_photons)
    : n_a_(input_photons), n_s_(interference_photons) {}

ClassicalDpcInstance::ClassicalDpcInstance(double input_power, double interference_power,
                                           double noise_variance, bool complex_valued)
    : p_(input_power), q_(interference_power), n_(noise_variance), complex_(complex_valued) {
  if (!(input_power >= 0.0) || !std::isfinite(input_power)) {
    throw DomainError("input power must be finite and >= 0, got " + std::to_string(input_power));
  }
  if (!(interference_power >= 0.0) || !std::isfinite(interference_power)) {
    throw DomainError("interference power must be finite and >= 0, got " +
                      std::to_string(interference_power));
  }
  if (!(noise_variance > 0.0) || !std::isfinite(noise_variance)) {
    throw DomainError("noise variance must be finite and > 0, got " +
                      std::to_string(noise_variance));
  }
}

double homodyne_noise_variance(const LossyChannelParams& ch) {
  return (2.0 * (1.0 - ch.transmissivity()) * ch.environment_photons().value() + 1.0) / 4.0;
}

double heterodyne_noise_variance(const LossyChannelParams& ch) {
  return ((1.0 - ch.transmissivity()) * ch.environment_photons().value() + 1.0) / 2.0;
}

ClassicalDpcInstance homodyne_reduction(const LossyChannelParams& ch, const SignalParams& sig) {
  const double eta = ch.transmissivity();
  return ClassicalDpcInstance(eta * sig.input_photons().value(),
                              eta * sig.interference_photons().value(),
                              homodyne_noise_variance(ch));
}

ClassicalDpcInstance heterodyne_reduction(const LossyChannelParams& ch, const SignalParams& sig) {
  const double eta = ch.transmissivity();
  return ClassicalDpcInstance(eta * sig.input_photons().value(),
                              eta * sig.interference_photons().value(),
                              heterodyne_noise_variance(ch),
                              /*complex_valued=*/true);
}

}  // namespace dpc
