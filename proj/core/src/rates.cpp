#include "dpc/rates.hpp"

#include <cmath>
#include <string>

#include "dpc/entropy.hpp"
#include "dpc/errors.hpp"

namespace dpc {

DpcCoefficient::DpcCoefficient(double value) : t_(value) {
  if (!std::isfinite(value)) {
    throw DomainError("dirty-paper coefficient must be finite");
  }
}

DpcCoefficient mmse_coefficient(double input_power, double noise_variance) {
  if (!(input_power >= 0.0) || !(noise_variance >= 0.0)) {
    throw DomainError("mmse_coefficient requires p >= 0 and n >= 0");
  }
  const double denom = input_power + noise_variance;
  if (!(denom > 0.0)) {
    throw DegenerateInstanceError("mmse coefficient is undefined for p = n = 0");
  }
  return DpcCoefficient(input_power / denom);
}

double costa_rate(const ClassicalDpcInstance& inst, DpcCoefficient t) {
  const double p = inst.input_power();
  const double q = inst.interference_power();
  const double n = inst.noise_variance();
  const double tv = t.value();

  const double numerator = p * (p + q + n);
  const double one_minus_t = 1.0 - tv;
  const double denominator = p * q * one_minus_t * one_minus_t + n * (p + tv * tv * q);
  if (!(numerator > 0.0) || !(denominator > 0.0)) {
    throw DegenerateInstanceError("costa rate is undefined at p = " + std::to_string(p) +
                                  ", q = " + std::to_string(q) + ", t = " + std::to_string(tv));
  }
  return 0.5 * std::log2(numerator / denominator);
}

namespace {

// Capacities of the classical reductions are interference-free Costa rates,
// so both detection modes share the q = 0 code path.
double interference_free_costa(double input_power, double noise_variance) {
  if (input_power == 0.0) {
    return 0.0;
  }
  const ClassicalDpcInstance inst(input_power, 0.0, noise_variance);
  return costa_rate(inst, mmse_coefficient(input_power, noise_variance));
}

}  // namespace

double homodyne_capacity(const LossyChannelParams& ch, const SignalParams& sig) {
  const ClassicalDpcInstance inst = homodyne_reduction(ch, sig);
  return interference_free_costa(inst.input_power(), inst.noise_variance());
}

double heterodyne_capacity(const LossyChannelParams& ch, const SignalParams& sig) {
  const ClassicalDpcInstance inst = heterodyne_reduction(ch, sig);
  // One complex channel = two real channels at half the signal power each.
  return 2.0 * interference_free_costa(inst.input_power() / 2.0, inst.noise_variance());
}

double conditional_interference_variance(const SignalParams& sig, DpcCoefficient t) {
  const double na = sig.input_photons().value();
  const double ns = sig.interference_photons().value();
  const double tv = t.value();
  const double denom = na + tv * tv * ns;
  if (!(denom > 0.0)) {
    throw DomainError("conditional interference variance is undefined at n_a + t^2*n_s = 0");
  }
  return na * ns / denom;
}

double joint_dpc_rate(const LossyChannelParams& ch, const SignalParams& sig, DpcCoefficient t) {
  const double eta = ch.transmissivity();
  const double ne = ch.environment_photons().value();
  const double na = sig.input_photons().value();
  const double ns = sig.interference_photons().value();

  const double environment_photons = (1.0 - eta) * ne;
  if (ns == 0.0) {
    // Interference-free: the bound collapses to a t-independent value.
    return thermal_entropy(PhotonNumber(eta * na + environment_photons)) -
           thermal_entropy(PhotonNumber(environment_photons));
  }
  if (na == 0.0) {
    throw DomainError("joint DPC rate is singular at n_a = 0 with n_s > 0");
  }

  const double tv = t.value();
  const double residual = eta * (1.0 - tv) * (1.0 - tv) * conditional_interference_variance(sig, t);
  return thermal_entropy(PhotonNumber(eta * (na + ns) + environment_photons)) -
         thermal_entropy(PhotonNumber(residual + environment_photons)) -
         std::log2((na + tv * tv * ns) / na);
}

double amplifier_dpc_rate(const AmplifierChannelParams& ch, const SignalParams& sig,
                          DpcCoefficient t) {
  const double kappa = ch.gain();
  const double ne = ch.environment_photons().value();
  const double na = sig.input_photons().value();
  const double ns = sig.interference_photons().value();

  const double environment_photons = (kappa - 1.0) * ne;
  if (ns == 0.0) {
    return thermal_entropy(PhotonNumber(kappa * na + environment_photons)) -
           thermal_entropy(PhotonNumber(environment_photons));
  }
  if (na == 0.0) {
    throw DomainError("amplifier DPC rate is singular at n_a = 0 with n_s > 0");
  }

  const double tv = t.value();
  const double residual =
      kappa * (1.0 - tv) * (1.0 - tv) * conditional_interference_variance(sig, t);
  return thermal_entropy(PhotonNumber(kappa * (na + ns) + environment_photons)) -
         thermal_entropy(PhotonNumber(residual + environment_photons)) -
         std::log2((na + tv * tv * ns) / na);
}

}  // namespace dpc
