#pragma once

#include "dpc/channels.hpp"

namespace dpc {

/// Dirty-paper coefficient t in the auxiliary-variable assignment U = X + t*S.
/// Any finite value is allowed; the conventional search domain is [0,1].
class DpcCoefficient {
public:
  DpcCoefficient() = default;
  explicit DpcCoefficient(double value);

  double value() const noexcept { return t_; }

private:
  double t_ = 0.0;
};

/// One evaluated point of a rate-vs-t curve. The rate may be negative: the
/// dirty-paper bound is a difference of terms and is reported unclamped.
struct RatePoint {
  DpcCoefficient t;
  double rate = 0.0;  // bits per mode
};

/// MMSE estimation coefficient t = p/(p+n) for estimating the input from the
/// noisy observation. Optimal for the classical dirty-paper functional.
/// Throws DegenerateInstanceError when p = n = 0.
DpcCoefficient mmse_coefficient(double input_power, double noise_variance);

/// Classical dirty-paper rate I(U;Y) - I(U;S) in bits per real dimension for
/// jointly Gaussian X ~ N(0,p), S ~ N(0,q), Z ~ N(0,n) with U = X + t*S and
/// Y = X + S + Z:
///
///   1/2 * log2[ p*(p+q+n) / (p*q*(1-t)^2 + n*(p + t^2*q)) ]
///
/// At q = 0 this is 1/2*log2(1 + p/n) for every t. Throws
/// DegenerateInstanceError when numerator or denominator is not positive
/// (p = 0 boundary cases).
double costa_rate(const ClassicalDpcInstance& inst, DpcCoefficient t);

/// Capacity of the homodyne reduction, independent of the interference:
/// 1/2 * log2(1 + 4*eta*n_a / (2*(1-eta)*n_e + 1)).
double homodyne_capacity(const LossyChannelParams& ch, const SignalParams& sig);

/// Capacity of the heterodyne reduction, independent of the interference:
/// log2(1 + eta*n_a / ((1-eta)*n_e + 1)). Computed as two real channels at
/// half the per-dimension power each.
double heterodyne_capacity(const LossyChannelParams& ch, const SignalParams& sig);

/// Conditional variance of the interference S given the auxiliary variable
/// gamma = alpha + t*S: n_a*n_s / (n_a + t^2*n_s). Throws DomainError when
/// n_a + t^2*n_s = 0.
double conditional_interference_variance(const SignalParams& sig, DpcCoefficient t);

/// Dirty-paper lower bound for the lossy bosonic channel with joint detection:
///
///   g(eta*(n_a+n_s) + (1-eta)*n_e)
///   - g(eta*(1-t)^2*n_a*n_s/(n_a + t^2*n_s) + (1-eta)*n_e)
///   - log2((n_a + t^2*n_s)/n_a)
///
/// At n_s = 0 the bound is t-independent and equals
/// g(eta*n_a + (1-eta)*n_e) - g((1-eta)*n_e). Throws DomainError for n_a = 0
/// with n_s > 0, where the log term diverges.
double joint_dpc_rate(const LossyChannelParams& ch, const SignalParams& sig, DpcCoefficient t);

/// Dirty-paper lower bound for the thermal amplifier channel; same three-term
/// shape as joint_dpc_rate with kappa in place of eta and (kappa-1) in place
/// of (1-eta).
double amplifier_dpc_rate(const AmplifierChannelParams& ch, const SignalParams& sig,
                          DpcCoefficient t);

}  // namespace dpc
