#pragma once

#include <cstdint>
#include <vector>

#include "dpc/channels.hpp"
#include "dpc/rates.hpp"

namespace dpc {

/// Configuration of the seeded Gaussian mutual-information estimator.
/// num_batches is part of the reproducibility contract: batch b samples from
/// substream(seed, b), and the batch means feed the standard error.
struct McConfig {
  std::uint64_t seed = 0;
  std::int64_t num_samples = 0;
  ClassicalDpcInstance inst;
  DpcCoefficient t;
  int num_batches = 32;
};

struct CostaMiEstimate {
  double estimate = 0.0;          // I(U;Y) - I(U;S) in bits, pooled over all samples
  double std_error = 0.0;         // batch-means standard error of `estimate`
  double mi_uy = 0.0;             // pooled I(U;Y)
  double mi_us = 0.0;             // pooled I(U;S)
  double mi_us_std_error = 0.0;   // batch-means standard error of the I(U;S) part
  double xs_covariance = 0.0;     // empirical cov(X,S); independence diagnostic
  std::int64_t num_samples = 0;
  int num_batches = 0;
  std::uint64_t seed = 0;
};

/// Draws i.i.d. X ~ N(0,p), S ~ N(0,q), Z ~ N(0,n), forms U = X + t*S and
/// Y = X + S + Z, and estimates I(U;Y) - I(U;S) by plugging the empirical
/// 2x2 covariances into the Gaussian mutual-information formula. Requires
/// num_samples >= 1000. Throws EstimationError on a singular empirical
/// covariance.
CostaMiEstimate estimate_costa_rate(const McConfig& cfg);

/// Configuration of the scalar modulo-precoding transceiver demo.
struct ModuloDemoConfig {
  std::uint64_t seed = 0;
  std::int64_t num_symbols = 0;
  int constellation_size = 2;  // M equally spaced points inside one cell
  double cell_width = 1.0;
  double noise_std = 0.0;
  double interference_std = 0.0;
};

struct ModuloDemoResult {
  double ser_with_interference = 0.0;
  double ser_without = 0.0;
  std::int64_t errors_with = 0;
  std::int64_t errors_without = 0;
  std::int64_t num_symbols = 0;
  std::uint64_t seed = 0;
};

/// Folds v into the fundamental cell [-cell_width/2, cell_width/2); boundary
/// ties round toward even multiples of the cell width.
double wrap_to_cell(double v, double cell_width);

/// The M constellation points, equally spaced and centered inside one cell:
/// c_k = (k + 1/2) * w/M - w/2.
std::vector<double> constellation_points(int constellation_size, double cell_width);

/// Transmits x = wrap(d - s), receives y = x + s + z, decodes the nearest
/// constellation point to wrap(y). Runs the symbol stream twice with the same
/// data and noise sub-streams, once with s ~ N(0, interference_std^2) and once
/// with s = 0, and returns both symbol error rates.
ModuloDemoResult modulo_dpc_demo(const ModuloDemoConfig& cfg);

}  // namespace dpc
