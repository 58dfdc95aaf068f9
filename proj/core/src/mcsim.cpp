#include "dpc/mcsim.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "dpc/errors.hpp"
#include "dpc/random.hpp"

namespace dpc {

namespace {

struct MomentSums {
  double count = 0.0;
  double u = 0.0, y = 0.0, s = 0.0, x = 0.0;
  double uu = 0.0, yy = 0.0, ss = 0.0;
  double uy = 0.0, us = 0.0, xs = 0.0;

  void add(double xv, double sv, double zv, double t) {
    const double uv = xv + t * sv;
    const double yv = xv + sv + zv;
    count += 1.0;
    u += uv;
    y += yv;
    s += sv;
    x += xv;
    uu += uv * uv;
    yy += yv * yv;
    ss += sv * sv;
    uy += uv * yv;
    us += uv * sv;
    xs += xv * sv;
  }

  void merge(const MomentSums& other) {
    count += other.count;
    u += other.u;
    y += other.y;
    s += other.s;
    x += other.x;
    uu += other.uu;
    yy += other.yy;
    ss += other.ss;
    uy += other.uy;
    us += other.us;
    xs += other.xs;
  }
};

// Gaussian mutual information from an empirical 2x2 covariance. A variable
// with zero empirical variance is a constant, carrying zero information.
double gaussian_mi_bits(double var_a, double var_b, double cov) {
  if (var_a == 0.0 || var_b == 0.0) {
    return 0.0;
  }
  const double det = var_a * var_b - cov * cov;
  if (!(var_a > 0.0) || !(var_b > 0.0) || !(det > 0.0)) {
    throw EstimationError("singular empirical covariance");
  }
  return 0.5 * std::log2(var_a * var_b / det);
}

struct MiPair {
  double mi_uy;
  double mi_us;
};

MiPair mi_from_sums(const MomentSums& m) {
  const double n = m.count;
  const double mean_u = m.u / n;
  const double mean_y = m.y / n;
  const double mean_s = m.s / n;
  const double var_u = m.uu / n - mean_u * mean_u;
  const double var_y = m.yy / n - mean_y * mean_y;
  const double var_s = m.ss / n - mean_s * mean_s;
  const double cov_uy = m.uy / n - mean_u * mean_y;
  const double cov_us = m.us / n - mean_u * mean_s;
  return {gaussian_mi_bits(var_u, var_y, cov_uy), gaussian_mi_bits(var_u, var_s, cov_us)};
}

double batch_standard_error(const std::vector<double>& batch_values) {
  const double b = static_cast<double>(batch_values.size());
  double mean = 0.0;
  for (double v : batch_values) {
    mean += v;
  }
  mean /= b;
  double ss = 0.0;
  for (double v : batch_values) {
    ss += (v - mean) * (v - mean);
  }
  return std::sqrt(ss / (b - 1.0) / b);
}

}  // namespace

CostaMiEstimate estimate_costa_rate(const McConfig& cfg) {
  if (cfg.num_samples < 1000) {
    throw DomainError("estimation requires num_samples >= 1000, got " +
                      std::to_string(cfg.num_samples));
  }
  if (cfg.num_batches < 2 || cfg.num_batches > cfg.num_samples / 2) {
    throw DomainError("num_batches must lie in [2, num_samples/2]");
  }

  const double sd_x = std::sqrt(cfg.inst.input_power());
  const double sd_s = std::sqrt(cfg.inst.interference_power());
  const double sd_z = std::sqrt(cfg.inst.noise_variance());
  const double t = cfg.t.value();

  const std::int64_t base = cfg.num_samples / cfg.num_batches;
  const std::int64_t remainder = cfg.num_samples % cfg.num_batches;

  MomentSums pooled;
  std::vector<double> batch_diffs;
  std::vector<double> batch_mi_us;
  batch_diffs.reserve(static_cast<std::size_t>(cfg.num_batches));
  batch_mi_us.reserve(static_cast<std::size_t>(cfg.num_batches));

  for (int b = 0; b < cfg.num_batches; ++b) {
    SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(b));
    const std::int64_t batch_samples = base + (b < remainder ? 1 : 0);
    MomentSums sums;
    for (std::int64_t i = 0; i < batch_samples; ++i) {
      const double x = sd_x * standard_normal(rng);
      const double s = sd_s * standard_normal(rng);
      const double z = sd_z * standard_normal(rng);
      sums.add(x, s, z, t);
    }
    const MiPair batch_mi = mi_from_sums(sums);
    batch_diffs.push_back(batch_mi.mi_uy - batch_mi.mi_us);
    batch_mi_us.push_back(batch_mi.mi_us);
    pooled.merge(sums);
  }

  const MiPair pooled_mi = mi_from_sums(pooled);

  CostaMiEstimate result;
  result.estimate = pooled_mi.mi_uy - pooled_mi.mi_us;
  result.std_error = batch_standard_error(batch_diffs);
  result.mi_uy = pooled_mi.mi_uy;
  result.mi_us = pooled_mi.mi_us;
  result.mi_us_std_error = batch_standard_error(batch_mi_us);
  result.xs_covariance =
      pooled.xs / pooled.count - (pooled.x / pooled.count) * (pooled.s / pooled.count);
  result.num_samples = cfg.num_samples;
  result.num_batches = cfg.num_batches;
  result.seed = cfg.seed;
  return result;
}

double wrap_to_cell(double v, double cell_width) {
  if (!(cell_width > 0.0)) {
    throw DomainError("cell width must be > 0");
  }
  // remainder() rounds the quotient half-to-even, the required tie rule.
  return std::remainder(v, cell_width);
}

std::vector<double> constellation_points(int constellation_size, double cell_width) {
  if (constellation_size < 2) {
    throw DomainError("constellation needs at least 2 points");
  }
  if (!(cell_width > 0.0)) {
    throw DomainError("cell width must be > 0");
  }
  std::vector<double> points(static_cast<std::size_t>(constellation_size));
  const double spacing = cell_width / constellation_size;
  for (int k = 0; k < constellation_size; ++k) {
    points[static_cast<std::size_t>(k)] = (k + 0.5) * spacing - cell_width / 2.0;
  }
  return points;
}

namespace {

// Nearest constellation point of a value already inside the cell; the bins
// are the Voronoi cells of the cell-centered constellation.
int decode_symbol(double wrapped, double cell_width, int constellation_size) {
  const double offset = (wrapped + cell_width / 2.0) * constellation_size / cell_width;
  const int index = static_cast<int>(offset);
  return std::clamp(index, 0, constellation_size - 1);
}

}  // namespace

ModuloDemoResult modulo_dpc_demo(const ModuloDemoConfig& cfg) {
  if (cfg.num_symbols < 1) {
    throw DomainError("modulo demo requires num_symbols >= 1");
  }
  if (!(cfg.noise_std >= 0.0) || !(cfg.interference_std >= 0.0)) {
    throw DomainError("noise_std and interference_std must be >= 0");
  }
  const std::vector<double> points = constellation_points(cfg.constellation_size, cfg.cell_width);

  // Role-separated sub-streams keep the data and noise draws identical across
  // the two passes regardless of the interference setting.
  SplitMix64 data_rng = substream(cfg.seed, 0);
  SplitMix64 noise_rng = substream(cfg.seed, 1);
  SplitMix64 interference_rng = substream(cfg.seed, 2);

  ModuloDemoResult result;
  result.num_symbols = cfg.num_symbols;
  result.seed = cfg.seed;

  for (std::int64_t i = 0; i < cfg.num_symbols; ++i) {
    const int symbol = std::min(static_cast<int>(data_rng.next_unit() * cfg.constellation_size),
                                cfg.constellation_size - 1);
    const double z = cfg.noise_std * standard_normal(noise_rng);
    const double s = cfg.interference_std * standard_normal(interference_rng);
    const double d = points[static_cast<std::size_t>(symbol)];

    const double x = wrap_to_cell(d - s, cfg.cell_width);
    const double y = x + s + z;
    const int decoded_with =
        decode_symbol(wrap_to_cell(y, cfg.cell_width), cfg.cell_width, cfg.constellation_size);
    if (decoded_with != symbol) {
      ++result.errors_with;
    }

    const double y_clean = d + z;
    const int decoded_without = decode_symbol(wrap_to_cell(y_clean, cfg.cell_width),
                                              cfg.cell_width, cfg.constellation_size);
    if (decoded_without != symbol) {
      ++result.errors_without;
    }
  }

  const double n = static_cast<double>(cfg.num_symbols);
  result.ser_with_interference = static_cast<double>(result.errors_with) / n;
  result.ser_without = static_cast<double>(result.errors_without) / n;
  return result;
}

}  // namespace dpc
