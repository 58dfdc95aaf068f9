#include <doctest.h>

#include <cmath>

#include "dpc/errors.hpp"
#include "dpc/mcsim.hpp"
#include "dpc/random.hpp"
#include "dpc/rates.hpp"

using dpc::ClassicalDpcInstance;
using dpc::DpcCoefficient;
using dpc::McConfig;
using dpc::ModuloDemoConfig;

TEST_CASE("estimation preconditions") {
  const McConfig too_small{1, 999, ClassicalDpcInstance(1.0, 1.0, 0.25), DpcCoefficient(0.5)};
  CHECK_THROWS_AS(dpc::estimate_costa_rate(too_small), dpc::DomainError);

  McConfig bad_batches{1, 10000, ClassicalDpcInstance(1.0, 1.0, 0.25), DpcCoefficient(0.5)};
  bad_batches.num_batches = 1;
  CHECK_THROWS_AS(dpc::estimate_costa_rate(bad_batches), dpc::DomainError);
}

TEST_CASE("identical seed and config reproduce bit-identical results") {
  const McConfig cfg{99, 20000, ClassicalDpcInstance(1.0, 2.0, 0.5), DpcCoefficient(0.4)};
  const auto a = dpc::estimate_costa_rate(cfg);
  const auto b = dpc::estimate_costa_rate(cfg);
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
  CHECK(a.mi_uy == b.mi_uy);
  CHECK(a.mi_us == b.mi_us);
  CHECK(a.xs_covariance == b.xs_covariance);
}

TEST_CASE("estimate agrees with the closed form on the paper instance") {
  const McConfig cfg{42, 1000000, ClassicalDpcInstance(1.0, 1.0, 0.25), DpcCoefficient(0.8)};
  const auto result = dpc::estimate_costa_rate(cfg);
  const double closed_form =
      dpc::costa_rate(ClassicalDpcInstance(1.0, 1.0, 0.25), DpcCoefficient(0.8));
  CHECK(std::abs(closed_form - 1.1610) < 1e-4);
  CHECK(std::abs(result.estimate - closed_form) < 3.0 * result.std_error);
  CHECK(result.std_error > 0.0);
}

TEST_CASE("no interference makes I(U;S) vanish") {
  const McConfig cfg{7, 50000, ClassicalDpcInstance(1.0, 0.0, 0.25), DpcCoefficient(0.6)};
  const auto result = dpc::estimate_costa_rate(cfg);
  // S is identically zero, so the empirical I(U;S) is exactly zero.
  CHECK(result.mi_us == 0.0);
  CHECK(result.mi_us_std_error == 0.0);
  CHECK(std::abs(result.estimate - 0.5 * std::log2(5.0)) < 3.0 * result.std_error);
}

TEST_CASE("t = 0 reduces to treating the interference as noise") {
  const double p = 1.0, q = 1.0, n = 0.25;
  const McConfig cfg{5, 200000, ClassicalDpcInstance(p, q, n), DpcCoefficient(0.0)};
  const auto result = dpc::estimate_costa_rate(cfg);
  const double closed_form = 0.5 * std::log2((p + q + n) / (q + n));
  CHECK(std::abs(result.estimate - closed_form) < 3.0 * result.std_error);
}

TEST_CASE("input and interference samples are uncorrelated") {
  const McConfig cfg{17, 100000, ClassicalDpcInstance(1.0, 1.0, 0.25), DpcCoefficient(0.8)};
  const auto result = dpc::estimate_costa_rate(cfg);
  CHECK(std::abs(result.xs_covariance) < 4.0 / std::sqrt(static_cast<double>(cfg.num_samples)));
}

TEST_CASE("standard error shrinks like 1/sqrt(2) per sample doubling") {
  double log_ratio_sum = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const std::uint64_t seed = 201 + static_cast<std::uint64_t>(trial);
    const McConfig half{seed, 250000, ClassicalDpcInstance(1.0, 1.0, 0.25), DpcCoefficient(0.8)};
    const McConfig full{seed, 500000, ClassicalDpcInstance(1.0, 1.0, 0.25), DpcCoefficient(0.8)};
    const double ratio =
        dpc::estimate_costa_rate(full).std_error / dpc::estimate_costa_rate(half).std_error;
    log_ratio_sum += std::log(ratio);
  }
  const double geometric_mean = std::exp(log_ratio_sum / 10.0);
  CHECK(geometric_mean >= 0.6);
  CHECK(geometric_mean <= 0.8);
}

TEST_CASE("wrap_to_cell folds into the fundamental cell") {
  CHECK(dpc::wrap_to_cell(0.3, 4.0) == 0.3);
  CHECK(dpc::wrap_to_cell(2.5, 4.0) == -1.5);
  CHECK(dpc::wrap_to_cell(-2.5, 4.0) == 1.5);
  CHECK(dpc::wrap_to_cell(13.0, 4.0) == 1.0);
  // Boundary tie: the quotient rounds to even (0.5 -> 0), leaving +w/2.
  CHECK(dpc::wrap_to_cell(2.0, 4.0) == 2.0);
  CHECK(dpc::wrap_to_cell(6.0, 4.0) == -2.0);
  CHECK_THROWS_AS(dpc::wrap_to_cell(1.0, 0.0), dpc::DomainError);
}

TEST_CASE("constellation points are centered inside one cell") {
  const auto points = dpc::constellation_points(4, 4.0);
  REQUIRE(points.size() == 4);
  CHECK(points[0] == -1.5);
  CHECK(points[1] == -0.5);
  CHECK(points[2] == 0.5);
  CHECK(points[3] == 1.5);
  for (double c : points) {
    CHECK(c >= -2.0);
    CHECK(c < 2.0);
  }
  CHECK_THROWS_AS(dpc::constellation_points(1, 4.0), dpc::DomainError);
}

TEST_CASE("noiseless modulo demo is error free") {
  ModuloDemoConfig cfg;
  cfg.seed = 3;
  cfg.num_symbols = 10000;
  cfg.constellation_size = 4;
  cfg.cell_width = 4.0;
  cfg.noise_std = 0.0;
  cfg.interference_std = 10.0;
  const auto result = dpc::modulo_dpc_demo(cfg);
  CHECK(result.ser_with_interference == 0.0);
  CHECK(result.ser_without == 0.0);
}

TEST_CASE("zero interference gives identical streams") {
  ModuloDemoConfig cfg;
  cfg.seed = 4;
  cfg.num_symbols = 50000;
  cfg.constellation_size = 4;
  cfg.cell_width = 4.0;
  cfg.noise_std = 0.4;
  cfg.interference_std = 0.0;
  const auto result = dpc::modulo_dpc_demo(cfg);
  CHECK(result.errors_with == result.errors_without);
  CHECK(result.ser_with_interference == result.ser_without);
  CHECK(result.ser_with_interference > 0.0);
}

TEST_CASE("symbol error rate is independent of the interference intensity") {
  const auto run = [](double interference_std) {
    ModuloDemoConfig cfg;
    cfg.seed = 7;
    cfg.num_symbols = 1000000;
    cfg.constellation_size = 4;
    cfg.cell_width = 4.0;
    cfg.noise_std = 0.1;
    cfg.interference_std = interference_std;
    return dpc::modulo_dpc_demo(cfg);
  };
  const auto weak = run(1.0);
  const auto strong = run(100.0);

  // Frozen regression values for this generator and seed.
  CHECK(weak.ser_with_interference == 0.0);
  CHECK(strong.ser_with_interference == 0.0);

  // 3-sigma binomial agreement between the two interference levels.
  const double n = 1e6;
  const double pooled =
      0.5 * (weak.ser_with_interference + strong.ser_with_interference);
  const double sigma = std::sqrt(std::max(pooled * (1.0 - pooled), 1.0 / n) * 2.0 / n);
  CHECK(std::abs(weak.ser_with_interference - strong.ser_with_interference) <= 3.0 * sigma);
}

TEST_CASE("interference cancellation at a noise level with measurable errors") {
  const auto run = [](double interference_std) {
    ModuloDemoConfig cfg;
    cfg.seed = 2026;
    cfg.num_symbols = 1000000;
    cfg.constellation_size = 4;
    cfg.cell_width = 4.0;
    cfg.noise_std = 0.3;
    cfg.interference_std = interference_std;
    return dpc::modulo_dpc_demo(cfg);
  };
  const auto weak = run(1.0);
  const auto strong = run(100.0);

  // Frozen regression value; theory predicts 2*Q(5/3) = 0.0956 for interior
  // and wrapped edge decisions alike.
  CHECK(weak.ser_with_interference == doctest::Approx(0.095728).epsilon(1e-12));
  CHECK(strong.ser_with_interference == doctest::Approx(0.095728).epsilon(1e-12));
  CHECK(std::abs(weak.ser_with_interference - weak.ser_without) < 1e-3);
}

TEST_CASE("substreams are decorrelated and reproducible") {
  dpc::SplitMix64 a = dpc::substream(123, 0);
  dpc::SplitMix64 a_again = dpc::substream(123, 0);
  dpc::SplitMix64 b = dpc::substream(123, 1);
  CHECK(a.next() == a_again.next());
  CHECK(a.next() != b.next());

  // Crude independence check: correlation of two streams stays small.
  dpc::SplitMix64 s0 = dpc::substream(9, 0);
  dpc::SplitMix64 s1 = dpc::substream(9, 1);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    sum += (s0.next_unit() - 0.5) * (s1.next_unit() - 0.5);
  }
  CHECK(std::abs(sum / n) < 4.0 / (12.0 * std::sqrt(static_cast<double>(n))));
}
