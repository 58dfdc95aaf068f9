#include "dpc/optimize.hpp"

#include <algorithm>
#include <cmath>

namespace dpc {

namespace {

constexpr int kCoarsePoints = 65;
constexpr double kInversePhi = 0.6180339887498949;  // (sqrt(5)-1)/2

double eval_checked(const RateFunction& f, double t) {
  try {
    return f(t);
  } catch (const RateEvaluationError&) {
    throw;
  } catch (const DomainError& e) {
    throw RateEvaluationError(t, e.what());
  }
}

// Maxima compared by value, then by smaller t.
bool improves(double rate, double t, double best_rate, double best_t) {
  if (rate != best_rate) {
    return rate > best_rate;
  }
  return t < best_t;
}

// Golden-section scan of [lo, hi]; returns the midpoint of the final bracket
// and its rate. Assumes lo <= hi.
ScalarMaximum golden_section(const RateFunction& f, double lo, double hi, double tol) {
  double a = lo;
  double b = hi;
  double x1 = b - kInversePhi * (b - a);
  double x2 = a + kInversePhi * (b - a);
  double f1 = eval_checked(f, x1);
  double f2 = eval_checked(f, x2);
  while (b - a > tol) {
    if (f1 > f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInversePhi * (b - a);
      f1 = eval_checked(f, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInversePhi * (b - a);
      f2 = eval_checked(f, x2);
    }
  }
  const double mid = 0.5 * (a + b);
  return {mid, eval_checked(f, mid)};
}

// Refines around the seed point inside [bracket_lo, bracket_hi]; keeps the
// seed on ties so plateau maxima stay at the smallest t.
ScalarMaximum refine_bracket(const RateFunction& f, double bracket_lo, double bracket_hi,
                             double seed_t, double seed_rate, double tol) {
  const ScalarMaximum refined = golden_section(f, bracket_lo, bracket_hi, tol);
  if (improves(refined.rate_star, refined.t_star, seed_rate, seed_t)) {
    return refined;
  }
  return {seed_t, seed_rate};
}

}  // namespace

ScalarMaximum maximize_over_t(const RateFunction& rate_fn, double lo, double hi, double tol) {
  if (!(lo < hi)) {
    throw DomainError("maximize_over_t requires lo < hi");
  }
  if (!(tol > 0.0)) {
    throw DomainError("maximize_over_t requires tol > 0");
  }

  const double step = (hi - lo) / (kCoarsePoints - 1);
  int best_index = 0;
  double best_t = lo;
  double best_rate = eval_checked(rate_fn, lo);
  for (int i = 1; i < kCoarsePoints; ++i) {
    const double t = (i == kCoarsePoints - 1) ? hi : lo + i * step;
    const double rate = eval_checked(rate_fn, t);
    if (improves(rate, t, best_rate, best_t)) {
      best_index = i;
      best_t = t;
      best_rate = rate;
    }
  }

  const double bracket_lo = (best_index == 0) ? lo : lo + (best_index - 1) * step;
  const double bracket_hi = (best_index == kCoarsePoints - 1) ? hi : lo + (best_index + 1) * step;
  return refine_bracket(rate_fn, bracket_lo, bracket_hi, best_t, best_rate, tol);
}

SweepResult sweep_t(const RateFunction& rate_fn, double lo, double hi, int steps) {
  if (!(lo < hi)) {
    throw DomainError("sweep_t requires lo < hi");
  }
  if (steps < 2) {
    throw DomainError("sweep_t requires at least 2 grid points");
  }

  SweepResult result;
  result.grid_step = (hi - lo) / (steps - 1);
  result.points.reserve(static_cast<std::size_t>(steps));

  int best_index = 0;
  for (int i = 0; i < steps; ++i) {
    const double t = (i == steps - 1) ? hi : lo + i * result.grid_step;
    const double rate = eval_checked(rate_fn, t);
    result.points.push_back({DpcCoefficient(t), rate});
    const RatePoint& best = result.points[static_cast<std::size_t>(best_index)];
    if (improves(rate, t, best.rate, best.t.value())) {
      best_index = i;
    }
  }

  const RatePoint& best = result.points[static_cast<std::size_t>(best_index)];
  const double bracket_lo = result.points[static_cast<std::size_t>(std::max(best_index - 1, 0))]
                                .t.value();
  const double bracket_hi =
      result.points[static_cast<std::size_t>(std::min(best_index + 1, steps - 1))].t.value();
  const ScalarMaximum refined =
      refine_bracket(rate_fn, bracket_lo, bracket_hi, best.t.value(), best.rate, 1e-9);
  result.argmax_t = refined.t_star;
  result.max_rate = refined.rate_star;
  return result;
}

}  // namespace dpc
