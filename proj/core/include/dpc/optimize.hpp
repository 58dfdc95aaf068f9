#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dpc/errors.hpp"
#include "dpc/rates.hpp"

namespace dpc {

using RateFunction = std::function<double(double)>;

/// A rate-vs-t curve on a uniform grid plus the grid maximum refined by local
/// search. Points are sorted strictly increasing in t; ties in the maximum
/// resolve toward the smallest t.
struct SweepResult {
  std::vector<RatePoint> points;
  double argmax_t = 0.0;
  double max_rate = 0.0;
  double grid_step = 0.0;
};

struct ScalarMaximum {
  double t_star = 0.0;
  double rate_star = 0.0;
};

/// Raised when the swept function fails at a grid point; carries the
/// offending coefficient value.
class RateEvaluationError : public DomainError {
public:
  RateEvaluationError(double t, const std::string& reason)
      : DomainError("rate function failed at t = " + std::to_string(t) + ": " + reason), t_(t) {}

  double t() const noexcept { return t_; }

private:
  double t_;
};

/// Maximizes rate_fn on [lo, hi]: a 65-point coarse scan brackets the best
/// grid point, then golden-section refinement shrinks the bracket below tol.
/// The result is never worse than any coarse-grid evaluation; equal maxima
/// resolve to the smaller t. Deterministic for identical inputs.
ScalarMaximum maximize_over_t(const RateFunction& rate_fn, double lo, double hi,
                              double tol = 1e-9);

/// Evaluates rate_fn on `steps` uniformly spaced points covering [lo, hi]
/// inclusive, then fills the argmax fields by refining around the best grid
/// point as in maximize_over_t.
SweepResult sweep_t(const RateFunction& rate_fn, double lo, double hi, int steps);

}  // namespace dpc
