#include "dpc/gp_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "dpc/errors.hpp"

namespace dpc {

namespace {

constexpr int kMaxParams = 4;
constexpr int kMaxInputs = 4;
constexpr int kMaxOutputs = 4;
constexpr int kMaxAux = kMaxInputs * kMaxParams + 1;
constexpr double kDistributionTol = 1e-12;

void check_distribution(const std::vector<double>& dist, const char* what) {
  double sum = 0.0;
  for (double v : dist) {
    if (!(v >= 0.0)) {
      throw DomainError(std::string(what) + " has a negative entry");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kDistributionTol) {
    throw DomainError(std::string(what) + " sums to " + std::to_string(sum) + ", expected 1");
  }
}

}  // namespace

DiscreteGpInstance::DiscreteGpInstance(std::vector<double> s_dist,
                                       std::vector<std::vector<std::vector<double>>> channel,
                                       int u_size)
    : s_dist_(std::move(s_dist)), channel_(std::move(channel)), u_size_(u_size) {
  const int num_params = static_cast<int>(s_dist_.size());
  if (num_params < 1 || num_params > kMaxParams) {
    throw DomainError("parameter alphabet size must lie in [1," + std::to_string(kMaxParams) +
                      "]");
  }
  check_distribution(s_dist_, "s_dist");

  if (static_cast<int>(channel_.size()) != num_params) {
    throw DomainError("channel table must have one block per parameter value");
  }
  num_inputs_ = channel_.empty() ? 0 : static_cast<int>(channel_[0].size());
  if (num_inputs_ < 1 || num_inputs_ > kMaxInputs) {
    throw DomainError("input alphabet size must lie in [1," + std::to_string(kMaxInputs) + "]");
  }
  num_outputs_ = static_cast<int>(channel_[0][0].size());
  if (num_outputs_ < 1 || num_outputs_ > kMaxOutputs) {
    throw DomainError("output alphabet size must lie in [1," + std::to_string(kMaxOutputs) + "]");
  }
  for (const auto& block : channel_) {
    if (static_cast<int>(block.size()) != num_inputs_) {
      throw DomainError("ragged channel table: inconsistent input dimension");
    }
    for (const auto& row : block) {
      if (static_cast<int>(row.size()) != num_outputs_) {
        throw DomainError("ragged channel table: inconsistent output dimension");
      }
      check_distribution(row, "channel row");
    }
  }

  if (u_size_ < 1 || u_size_ > num_inputs_ * num_params + 1) {
    throw DomainError("u_size must lie in [1, |X|*|S|+1]");
  }
}

namespace {

// Flat strategy layout used by the hot loops: probabilities p(u|s) and the
// deterministic input map, both over fixed-size workspaces.
struct StrategyView {
  const double* u_given_s;  // [s*u_size + u]
  const int* x_map;         // [u*num_params + s]
};

// I(U;Y) - I(U;S) without validation. The public gp_rate and the search both
// funnel through here, so recomputing a returned strategy is bit-exact.
double gp_rate_impl(const DiscreteGpInstance& inst, const StrategyView& strat, int u_size) {
  const int ns = inst.num_params();
  const int ny = inst.num_outputs();

  double p_us[kMaxAux][kMaxParams];
  double p_uy[kMaxAux][kMaxOutputs];
  double p_u[kMaxAux] = {};
  double p_y[kMaxOutputs] = {};
  double p_s[kMaxParams] = {};

  for (int u = 0; u < u_size; ++u) {
    for (int y = 0; y < ny; ++y) {
      p_uy[u][y] = 0.0;
    }
  }
  for (int u = 0; u < u_size; ++u) {
    for (int s = 0; s < ns; ++s) {
      const double pus = inst.param_prob(s) * strat.u_given_s[s * u_size + u];
      p_us[u][s] = pus;
      p_u[u] += pus;
      p_s[s] += pus;
      if (pus == 0.0) {
        continue;
      }
      const int x = strat.x_map[u * ns + s];
      for (int y = 0; y < ny; ++y) {
        p_uy[u][y] += pus * inst.transition(y, x, s);
      }
    }
  }
  for (int u = 0; u < u_size; ++u) {
    for (int y = 0; y < ny; ++y) {
      p_y[y] += p_uy[u][y];
    }
  }

  double mi_uy = 0.0;
  for (int u = 0; u < u_size; ++u) {
    for (int y = 0; y < ny; ++y) {
      const double p = p_uy[u][y];
      if (p > 0.0) {
        mi_uy += p * std::log2(p / (p_u[u] * p_y[y]));
      }
    }
  }
  double mi_us = 0.0;
  for (int u = 0; u < u_size; ++u) {
    for (int s = 0; s < ns; ++s) {
      const double p = p_us[u][s];
      if (p > 0.0) {
        mi_us += p * std::log2(p / (p_u[u] * p_s[s]));
      }
    }
  }
  return mi_uy - mi_us;
}

}  // namespace

double gp_rate(const DiscreteGpInstance& inst, const GpStrategy& strat) {
  const int ns = inst.num_params();
  const int nx = inst.num_inputs();
  const int u_size = inst.u_size();

  if (static_cast<int>(strat.u_given_s.size()) != ns) {
    throw DomainError("strategy dimension mismatch: u_given_s must have one row per parameter");
  }
  for (const auto& row : strat.u_given_s) {
    if (static_cast<int>(row.size()) != u_size) {
      throw DomainError("strategy dimension mismatch: p(u|s) row size differs from u_size");
    }
    check_distribution(row, "p(u|s) row");
  }
  if (static_cast<int>(strat.x_map.size()) != u_size) {
    throw DomainError("strategy dimension mismatch: x_map must have one row per auxiliary value");
  }
  for (const auto& row : strat.x_map) {
    if (static_cast<int>(row.size()) != ns) {
      throw DomainError("strategy dimension mismatch: x_map row size differs from |S|");
    }
    for (int x : row) {
      if (x < 0 || x >= nx) {
        throw DomainError("x_map entry outside the input alphabet");
      }
    }
  }

  double probs[kMaxParams * kMaxAux];
  int map_flat[kMaxAux * kMaxParams];
  for (int s = 0; s < ns; ++s) {
    for (int u = 0; u < u_size; ++u) {
      probs[s * u_size + u] = strat.u_given_s[static_cast<std::size_t>(s)]
                                             [static_cast<std::size_t>(u)];
    }
  }
  for (int u = 0; u < u_size; ++u) {
    for (int s = 0; s < ns; ++s) {
      map_flat[u * ns + s] =
          strat.x_map[static_cast<std::size_t>(u)][static_cast<std::size_t>(s)];
    }
  }
  return gp_rate_impl(inst, StrategyView{probs, map_flat}, u_size);
}

namespace {

// All length-`parts` non-negative integer vectors summing to `total`, in
// lexicographic order. The exact rational grid c/total is platform-stable.
std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(parts), 0);
  const std::function<void(int, int)> build = [&](int index, int remaining) {
    if (index == parts - 1) {
      current[static_cast<std::size_t>(index)] = remaining;
      out.push_back(current);
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      current[static_cast<std::size_t>(index)] = c;
      build(index + 1, remaining - c);
    }
  };
  build(0, total);
  return out;
}

std::uint64_t count_maps(int num_inputs, int digits) {
  std::uint64_t required = 1;
  for (int i = 0; i < digits; ++i) {
    if (required > std::numeric_limits<std::uint64_t>::max() /
                       static_cast<std::uint64_t>(num_inputs)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    required *= static_cast<std::uint64_t>(num_inputs);
  }
  return required;
}

// Odometer over base-`base` digits, most significant first; returns false
// after the last combination. Visits maps in ascending lexicographic order.
bool next_digits(std::vector<int>& digits, int base) {
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    if (++digits[static_cast<std::size_t>(i)] < base) {
      return true;
    }
    digits[static_cast<std::size_t>(i)] = 0;
  }
  return false;
}

struct GridSearchState {
  double probs[kMaxParams * kMaxAux];
  double best_probs[kMaxParams * kMaxAux];
  double best_rate = -std::numeric_limits<double>::infinity();
};

// Pattern search over p(u|s): moves `delta` of mass between auxiliary symbols
// one conditional at a time, accepting strict improvements only.
void refine_probs(const DiscreteGpInstance& inst, const int* map_flat, int u_size,
                  GridSearchState& state, double initial_delta) {
  const int ns = inst.num_params();
  constexpr int kMaxPassesPerScale = 64;
  constexpr double kMinDelta = 1e-7;

  for (double delta = initial_delta; delta >= kMinDelta; delta *= 0.5) {
    for (int pass = 0; pass < kMaxPassesPerScale; ++pass) {
      bool improved = false;
      for (int s = 0; s < ns; ++s) {
        for (int from = 0; from < u_size; ++from) {
          for (int to = 0; to < u_size; ++to) {
            if (from == to) {
              continue;
            }
            double& p_from = state.best_probs[s * u_size + from];
            double& p_to = state.best_probs[s * u_size + to];
            const double move = std::min(delta, p_from);
            if (move <= 0.0) {
              continue;
            }
            const double old_from = p_from;
            const double old_to = p_to;
            p_from -= move;
            p_to += move;
            const double rate =
                gp_rate_impl(inst, StrategyView{state.best_probs, map_flat}, u_size);
            if (rate > state.best_rate) {
              state.best_rate = rate;
              improved = true;
            } else {
              p_from = old_from;
              p_to = old_to;
            }
          }
        }
      }
      if (!improved) {
        break;
      }
    }
  }
}

}  // namespace

GpSearchResult gp_capacity_bruteforce(const DiscreteGpInstance& inst, int grid_levels,
                                      const GpSearchOptions& options) {
  if (grid_levels < 2) {
    throw DomainError("grid_levels must be >= 2");
  }
  const int ns = inst.num_params();
  const int nx = inst.num_inputs();
  const int u_size = inst.u_size();
  const int digits = u_size * ns;

  const std::uint64_t required_maps = count_maps(nx, digits);
  if (required_maps > options.max_maps) {
    throw BudgetError(required_maps, options.max_maps);
  }

  const std::vector<std::vector<int>> comps = compositions(grid_levels, u_size);
  const int num_comps = static_cast<int>(comps.size());
  const double inv_levels = 1.0 / grid_levels;

  GpSearchResult result;
  result.best_rate = -std::numeric_limits<double>::infinity();

  std::vector<int> map_digits(static_cast<std::size_t>(digits), 0);
  int map_flat[kMaxAux * kMaxParams];
  std::vector<int> comp_index(static_cast<std::size_t>(ns), 0);

  bool more_maps = true;
  while (more_maps) {
    for (int u = 0; u < u_size; ++u) {
      for (int s = 0; s < ns; ++s) {
        map_flat[u * ns + s] = map_digits[static_cast<std::size_t>(u * ns + s)];
      }
    }

    GridSearchState state;
    std::fill(comp_index.begin(), comp_index.end(), 0);
    bool more_grid = true;
    while (more_grid) {
      for (int s = 0; s < ns; ++s) {
        const std::size_t ci = static_cast<std::size_t>(comp_index[static_cast<std::size_t>(s)]);
        const std::vector<int>& c = comps[ci];
        for (int u = 0; u < u_size; ++u) {
          state.probs[s * u_size + u] = c[static_cast<std::size_t>(u)] * inv_levels;
        }
      }
      const double rate = gp_rate_impl(inst, StrategyView{state.probs, map_flat}, u_size);
      if (rate > state.best_rate) {
        state.best_rate = rate;
        std::copy(state.probs, state.probs + ns * u_size, state.best_probs);
      }

      more_grid = false;
      for (int s = ns - 1; s >= 0; --s) {
        if (++comp_index[static_cast<std::size_t>(s)] < num_comps) {
          more_grid = true;
          break;
        }
        comp_index[static_cast<std::size_t>(s)] = 0;
      }
    }

    if (options.refine) {
      refine_probs(inst, map_flat, u_size, state, 0.5 * inv_levels);
    }

    // Strictly-better-wins keeps the lexicographically smallest map on ties,
    // since maps are visited in ascending encoding order.
    if (state.best_rate > result.best_rate) {
      result.best_rate = state.best_rate;
      result.best_strategy.u_given_s.assign(static_cast<std::size_t>(ns),
                                            std::vector<double>(static_cast<std::size_t>(u_size)));
      result.best_strategy.x_map.assign(static_cast<std::size_t>(u_size),
                                        std::vector<int>(static_cast<std::size_t>(ns)));
      for (int s = 0; s < ns; ++s) {
        for (int u = 0; u < u_size; ++u) {
          result.best_strategy.u_given_s[static_cast<std::size_t>(s)]
                                        [static_cast<std::size_t>(u)] =
              state.best_probs[s * u_size + u];
        }
      }
      for (int u = 0; u < u_size; ++u) {
        for (int s = 0; s < ns; ++s) {
          result.best_strategy.x_map[static_cast<std::size_t>(u)][static_cast<std::size_t>(s)] =
              map_flat[u * ns + s];
        }
      }
    }

    ++result.maps_enumerated;
    more_maps = next_digits(map_digits, nx);
  }

  return result;
}

}  // namespace dpc
