#pragma once

#include <cstdint>
#include <vector>

namespace dpc {

/// Finite random-parameter channel W(y|x,s) with parameter distribution p_S
/// and a cap on the auxiliary alphabet used by the brute-force search.
/// Alphabets are desk-scale by construction: |S|, |X|, |Y| <= 4 and
/// u_size <= |X|*|S| + 1.
class DiscreteGpInstance {
public:
  /// channel is indexed [s][x][y]; every W(.|x,s) row must sum to 1 within
  /// 1e-12, as must s_dist.
  DiscreteGpInstance(std::vector<double> s_dist,
                     std::vector<std::vector<std::vector<double>>> channel, int u_size);

  int num_params() const noexcept { return static_cast<int>(s_dist_.size()); }
  int num_inputs() const noexcept { return num_inputs_; }
  int num_outputs() const noexcept { return num_outputs_; }
  int u_size() const noexcept { return u_size_; }

  double param_prob(int s) const { return s_dist_[static_cast<std::size_t>(s)]; }
  double transition(int y, int x, int s) const {
    return channel_[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)]
                   [static_cast<std::size_t>(y)];
  }

private:
  std::vector<double> s_dist_;
  std::vector<std::vector<std::vector<double>>> channel_;
  int num_inputs_;
  int num_outputs_;
  int u_size_;
};

/// Encoding strategy for the Gelfand-Pinsker functional: a conditional
/// distribution p(u|s) and a deterministic input map x(u,s).
struct GpStrategy {
  std::vector<std::vector<double>> u_given_s;  // [s][u], each row a distribution
  std::vector<std::vector<int>> x_map;         // [u][s] -> x
};

/// Exact I(U;Y) - I(U;S) in bits for the joint distribution
/// p(s,u,x,y) = p_S(s) * p(u|s) * 1[x = x_map(u,s)] * W(y|x,s).
/// Throws DomainError on dimension mismatches or invalid distributions.
double gp_rate(const DiscreteGpInstance& inst, const GpStrategy& strat);

struct GpSearchOptions {
  /// Cap on the number of deterministic x maps enumerated; exceeding it
  /// raises BudgetError naming the required count.
  std::uint64_t max_maps = 200000;
  /// Local coordinate refinement of p(u|s) after the grid scan.
  bool refine = true;
};

struct GpSearchResult {
  double best_rate = 0.0;
  GpStrategy best_strategy;
  std::uint64_t maps_enumerated = 0;
};

/// Brute-force maximization of the Gelfand-Pinsker functional: enumerates all
/// deterministic maps x(u,s), and for each maximizes gp_rate over p(u|s) on
/// the exhaustive simplex grid with grid_levels subdivisions (optionally
/// followed by local coordinate refinement). The result is a certified LOWER
/// bound on the Gelfand-Pinsker value, never a converse. Ties resolve to the
/// lexicographically smallest map encoding; the search is deterministic.
GpSearchResult gp_capacity_bruteforce(const DiscreteGpInstance& inst, int grid_levels,
                                      const GpSearchOptions& options = {});

}  // namespace dpc
