#ifndef CONEBB_SAMPLER_HPP
#define CONEBB_SAMPLER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "conebb/box.hpp"
#include "conebb/problem.hpp"

namespace conebb {

struct SamplerConfig {
  int population = 10;
  int generations = 20;
  std::uint64_t seed = 0;
  double crossover_rate = 0.9;
  /// Std-dev of the Gaussian jitter, relative to the box width.
  double mutation_scale = 0.1;
};

/// Throws std::invalid_argument when population < 1, generations < 0 or the
/// rates are out of range.
void validate(const SamplerConfig& cfg);

struct Sample {
  Vector x;
  Vector f;
};

/// Feasible upper bounds inside b.
///
/// A small decomposition-style evolutionary loop: `population` individuals,
/// each with its own random simplex weight, evolved by differential variation
/// plus Gaussian jitter, clamped to the box, and replaced under a
/// feasibility-first rule (feasible beats infeasible, then lower total
/// violation, then lower weighted Chebyshev value). Returns the box midpoint
/// (when feasible) followed by per-direction elites in evaluation order: for
/// each weight, the feasible point with the lowest Chebyshev value measured
/// from the box's Lipschitz lower corner, plus the lowest coordinate sum.
/// At most population + 2 points. Deterministic in (cfg.seed, iteration, box_index).
///
/// `midpoint_eval` lets callers pass the cached evaluation of b's midpoint.
[[nodiscard]] std::vector<Sample> sample_upper_bounds(const Problem& p, const Box& b, const SamplerConfig& cfg,
                                                      std::size_t iteration, std::size_t box_index,
                                                      const std::optional<Evaluation>& midpoint_eval = std::nullopt);

}  // namespace conebb

#endif  // CONEBB_SAMPLER_HPP
