#include "conebb/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "conebb/rng.hpp"

namespace conebb {

namespace {

constexpr double kDifferentialWeight = 0.5;

struct Individual {
  Vector x;
  Evaluation eval;
  bool feasible = false;
  double violation = 0.0;
};

Individual make_individual(const Problem& p, Vector x) {
  Individual ind;
  ind.eval = p.evaluate_unchecked(x);
  ind.x = std::move(x);
  ind.feasible = is_feasible(ind.eval);
  ind.violation = total_violation(ind.eval);
  return ind;
}

double chebyshev(const Vector& f, const Vector& weight, const Vector& ideal) {
  double v = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) v = std::max(v, weight[j] * std::abs(f[j] - ideal[j]));
  return v;
}

bool not_worse(const Individual& a, const Individual& b, const Vector& weight, const Vector& ideal) {
  if (a.feasible != b.feasible) return a.feasible;
  if (!a.feasible) return a.violation <= b.violation;
  return chebyshev(a.eval.objectives, weight, ideal) <= chebyshev(b.eval.objectives, weight, ideal);
}

double standard_normal(std::mt19937_64& rng) {
  // Box-Muller; keeps the stream portable across standard libraries.
  const double u1 = 1.0 - uniform_in(rng, 0.0, 1.0);
  const double u2 = uniform_in(rng, 0.0, 1.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

void validate(const SamplerConfig& cfg) {
  if (cfg.population < 1) throw std::invalid_argument("sampler: population must be >= 1");
  if (cfg.generations < 0) throw std::invalid_argument("sampler: generations must be >= 0");
  if (!(cfg.crossover_rate >= 0.0 && cfg.crossover_rate <= 1.0)) {
    throw std::invalid_argument("sampler: crossover_rate must lie in [0, 1]");
  }
  if (!(cfg.mutation_scale >= 0.0)) throw std::invalid_argument("sampler: mutation_scale must be >= 0");
}

std::vector<Sample> sample_upper_bounds(const Problem& p, const Box& b, const SamplerConfig& cfg,
                                        std::size_t iteration, std::size_t box_index,
                                        const std::optional<Evaluation>& midpoint_eval) {
  validate(cfg);
  std::mt19937_64 rng(derive_seed(cfg.seed, iteration, box_index));
  const std::size_t n = b.dim();
  const std::size_t m = p.num_objectives();
  const auto pop_size = static_cast<std::size_t>(cfg.population);
  const Vector width = b.width();

  // Feasible evaluations in order; elites are picked from these at the end.
  std::vector<Sample> seen;
  Vector ideal(m, std::numeric_limits<double>::infinity());
  auto record = [&](const Individual& ind) {
    if (!ind.feasible) return;
    for (std::size_t j = 0; j < m; ++j) ideal[j] = std::min(ideal[j], ind.eval.objectives[j]);
    seen.push_back({ind.x, ind.eval.objectives});
  };

  Individual mid;
  mid.x = b.midpoint();
  mid.eval = midpoint_eval ? *midpoint_eval : p.evaluate_unchecked(mid.x);
  mid.feasible = is_feasible(mid.eval);
  mid.violation = total_violation(mid.eval);
  record(mid);
  const bool midpoint_kept = mid.feasible;

  std::vector<Vector> weights(pop_size, Vector(m));
  for (auto& w : weights) {
    double s = 0.0;
    for (auto& wj : w) {
      wj = -std::log(1.0 - uniform_in(rng, 0.0, 1.0) + 1e-300);
      s += wj;
    }
    for (auto& wj : w) wj = s > 0.0 ? wj / s : 1.0 / static_cast<double>(m);
  }

  std::vector<Individual> pop;
  pop.reserve(pop_size);
  for (std::size_t i = 0; i < pop_size; ++i) {
    Vector x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = uniform_in(rng, b.lo()[k], b.hi()[k]);
    pop.push_back(make_individual(p, std::move(x)));
    record(pop.back());
  }

  const double jitter_prob = 1.0 / static_cast<double>(n);
  for (int gen = 0; gen < cfg.generations; ++gen) {
    for (std::size_t i = 0; i < pop_size; ++i) {
      const std::size_t r1 = rng() % pop_size;
      const std::size_t r2 = rng() % pop_size;
      const std::size_t r3 = rng() % pop_size;
      const std::size_t forced = rng() % n;
      Vector trial(n);
      for (std::size_t k = 0; k < n; ++k) {
        double v = pop[i].x[k];
        if (k == forced || uniform_in(rng, 0.0, 1.0) < cfg.crossover_rate) {
          v = pop[r1].x[k] + kDifferentialWeight * (pop[r2].x[k] - pop[r3].x[k]);
        }
        if (uniform_in(rng, 0.0, 1.0) < jitter_prob) v += cfg.mutation_scale * width[k] * standard_normal(rng);
        trial[k] = std::clamp(v, b.lo()[k], b.hi()[k]);
      }
      Individual child = make_individual(p, std::move(trial));
      record(child);
      if (not_worse(child, pop[i], weights[i], ideal)) pop[i] = std::move(child);
    }
  }

  // Elites: the best seen point for each individual's Chebyshev function,
  // measured from the fixed Lipschitz corner of the box, and for the
  // equal-weight sum. Fixed references make every elite non-increasing in
  // the number of generations.
  Vector corner = mid.eval.objectives;
  for (std::size_t j = 0; j < m; ++j) corner[j] -= p.lipschitz_obj()[j] * b.diameter() / 2.0;
  std::vector<std::size_t> keep;
  if (!seen.empty()) {
    for (const auto& w : weights) {
      std::size_t best = 0;
      double best_v = chebyshev(seen[0].f, w, corner);
      for (std::size_t s = 1; s < seen.size(); ++s) {
        const double v = chebyshev(seen[s].f, w, corner);
        if (v < best_v) {
          best_v = v;
          best = s;
        }
      }
      keep.push_back(best);
    }
    std::size_t best = 0;
    double best_v = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < seen.size(); ++s) {
      double v = 0.0;
      for (double f : seen[s].f) v += f;
      if (v < best_v) {
        best_v = v;
        best = s;
      }
    }
    keep.push_back(best);
  }
  if (midpoint_kept) keep.push_back(0);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  std::vector<Sample> out;
  out.reserve(keep.size());
  for (std::size_t idx : keep) out.push_back(seen[idx]);
  return out;
}

}  // namespace conebb
