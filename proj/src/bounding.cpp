#include "conebb/bounding.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "conebb/rng.hpp"

namespace conebb {

Vector lipschitz_lower_bound(const Problem& p, const Vector& midpoint_image, double diameter) {
  const auto& L = p.lipschitz_obj();
  Vector l(midpoint_image.size());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = midpoint_image[i] - 0.5 * L[i] * diameter;
  return l;
}

LowerBound lipschitz_lower_bound(const Problem& p, const Box& b, std::size_t box_id) {
  const Vector mid = b.midpoint();
  return {lipschitz_lower_bound(p, p.objectives_at(mid), b.diameter()), box_id};
}

FeasibilityStatus feasibility_test(const Problem& p, const Vector& midpoint_constraints, double diameter) {
  const auto& L = p.lipschitz_con();
  for (std::size_t j = 0; j < midpoint_constraints.size(); ++j) {
    if (midpoint_constraints[j] + 0.5 * L[j] * diameter < 0.0) return FeasibilityStatus::ProvablyInfeasible;
  }
  return FeasibilityStatus::Undetermined;
}

FeasibilityStatus feasibility_test(const Problem& p, const Box& b) {
  if (p.num_constraints() == 0) return FeasibilityStatus::Undetermined;
  const Vector mid = b.midpoint();
  Vector g(p.num_constraints());
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = p.constraint(j)(mid);
  return feasibility_test(p, g, b.diameter());
}

double estimate_lipschitz(const ScalarFunction& f, const Box& b, int samples, std::uint64_t rng_seed,
                          LipschitzEstimateOptions opts) {
  if (samples < 2) throw std::invalid_argument("estimate_lipschitz: need at least 2 samples");
  std::mt19937_64 rng(rng_seed);
  std::vector<Vector> xs(static_cast<std::size_t>(samples), Vector(b.dim()));
  Vector fx(xs.size());
  for (std::size_t s = 0; s < xs.size(); ++s) {
    for (std::size_t k = 0; k < b.dim(); ++k) {
      xs[s][k] = uniform_in(rng, b.lo()[k], b.hi()[k]);
    }
    fx[s] = f(xs[s]);
  }

  double best = 0.0;
  for (std::size_t a = 0; a < xs.size(); ++a) {
    for (std::size_t c = a + 1; c < xs.size(); ++c) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < b.dim(); ++k) {
        const double d = xs[a][k] - xs[c][k];
        d2 += d * d;
      }
      if (d2 <= 0.0) continue;
      best = std::max(best, std::abs(fx[a] - fx[c]) / std::sqrt(d2));
    }
  }
  return std::max(best * opts.safety_factor, opts.floor);
}

}  // namespace conebb
