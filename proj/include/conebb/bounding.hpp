#ifndef CONEBB_BOUNDING_HPP
#define CONEBB_BOUNDING_HPP

#include <cstddef>
#include <cstdint>

#include "conebb/box.hpp"
#include "conebb/problem.hpp"

namespace conebb {

/// Componentwise lower bound on F over one box.
struct LowerBound {
  Vector values;
  std::size_t box_id = 0;
};

enum class FeasibilityStatus { ProvablyInfeasible, Undetermined };

/// l_i = f_i(mid) - (L_i / 2) * diameter. One objective evaluation per box.
[[nodiscard]] LowerBound lipschitz_lower_bound(const Problem& p, const Box& b, std::size_t box_id = 0);
/// Same bound from an already evaluated midpoint image.
[[nodiscard]] Vector lipschitz_lower_bound(const Problem& p, const Vector& midpoint_image, double diameter);

/// ProvablyInfeasible iff some constraint's Lipschitz upper bound
/// g_j(mid) + (L_gj / 2) * diameter is negative on the box.
[[nodiscard]] FeasibilityStatus feasibility_test(const Problem& p, const Box& b);
[[nodiscard]] FeasibilityStatus feasibility_test(const Problem& p, const Vector& midpoint_constraints,
                                                 double diameter);

struct LipschitzEstimateOptions {
  double safety_factor = 1.2;
  double floor = 1e-12;
};

/// Largest difference quotient |f(x) - f(y)| / ||x - y|| over `samples`
/// uniform points in b (all pairs), times the safety factor. Deterministic
/// for a given seed. Throws std::invalid_argument when samples < 2.
[[nodiscard]] double estimate_lipschitz(const ScalarFunction& f, const Box& b, int samples,
                                        std::uint64_t rng_seed, LipschitzEstimateOptions opts = {});

}  // namespace conebb

#endif  // CONEBB_BOUNDING_HPP
