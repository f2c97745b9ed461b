#ifndef CONEBB_SOLVER_HPP
#define CONEBB_SOLVER_HPP

#include <chrono>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "conebb/archive.hpp"
#include "conebb/box.hpp"
#include "conebb/cones.hpp"
#include "conebb/problem.hpp"
#include "conebb/sampler.hpp"

namespace conebb {

/// Initial value of the bound gap before the first iteration.
inline constexpr double kGapSentinel = 1e6;

struct SolverParams {
  double tol_gap = 1e-3;    // stop once the bound gap is at most this ...
  double tol_width = 1e-3;  // ... and the box diameter is at most this
  OrderingCone cone = OrderingCone::polyhedral(0.0);
  SamplerConfig sampler;
  bool normalize = true;
  int max_iterations = 200;
  int threads = 1;
  /// Per-box random points used for u_nad when no midpoint is feasible.
  int fallback_samples = 10;
};

/// Throws std::invalid_argument on non-positive tolerances, a negative
/// iteration cap, a bad sampler config, or a cone that does not contain R^m_+.
void validate(const SolverParams& params, std::size_t num_objectives);

struct IterationTrace {
  int k = 0;
  std::size_t boxes_before = 0;
  std::size_t boxes_after_feasibility = 0;
  std::size_t boxes_retained = 0;
  double omega_k = 0.0;
  /// d_h(U_k, L_k) on the scale the cone comparisons use.
  double gap = kGapSentinel;
  /// Same distance on the raw objective scale.
  double gap_raw = kGapSentinel;
  std::chrono::duration<double, std::milli> elapsed{0};
};

/// Read-only view of one finished iteration, handed to observers.
struct IterationView {
  const IterationTrace& trace;
  std::span<const Box> retained;
  std::span<const Vector> upper_bounds;  // raw U_k
  std::span<const Vector> solutions;     // X_k
  std::span<const Vector> lower_bounds;  // raw L_k
  const ReferencePoints& reference;
};

using IterationObserver = std::function<void(const IterationView&)>;

enum class SolveStatus { Converged, MaxIterations, Empty, Infeasible };

[[nodiscard]] const char* to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::MaxIterations;
  std::vector<Box> boxes;
  /// U_k(C) on the raw scale; upper_bounds[i] is the image of solutions[i].
  std::vector<Vector> upper_bounds;
  std::vector<Vector> solutions;
  /// L_k(C) on the raw scale.
  std::vector<Vector> lower_bounds;
  ReferencePoints reference;
  std::vector<IterationTrace> trace;
  double gap = kGapSentinel;
  double omega = 0.0;
  std::vector<std::string> warnings;
  std::string diagnostic;
};

/// 1 iff some u in U satisfies u <=_C l (first hit wins), else 0.
[[nodiscard]] int discarding_test(std::span<const double> l, std::span<const Vector> upper_bounds,
                                  const OrderingCone& cone);

/// Breadth-first cone-dominance branch and bound. Every iteration bisects all
/// boxes, drops provably infeasible ones, bounds them from below, keeps the
/// boxes with cone-nondominated lower bounds as sampling targets, collects
/// cone-nondominated upper bounds, and discards every unprotected box whose
/// lower bound is weakly cone-dominated by an upper bound.
[[nodiscard]] SolveResult solve(const Problem& p, const SolverParams& params,
                                const IterationObserver& observer = {});

}  // namespace conebb

#endif  // CONEBB_SOLVER_HPP
