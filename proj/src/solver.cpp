#include "conebb/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "conebb/bounding.hpp"
#include "conebb/parallel.hpp"
#include "conebb/rng.hpp"
#include "orthant.hpp"

namespace conebb {

namespace {

constexpr std::uint64_t kFallbackStream = 0x66616c6c6261636bULL;

// Per-box data cached for one iteration; the midpoint is evaluated once.
struct BoxRecord {
  Box box;
  Evaluation mid;
  bool mid_feasible = false;
  Vector lower_raw;
  Vector lower;  // possibly normalized
  std::vector<Vector> nadir_images;
};

// U sorted by the cone's order key. A member u can only dominate l when
// key(u) <= key(l) + m * tol, so each query scans a prefix. The extra
// relative margin covers rounding in the key sums.
class UpperIndex {
 public:
  UpperIndex(std::span<const Vector> upper, const OrderingCone& cone) : upper_(upper), cone_(cone) {
    order_.resize(upper.size());
    keys_.resize(upper.size());
    for (std::size_t i = 0; i < upper.size(); ++i) {
      order_[i] = i;
      keys_[i] = cone.order_key(upper[i]);
      for (double v : upper[i]) max_abs_ = std::max(max_abs_, std::abs(v));
    }
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return keys_[a] < keys_[b]; });
    std::vector<double> sorted(keys_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) sorted[i] = keys_[order_[i]];
    keys_ = std::move(sorted);
  }

  [[nodiscard]] int flag(std::span<const double> l) const {
    double abs_l = 0.0;
    for (double v : l) abs_l = std::max(abs_l, std::abs(v));
    const double m = static_cast<double>(l.size());
    const double limit = cone_.order_key(l) + m * cone_.tolerance() + 1e-9 * m * (1.0 + abs_l + max_abs_);
    for (std::size_t i = 0; i < order_.size() && keys_[i] <= limit; ++i) {
      if (weak_dominates(cone_, upper_[order_[i]], l)) return 1;
    }
    return 0;
  }

 private:
  std::span<const Vector> upper_;
  const OrderingCone& cone_;
  std::vector<std::size_t> order_;
  std::vector<double> keys_;
  double max_abs_ = 0.0;
};

}  // namespace

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::MaxIterations: return "max_iterations";
    case SolveStatus::Empty: return "empty";
    case SolveStatus::Infeasible: return "infeasible";
  }
  return "unknown";
}

void validate(const SolverParams& params, std::size_t num_objectives) {
  if (!(params.tol_gap > 0.0)) throw std::invalid_argument("tol_gap must be > 0");
  if (!(params.tol_width > 0.0)) throw std::invalid_argument("tol_width must be > 0");
  if (params.max_iterations < 0) throw std::invalid_argument("max_iterations must be >= 0");
  if (params.fallback_samples < 1) throw std::invalid_argument("fallback_samples must be >= 1");
  validate(params.sampler);
  if (auto d = params.cone.dimension(); d && *d != num_objectives) {
    throw std::invalid_argument("cone dimension does not match the number of objectives");
  }
  if (!contains_nonneg_orthant(params.cone, num_objectives)) {
    throw std::invalid_argument("ordering cone must contain the nonnegative orthant");
  }
}

int discarding_test(std::span<const double> l, std::span<const Vector> upper_bounds, const OrderingCone& cone) {
  for (const auto& u : upper_bounds) {
    if (weak_dominates(cone, u, l)) return 1;
  }
  return 0;
}

SolveResult solve(const Problem& p, const SolverParams& params, const IterationObserver& observer) {
  validate(params, p.num_objectives());
  using Clock = std::chrono::steady_clock;

  SolveResult result;
  std::vector<Box> boxes{p.domain()};
  double omega_prev = p.domain().diameter();
  double gap = kGapSentinel;

  auto bisect_all = [](const std::vector<Box>& parents) {
    std::vector<Box> children;
    children.reserve(2 * parents.size());
    for (const auto& b : parents) {
      auto [left, right] = b.bisect();
      children.push_back(std::move(left));
      children.push_back(std::move(right));
    }
    return children;
  };

  if (params.max_iterations == 0) {
    for (auto& b : bisect_all(boxes)) {
      if (feasibility_test(p, b) == FeasibilityStatus::Undetermined) result.boxes.push_back(std::move(b));
    }
    result.omega = result.boxes.empty() ? 0.0 : result.boxes.front().diameter();
    result.status = SolveStatus::MaxIterations;
    return result;
  }

  int k = 1;
  while ((gap > params.tol_gap || omega_prev > params.tol_width) && k <= params.max_iterations) {
    const auto t0 = Clock::now();
    IterationTrace tr;
    tr.k = k;

    std::vector<Box> children = bisect_all(boxes);
    tr.boxes_before = children.size();
    double omega = 0.0;
    for (const auto& b : children) omega = std::max(omega, b.diameter());
    tr.omega_k = omega;

    std::vector<BoxRecord> all(children.size());
    parallel_for(children.size(), params.threads, [&](std::size_t i) {
      all[i].box = std::move(children[i]);
      all[i].mid = p.evaluate_unchecked(all[i].box.midpoint());
    });

    std::vector<BoxRecord> recs;
    recs.reserve(all.size());
    for (auto& r : all) {
      if (feasibility_test(p, r.mid.constraints, r.box.diameter()) == FeasibilityStatus::Undetermined) {
        recs.push_back(std::move(r));
      }
    }
    tr.boxes_after_feasibility = recs.size();

    if (recs.empty()) {
      tr.elapsed = Clock::now() - t0;
      result.trace.push_back(tr);
      result.boxes.clear();
      result.status = SolveStatus::Empty;
      result.diagnostic = "every box was removed by the feasibility test";
      result.omega = omega;
      return result;
    }

    std::vector<Vector> lowers;
    std::vector<Vector> nadir_pool;
    lowers.reserve(recs.size());
    for (auto& r : recs) {
      r.mid_feasible = is_feasible(r.mid);
      r.lower_raw = lipschitz_lower_bound(p, r.mid.objectives, r.box.diameter());
      lowers.push_back(r.lower_raw);
      if (r.mid_feasible) {
        r.nadir_images.push_back(r.mid.objectives);
        nadir_pool.push_back(r.mid.objectives);
      }
    }
    if (nadir_pool.empty()) {
      std::vector<Box> bx;
      bx.reserve(recs.size());
      for (const auto& r : recs) bx.push_back(r.box);
      std::vector<std::size_t> origin;
      nadir_pool = fallback_feasible_images(p, bx, params.fallback_samples,
                                            derive_seed(params.sampler.seed, kFallbackStream, k), &origin);
      for (std::size_t i = 0; i < nadir_pool.size(); ++i) recs[origin[i]].nadir_images.push_back(nadir_pool[i]);
    }
    if (nadir_pool.empty()) {
      tr.elapsed = Clock::now() - t0;
      result.trace.push_back(tr);
      result.boxes.clear();
      for (auto& r : recs) result.boxes.push_back(std::move(r.box));
      result.status = SolveStatus::Infeasible;
      result.diagnostic = "no feasible point found in iteration " + std::to_string(k);
      result.omega = omega;
      return result;
    }

    const ReferencePoints rp = update_reference_points(lowers, nadir_pool);
    auto scale = [&](const Vector& v) { return params.normalize ? normalize(v, rp) : v; };
    for (auto& r : recs) r.lower = scale(r.lower_raw);

    std::vector<Vector> lower_all;
    lower_all.reserve(recs.size());
    for (const auto& r : recs) lower_all.push_back(r.lower);
    const NondominatedSet lower_set = NondominatedSet::from_points(params.cone, lower_all);
    std::vector<std::size_t> targets;
    for (const auto& e : lower_set.entries()) targets.push_back(e.payload);
    std::sort(targets.begin(), targets.end());

    std::vector<std::vector<Sample>> sampled(targets.size());
    parallel_for(targets.size(), params.threads, [&](std::size_t t) {
      const BoxRecord& r = recs[targets[t]];
      sampled[t] = sample_upper_bounds(p, r.box, params.sampler, static_cast<std::size_t>(k), targets[t], r.mid);
    });

    std::vector<Sample> flat;
    for (auto& s : sampled) {
      for (auto& smp : s) flat.push_back(std::move(smp));
    }
    std::vector<Vector> flat_scaled;
    flat_scaled.reserve(flat.size());
    for (const auto& smp : flat) flat_scaled.push_back(scale(smp.f));
    const NondominatedSet upper_set = NondominatedSet::from_points(params.cone, flat_scaled);
    const std::vector<Vector> upper_scaled = upper_set.vectors();

    const UpperIndex index(upper_scaled, params.cone);
    // -1: undecided. Mapped orthant queries settle most boxes for C_eps.
    std::vector<signed char> flag(recs.size(), -1);
    if (!upper_scaled.empty()) {
      std::vector<Vector> lower_scaled_all;
      lower_scaled_all.reserve(recs.size());
      for (const auto& r : recs) lower_scaled_all.push_back(r.lower);
      auto mu = detail::map_for_orthant(params.cone, upper_scaled);
      auto ml = detail::map_for_orthant(params.cone, lower_scaled_all);
      if (mu && ml) {
        const std::size_t m = p.num_objectives();
        const double margin = detail::orthant_margin(std::max(mu->max_abs, ml->max_abs), m);
        const auto sure = detail::orthant_hits(mu->pts, ml->pts, -margin, m);
        const auto maybe = detail::orthant_hits(mu->pts, ml->pts, margin + params.cone.tolerance(), m);
        for (std::size_t i = 0; i < recs.size(); ++i) {
          if (sure[i]) flag[i] = 1;
          else if (!maybe[i]) flag[i] = 0;
        }
      }
    } else {
      std::fill(flag.begin(), flag.end(), 0);
    }
    std::vector<char> keep(recs.size(), 0);
    parallel_for(recs.size(), params.threads, [&](std::size_t i) {
      const auto& r = recs[i];
      if (is_protected(r.lower_raw, r.nadir_images, rp)) {
        keep[i] = 1;
        return;
      }
      const int f = flag[i] >= 0 ? flag[i] : index.flag(r.lower);
      keep[i] = f == 0;
    });

    std::vector<Vector> upper_raw;
    std::vector<Vector> solutions;
    for (const auto& e : upper_set.entries()) {
      upper_raw.push_back(flat[e.payload].f);
      solutions.push_back(flat[e.payload].x);
    }
    std::vector<Vector> lower_raw;
    std::vector<Vector> lower_scaled = lower_set.vectors();
    for (const auto& e : lower_set.entries()) lower_raw.push_back(recs[e.payload].lower_raw);

    if (!upper_scaled.empty()) {
      gap = directed_hausdorff(upper_scaled, lower_scaled);
      tr.gap_raw = directed_hausdorff(upper_raw, lower_raw);
    } else {
      gap = kGapSentinel;
    }
    tr.gap = gap;

    std::vector<Box> retained;
    for (std::size_t i = 0; i < recs.size(); ++i) {
      if (keep[i]) retained.push_back(std::move(recs[i].box));
    }
    tr.boxes_retained = retained.size();
    tr.elapsed = Clock::now() - t0;
    result.trace.push_back(tr);

    if (observer) {
      observer(IterationView{result.trace.back(), retained, upper_raw, solutions, lower_raw, rp});
    }

    boxes = std::move(retained);
    result.upper_bounds = std::move(upper_raw);
    result.solutions = std::move(solutions);
    result.lower_bounds = std::move(lower_raw);
    result.reference = rp;
    omega_prev = omega;
    ++k;
  }

  result.boxes = std::move(boxes);
  result.gap = gap;
  result.omega = omega_prev;
  result.status = (gap <= params.tol_gap && omega_prev <= params.tol_width) ? SolveStatus::Converged
                                                                             : SolveStatus::MaxIterations;
  const double needed = 0.5 * omega_prev * p.lipschitz_norm();
  if (params.tol_gap < needed) {
    result.warnings.push_back("tol_gap " + std::to_string(params.tol_gap) +
                              " is below omega*||L||/2 = " + std::to_string(needed) +
                              "; the returned set is not guaranteed to be tol_gap*e-efficient");
  }
  return result;
}

}  // namespace conebb
