#include "conebb/archive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "conebb/rng.hpp"
#include "orthant.hpp"

namespace conebb {

bool NondominatedSet::insert(const Vector& v, std::size_t payload) {
  for (const auto& e : entries_) {
    if (weak_dominates(cone_, e.vector, v)) return false;
  }
  std::erase_if(entries_, [&](const Entry& e) { return weak_dominates(cone_, v, e.vector); });
  entries_.push_back({v, payload});
  return true;
}

NondominatedSet NondominatedSet::from_points(OrderingCone cone, std::span<const Vector> points) {
  NondominatedSet set(std::move(cone));
  const OrderingCone& c = set.cone_;
  std::vector<double> key(points.size());
  std::vector<std::size_t> order;
  order.reserve(points.size());
  double max_abs = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    key[i] = c.order_key(points[i]);
    for (double v : points[i]) max_abs = std::max(max_abs, std::abs(v));
  }
  // Points dominated by a margin in every mapped coordinate can never be
  // kept; drop them first. Among the rest only `borderline` points can have
  // a dominator, and only they can be evicted, so the scans below skip
  // everything else without changing the outcome.
  std::vector<char> borderline(points.size(), 1);
  if (auto mapped = detail::map_for_orthant(c, points)) {
    const std::size_t m = points.front().size();
    const double margin = detail::orthant_margin(mapped->max_abs, m);
    const auto hit = detail::orthant_hits(mapped->pts, mapped->pts, -margin, m);
    std::vector<std::array<double, 3>> survivors;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (hit[i]) continue;
      order.push_back(i);
      survivors.push_back(mapped->pts[i]);
    }
    const auto other = detail::orthant_hits_other(survivors, margin + c.tolerance(), m);
    for (std::size_t s = 0; s < order.size(); ++s) borderline[order[s]] = other[s];
  } else {
    for (std::size_t i = 0; i < points.size(); ++i) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });

  std::vector<double> kept_keys;
  std::vector<char> kept_border;
  for (std::size_t idx : order) {
    const Vector& v = points[idx];
    bool rejected = false;
    if (borderline[idx]) {
      for (const auto& e : set.entries_) {
        if (weak_dominates(c, e.vector, v)) {
          rejected = true;
          break;
        }
      }
    }
    if (rejected) continue;
    // v <=_C e needs key(e) >= key(v) - margin; kept keys are ascending.
    const double m = static_cast<double>(v.size());
    const double margin = m * c.tolerance() + 1e-9 * m * (1.0 + max_abs);
    const auto first = static_cast<std::size_t>(
        std::lower_bound(kept_keys.begin(), kept_keys.end(), key[idx] - margin) - kept_keys.begin());
    std::size_t out = first;
    for (std::size_t i = first; i < set.entries_.size(); ++i) {
      if (kept_border[i] && weak_dominates(c, v, set.entries_[i].vector)) continue;
      if (out != i) {
        set.entries_[out] = std::move(set.entries_[i]);
        kept_keys[out] = kept_keys[i];
        kept_border[out] = kept_border[i];
      }
      ++out;
    }
    set.entries_.resize(out);
    kept_keys.resize(out);
    kept_border.resize(out);
    set.entries_.push_back({v, idx});
    kept_keys.push_back(key[idx]);
    kept_border.push_back(borderline[idx]);
  }
  return set;
}

std::vector<Vector> NondominatedSet::vectors() const {
  std::vector<Vector> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.vector);
  return out;
}

std::vector<std::size_t> nondominated_indices(std::span<const Vector> points, const OrderingCone& cone) {
  const NondominatedSet set = NondominatedSet::from_points(cone, points);
  std::vector<std::size_t> idx;
  idx.reserve(set.size());
  for (const auto& e : set.entries()) idx.push_back(e.payload);
  std::sort(idx.begin(), idx.end());
  return idx;
}

double directed_hausdorff(std::span<const Vector> a, std::span<const Vector> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("directed_hausdorff: empty set");
  double worst = 0.0;
  for (const auto& p : a) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& q : b) {
      if (p.size() != q.size()) throw std::invalid_argument("directed_hausdorff: dimension mismatch");
      double d2 = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const double d = p[i] - q[i];
        d2 += d * d;
      }
      nearest = std::min(nearest, d2);
    }
    worst = std::max(worst, nearest);
  }
  return std::sqrt(worst);
}

double hausdorff(std::span<const Vector> a, std::span<const Vector> b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

ReferencePoints update_reference_points(std::span<const Vector> lower_bounds,
                                        std::span<const Vector> feasible_images) {
  if (lower_bounds.empty()) throw std::invalid_argument("update_reference_points: no lower bounds");
  if (feasible_images.empty()) throw std::invalid_argument("update_reference_points: no feasible images");

  const std::size_t m = lower_bounds.front().size();
  ReferencePoints rp{Vector(m, std::numeric_limits<double>::infinity()),
                     Vector(m, -std::numeric_limits<double>::infinity())};
  for (const auto& l : lower_bounds) {
    for (std::size_t i = 0; i < m; ++i) rp.l_star[i] = std::min(rp.l_star[i], l[i]);
  }
  for (std::size_t idx : nondominated_indices(feasible_images, OrderingCone::polyhedral(0.0))) {
    for (std::size_t i = 0; i < m; ++i) rp.u_nad[i] = std::max(rp.u_nad[i], feasible_images[idx][i]);
  }
  return rp;
}

std::vector<Vector> fallback_feasible_images(const Problem& p, std::span<const Box> boxes, int per_box,
                                             std::uint64_t seed, std::vector<std::size_t>* origin) {
  std::vector<Vector> images;
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    std::mt19937_64 rng(derive_seed(seed, 0x6e616469ULL, b));
    const Box& box = boxes[b];
    Vector x(box.dim());
    for (int s = 0; s < per_box; ++s) {
      for (std::size_t k = 0; k < box.dim(); ++k) x[k] = uniform_in(rng, box.lo()[k], box.hi()[k]);
      Evaluation e = p.evaluate_unchecked(x);
      if (is_feasible(e)) {
        images.push_back(std::move(e.objectives));
        if (origin != nullptr) origin->push_back(b);
      }
    }
  }
  return images;
}

Vector normalize(std::span<const double> v, const ReferencePoints& rp) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double denom = rp.u_nad[i] - rp.l_star[i];
    if (denom == 0.0) denom = 1.0;
    out[i] = (v[i] - rp.l_star[i]) / denom;
  }
  return out;
}

bool is_protected(std::span<const double> lower_bound, std::span<const Vector> nadir_images,
                  const ReferencePoints& rp) {
  for (std::size_t i = 0; i < lower_bound.size(); ++i) {
    if (lower_bound[i] == rp.l_star[i]) return true;
  }
  for (const auto& y : nadir_images) {
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == rp.u_nad[i]) return true;
    }
  }
  return false;
}

}  // namespace conebb
