#ifndef CONEBB_ARCHIVE_HPP
#define CONEBB_ARCHIVE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "conebb/box.hpp"
#include "conebb/cones.hpp"
#include "conebb/problem.hpp"

namespace conebb {

/// Finite set of objective vectors that are pairwise incomparable under a
/// fixed ordering cone. Each entry carries an opaque id (a box index for
/// lower bounds, an index into a preimage table for upper bounds).
///
/// Single writer; filtering is a plain O(k^2) scan.
class NondominatedSet {
 public:
  struct Entry {
    Vector vector;
    std::size_t payload = 0;
  };

  explicit NondominatedSet(OrderingCone cone) : cone_(std::move(cone)) {}

  /// Same final set as inserting `points` one by one (payload = index) in
  /// ascending cone order_key, ties in input order. Entries end up sorted by
  /// key, which lets eviction scan only a tail. Much faster on large inputs.
  static NondominatedSet from_points(OrderingCone cone, std::span<const Vector> points);

  /// Rejects v if a stored entry weakly dominates it (equal vectors included);
  /// otherwise evicts every entry weakly dominated by v and stores v.
  bool insert(const Vector& v, std::size_t payload);

  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] const OrderingCone& cone() const { return cone_; }
  [[nodiscard]] std::vector<Vector> vectors() const;

 private:
  OrderingCone cone_;
  std::vector<Entry> entries_;
};

/// Indices (ascending) of the points kept by NondominatedSet::from_points.
[[nodiscard]] std::vector<std::size_t> nondominated_indices(std::span<const Vector> points,
                                                            const OrderingCone& cone);

/// max_{a in A} min_{b in B} ||a - b||. Throws std::invalid_argument on an empty set.
[[nodiscard]] double directed_hausdorff(std::span<const Vector> a, std::span<const Vector> b);
[[nodiscard]] double hausdorff(std::span<const Vector> a, std::span<const Vector> b);

/// Running surrogates for the ideal point (l_star) and nadir point (u_nad).
struct ReferencePoints {
  Vector l_star;
  Vector u_nad;
};

/// l_star = coordinatewise min of the lower bounds; u_nad = coordinatewise
/// max over the Pareto-nondominated subset of the feasible images.
/// Throws std::invalid_argument if either input is empty.
[[nodiscard]] ReferencePoints update_reference_points(std::span<const Vector> lower_bounds,
                                                      std::span<const Vector> feasible_images);

/// Images of feasible points among `per_box` seeded uniform samples per box.
/// Used for u_nad when no box midpoint is feasible. `origin` receives the
/// index of the box each returned image came from.
[[nodiscard]] std::vector<Vector> fallback_feasible_images(const Problem& p, std::span<const Box> boxes,
                                                           int per_box, std::uint64_t seed,
                                                           std::vector<std::size_t>* origin = nullptr);

/// (v_i - l_star_i) / (u_nad_i - l_star_i); a zero denominator is replaced by 1.
[[nodiscard]] Vector normalize(std::span<const double> v, const ReferencePoints& rp);

/// True when the lower bound attains l_star_i, or one of the nadir
/// candidate images attains u_nad_i, in some coordinate i.
[[nodiscard]] bool is_protected(std::span<const double> lower_bound, std::span<const Vector> nadir_images,
                                const ReferencePoints& rp);

}  // namespace conebb

#endif  // CONEBB_ARCHIVE_HPP
