#ifndef CONEBB_BOX_HPP
#define CONEBB_BOX_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace conebb {

/// Dense real vector. Used for decision points (length n) and objective
/// vectors (length m); the owning context fixes the dimension.
using Vector = std::vector<double>;

/// Axis-aligned hyperrectangle [lo, hi] in decision space.
class Box {
 public:
  Box() = default;

  /// Throws std::invalid_argument on empty/mismatched bounds, lo > hi, or
  /// non-finite entries.
  Box(Vector lo, Vector hi);

  [[nodiscard]] std::size_t dim() const { return lo_.size(); }
  [[nodiscard]] const Vector& lo() const { return lo_; }
  [[nodiscard]] const Vector& hi() const { return hi_; }

  [[nodiscard]] Vector midpoint() const;
  [[nodiscard]] Vector width() const;
  /// Euclidean norm of width().
  [[nodiscard]] double diameter() const;
  [[nodiscard]] bool contains(std::span<const double> x) const;

  /// Splits at the midpoint of the widest coordinate (lowest index on ties).
  /// Throws std::domain_error when every width is zero.
  [[nodiscard]] std::pair<Box, Box> bisect() const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  Vector lo_;
  Vector hi_;
};

}  // namespace conebb

#endif  // CONEBB_BOX_HPP
