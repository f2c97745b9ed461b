#ifndef CONEBB_CONES_HPP
#define CONEBB_CONES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>

#include "conebb/box.hpp"

namespace conebb {

/// C_eps = { y : T_eps(y) >= 0 }, T_eps with unit diagonal and eps elsewhere.
struct PolyhedralEpsilon {
  double epsilon = 0.0;
};

/// Revolution cone of half-angle theta about the direction w.
struct IceCream {
  Vector w;
  double theta = 0.0;
};

/// Pointed closed convex ordering cone. Membership tests are exact unless an
/// absolute tolerance is given; the ice-cream test additionally allows a
/// few-ulp relative slack on tan(theta) so that rays lying exactly on the
/// boundary of e.g. theta = pi/4 are accepted despite pi/4 being inexact.
class OrderingCone {
 public:
  using Variant = std::variant<PolyhedralEpsilon, IceCream>;

  /// Requires 0 <= epsilon < 1.
  static OrderingCone polyhedral(double epsilon, double tolerance = 0.0);
  /// Requires ||w|| > 0 and 0 < theta < pi/2.
  static OrderingCone ice_cream(Vector w, double theta, double tolerance = 0.0);

  [[nodiscard]] const Variant& params() const { return params_; }
  [[nodiscard]] bool is_polyhedral() const { return std::holds_alternative<PolyhedralEpsilon>(params_); }
  [[nodiscard]] double tolerance() const { return tolerance_; }
  /// Fixed objective dimension, if the cone has one (ice-cream cones do).
  [[nodiscard]] std::optional<std::size_t> dimension() const;

  /// y in C. Throws std::invalid_argument on a dimension mismatch.
  [[nodiscard]] bool contains(std::span<const double> y) const;
  /// Same test for y2 - y1, without forming the difference.
  [[nodiscard]] bool contains_difference(std::span<const double> y1, std::span<const double> y2) const;

  /// A linear functional that is nonnegative on the cone: the coordinate sum
  /// for C_eps, the projection on the unit axis for ice-cream cones. Hence
  /// y1 <=_C y2 implies order_key(y1) <= order_key(y2) + m * tolerance().
  [[nodiscard]] double order_key(std::span<const double> y) const;

 private:
  OrderingCone(Variant v, double tol);
  template <class D>
  bool contains_impl(std::size_t m, D d) const;

  Variant params_;
  double tolerance_ = 0.0;
  // Ice-cream cache.
  Vector unit_axis_;
  double tan_theta_ = 0.0;
};

/// M * y with M_ii = 1, M_ij = epsilon.
[[nodiscard]] Vector t_epsilon_apply(double epsilon, std::span<const double> y);

/// Axial and radial components of (y2 - y1) with respect to w.
/// Throws std::invalid_argument for a zero direction or mismatched sizes.
[[nodiscard]] std::pair<double, double> ice_components(std::span<const double> w,
                                                       std::span<const double> y1,
                                                       std::span<const double> y2);

/// y1 <=_C y2, i.e. y2 - y1 in C.
[[nodiscard]] bool weak_dominates(const OrderingCone& c, std::span<const double> y1,
                                  std::span<const double> y2);
/// y2 - y1 in C \ {0}.
[[nodiscard]] bool strict_dominates(const OrderingCone& c, std::span<const double> y1,
                                    std::span<const double> y2);
/// Neither point weakly dominates the other.
[[nodiscard]] bool incomparable(const OrderingCone& c, std::span<const double> y1,
                                std::span<const double> y2);

/// C contains R^m_+, checked on the standard basis. For polyhedral cones the
/// answer does not depend on m; `m` is only used for cones without a fixed
/// dimension.
[[nodiscard]] bool contains_nonneg_orthant(const OrderingCone& c, std::size_t m = 2);

/// Half-angles of the ice-cream cones about (1,...,1) whose cross sections
/// circumscribe / inscribe the cross section of C_eps in R^m.
[[nodiscard]] double theta_circumscribed(double epsilon, std::size_t m);
[[nodiscard]] double theta_inscribed(double epsilon, std::size_t m);

}  // namespace conebb

#endif  // CONEBB_CONES_HPP
