#include "conebb/cones.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace conebb {

namespace {

constexpr double kAngleSlack = 4.0 * std::numeric_limits<double>::epsilon();

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void check_epsilon(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("cone epsilon must lie in [0, 1)");
  }
}

}  // namespace

OrderingCone::OrderingCone(Variant v, double tol) : params_(std::move(v)), tolerance_(tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("cone tolerance must be >= 0");
  if (auto* ic = std::get_if<IceCream>(&params_)) {
    const double n = norm(ic->w);
    if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("ice-cream direction must be nonzero");
    if (!(ic->theta > 0.0 && ic->theta < std::numbers::pi / 2)) {
      throw std::invalid_argument("ice-cream angle must lie in (0, pi/2)");
    }
    unit_axis_.resize(ic->w.size());
    for (std::size_t i = 0; i < ic->w.size(); ++i) unit_axis_[i] = ic->w[i] / n;
    tan_theta_ = std::tan(ic->theta);
  }
}

OrderingCone OrderingCone::polyhedral(double epsilon, double tolerance) {
  check_epsilon(epsilon);
  return OrderingCone(PolyhedralEpsilon{epsilon}, tolerance);
}

OrderingCone OrderingCone::ice_cream(Vector w, double theta, double tolerance) {
  return OrderingCone(IceCream{std::move(w), theta}, tolerance);
}

std::optional<std::size_t> OrderingCone::dimension() const {
  if (const auto* ic = std::get_if<IceCream>(&params_)) return ic->w.size();
  return std::nullopt;
}

// Membership of the vector with components d(0..m-1); d is evaluated on demand
// so that dominance checks need no temporary.
template <class D>
bool OrderingCone::contains_impl(std::size_t m, D d) const {
  if (const auto* pe = std::get_if<PolyhedralEpsilon>(&params_)) {
    for (std::size_t i = 0; i < m; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < m; ++j) row += (i == j ? 1.0 : pe->epsilon) * d(j);
      if (row < -tolerance_) return false;
    }
    return true;
  }

  if (m != unit_axis_.size()) throw std::invalid_argument("cone: dimension mismatch");
  double d1 = 0.0;
  for (std::size_t i = 0; i < m; ++i) d1 += d(i) * unit_axis_[i];
  if (d1 < -tolerance_) return false;
  double r2 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = d(i) - d1 * unit_axis_[i];
    r2 += r * r;
  }
  const double d2 = std::sqrt(r2);
  // Multiplicative form: no division by d1.
  return d2 <= d1 * tan_theta_ * (1.0 + kAngleSlack) + tolerance_;
}

bool OrderingCone::contains(std::span<const double> y) const {
  return contains_impl(y.size(), [y](std::size_t i) { return y[i]; });
}

bool OrderingCone::contains_difference(std::span<const double> y1, std::span<const double> y2) const {
  return contains_impl(y1.size(), [y1, y2](std::size_t i) { return y2[i] - y1[i]; });
}

double OrderingCone::order_key(std::span<const double> y) const {
  double k = 0.0;
  if (is_polyhedral()) {
    for (double v : y) k += v;
    return k;
  }
  if (y.size() != unit_axis_.size()) throw std::invalid_argument("cone: dimension mismatch");
  for (std::size_t i = 0; i < y.size(); ++i) k += y[i] * unit_axis_[i];
  return k;
}

Vector t_epsilon_apply(double epsilon, std::span<const double> y) {
  check_epsilon(epsilon);
  const std::size_t m = y.size();
  Vector out(m);
  for (std::size_t i = 0; i < m; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m; ++j) row += (i == j ? 1.0 : epsilon) * y[j];
    out[i] = row;
  }
  return out;
}

std::pair<double, double> ice_components(std::span<const double> w, std::span<const double> y1,
                                         std::span<const double> y2) {
  if (w.size() != y1.size() || y1.size() != y2.size()) {
    throw std::invalid_argument("ice_components: dimension mismatch");
  }
  const double n = norm(w);
  if (!(n > 0.0)) throw std::invalid_argument("ice_components: zero direction");
  double d1 = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) d1 += (y2[i] - y1[i]) * w[i];
  d1 /= n;
  double r2 = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double r = (y2[i] - y1[i]) - d1 * w[i] / n;
    r2 += r * r;
  }
  return {d1, std::sqrt(r2)};
}

bool weak_dominates(const OrderingCone& c, std::span<const double> y1, std::span<const double> y2) {
  if (y1.size() != y2.size()) throw std::invalid_argument("weak_dominates: dimension mismatch");
  return c.contains_difference(y1, y2);
}

bool strict_dominates(const OrderingCone& c, std::span<const double> y1, std::span<const double> y2) {
  if (!weak_dominates(c, y1, y2)) return false;
  for (std::size_t i = 0; i < y1.size(); ++i) {
    if (y1[i] != y2[i]) return true;
  }
  return false;
}

bool incomparable(const OrderingCone& c, std::span<const double> y1, std::span<const double> y2) {
  return !weak_dominates(c, y1, y2) && !weak_dominates(c, y2, y1);
}

bool contains_nonneg_orthant(const OrderingCone& c, std::size_t m) {
  const std::size_t dim = c.dimension().value_or(m);
  Vector e(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    e[i] = 1.0;
    if (!c.contains(e)) return false;
    e[i] = 0.0;
  }
  return true;
}

double theta_circumscribed(double epsilon, std::size_t m) {
  check_epsilon(epsilon);
  if (m < 2) throw std::invalid_argument("theta_circumscribed: m must be >= 2");
  const double md = static_cast<double>(m);
  const double a = 1.0 + (md - 2.0) * epsilon;
  return std::acos((1.0 - epsilon) / std::sqrt(md * (md - 1.0) * epsilon * epsilon + md * a * a));
}

double theta_inscribed(double epsilon, std::size_t m) {
  check_epsilon(epsilon);
  if (m < 2) throw std::invalid_argument("theta_inscribed: m must be >= 2");
  const double md = static_cast<double>(m);
  return std::acos((md - 1.0) * (1.0 - epsilon) /
                   std::sqrt(md * (md - 1.0) + md * (md - 1.0) * (md - 1.0) * epsilon * epsilon));
}

}  // namespace conebb
