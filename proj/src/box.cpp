#include "conebb/box.hpp"

#include <cmath>
#include <stdexcept>

namespace conebb {

Box::Box(Vector lo, Vector hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.empty() || lo_.size() != hi_.size()) {
    throw std::invalid_argument("Box: bounds must be nonempty and of equal length");
  }
  for (std::size_t k = 0; k < lo_.size(); ++k) {
    if (!std::isfinite(lo_[k]) || !std::isfinite(hi_[k])) {
      throw std::invalid_argument("Box: non-finite bound");
    }
    if (lo_[k] > hi_[k]) {
      throw std::invalid_argument("Box: lo > hi in coordinate " + std::to_string(k));
    }
  }
}

Vector Box::midpoint() const {
  Vector m(dim());
  for (std::size_t k = 0; k < dim(); ++k) m[k] = 0.5 * (lo_[k] + hi_[k]);
  return m;
}

Vector Box::width() const {
  Vector w(dim());
  for (std::size_t k = 0; k < dim(); ++k) w[k] = hi_[k] - lo_[k];
  return w;
}

double Box::diameter() const {
  double s = 0.0;
  for (std::size_t k = 0; k < dim(); ++k) {
    const double w = hi_[k] - lo_[k];
    s += w * w;
  }
  return std::sqrt(s);
}

bool Box::contains(std::span<const double> x) const {
  if (x.size() != dim()) return false;
  for (std::size_t k = 0; k < dim(); ++k) {
    if (x[k] < lo_[k] || x[k] > hi_[k]) return false;
  }
  return true;
}

std::pair<Box, Box> Box::bisect() const {
  std::size_t split = 0;
  double widest = hi_[0] - lo_[0];
  for (std::size_t k = 1; k < dim(); ++k) {
    const double w = hi_[k] - lo_[k];
    if (w > widest) {
      widest = w;
      split = k;
    }
  }
  if (widest <= 0.0) throw std::domain_error("Box::bisect: degenerate box");

  const double mid = 0.5 * (lo_[split] + hi_[split]);
  Box left = *this;
  Box right = *this;
  left.hi_[split] = mid;
  right.lo_[split] = mid;
  return {std::move(left), std::move(right)};
}

}  // namespace conebb
