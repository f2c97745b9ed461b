#ifndef CONEBB_ORTHANT_HPP
#define CONEBB_ORTHANT_HPP

// Offline orthant queries used to speed up C_eps filtering for m <= 3.
// Under C_eps, u <= v iff T u <= T v componentwise, so after mapping through
// T the cone order is the plain componentwise order.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "conebb/cones.hpp"

namespace conebb::detail {

struct Mapped {
  std::vector<std::array<double, 3>> pts;
  double max_abs = 0.0;
};

/// T_eps images padded to 3 coordinates, or nullopt when the cone is not
/// polyhedral or m > 3.
std::optional<Mapped> map_for_orthant(const OrderingCone& cone, std::span<const Vector> ys);

/// hit[q] = 1 iff some p satisfies p_i <= q_i + offset for every i < m.
std::vector<char> orthant_hits(std::span<const std::array<double, 3>> pts, std::span<const std::array<double, 3>> queries,
                               double offset, std::size_t m);

/// other[i] = 1 iff some j != i satisfies p_j <= p_i + offset for every coordinate < m.
std::vector<char> orthant_hits_other(std::span<const std::array<double, 3>> pts, double offset, std::size_t m);

/// Rounding margin for comparisons of mapped vectors with magnitude up to max_abs.
inline double orthant_margin(double max_abs, std::size_t m) { return 1e-9 * static_cast<double>(m) * (1.0 + max_abs); }

}  // namespace conebb::detail

#endif
