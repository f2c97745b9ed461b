#include "orthant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace conebb::detail {

std::optional<Mapped> map_for_orthant(const OrderingCone& cone, std::span<const Vector> ys) {
  const auto* pe = std::get_if<PolyhedralEpsilon>(&cone.params());
  if (!pe || ys.empty()) return std::nullopt;
  const std::size_t m = ys.front().size();
  if (m < 1 || m > 3) return std::nullopt;
  Mapped out;
  out.pts.resize(ys.size(), {0.0, 0.0, 0.0});
  for (std::size_t k = 0; k < ys.size(); ++k) {
    if (ys[k].size() != m) return std::nullopt;
    double sum = 0.0;
    for (double v : ys[k]) sum += v;
    for (std::size_t i = 0; i < m; ++i) {
      const double t = ys[k][i] + pe->epsilon * (sum - ys[k][i]);
      out.pts[k][i] = t;
      out.max_abs = std::max(out.max_abs, std::abs(t));
    }
    for (double v : ys[k]) out.max_abs = std::max(out.max_abs, std::abs(v));
  }
  return out;
}

std::vector<char> orthant_hits(std::span<const std::array<double, 3>> pts, std::span<const std::array<double, 3>> queries,
                               double offset, std::size_t m) {
  std::vector<char> hit(queries.size(), 0);
  if (pts.empty()) return hit;
  constexpr double inf = std::numeric_limits<double>::infinity();

  std::vector<std::size_t> po(pts.size());
  std::iota(po.begin(), po.end(), 0);
  std::sort(po.begin(), po.end(), [&](std::size_t a, std::size_t b) { return pts[a][0] < pts[b][0]; });
  std::vector<std::size_t> qo(queries.size());
  std::iota(qo.begin(), qo.end(), 0);
  std::sort(qo.begin(), qo.end(), [&](std::size_t a, std::size_t b) { return queries[a][0] < queries[b][0]; });

  if (m == 1) {
    const double lo = pts[po.front()][0];
    for (std::size_t q = 0; q < queries.size(); ++q) hit[q] = lo <= queries[q][0] + offset;
    return hit;
  }

  // Fenwick tree over the ranks of the second coordinate, holding the
  // minimum third coordinate (0 when m == 2) of the inserted points.
  std::vector<double> ys(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) ys[i] = pts[i][1];
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::vector<double> tree(ys.size() + 1, inf);
  auto add = [&](double y, double z) {
    for (auto i = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin()) + 1; i < tree.size();
         i += i & (~i + 1)) {
      tree[i] = std::min(tree[i], z);
    }
  };
  auto prefix_min = [&](double y) {  // over inserted points with second coordinate <= y
    double best = inf;
    for (auto i = static_cast<std::size_t>(std::upper_bound(ys.begin(), ys.end(), y) - ys.begin()); i > 0;
         i -= i & (~i + 1)) {
      best = std::min(best, tree[i]);
    }
    return best;
  };

  std::size_t next = 0;
  for (std::size_t q : qo) {
    const double qx = queries[q][0] + offset;
    while (next < po.size() && pts[po[next]][0] <= qx) {
      const auto& p = pts[po[next]];
      add(p[1], m == 3 ? p[2] : 0.0);
      ++next;
    }
    const double best = prefix_min(queries[q][1] + offset);
    hit[q] = m == 3 ? best <= queries[q][2] + offset : best <= 0.0;
  }
  return hit;
}

std::vector<char> orthant_hits_other(std::span<const std::array<double, 3>> pts, double offset, std::size_t m) {
  std::vector<char> hit(pts.size(), 0);
  if (pts.size() < 2) return hit;
  constexpr double inf = std::numeric_limits<double>::infinity();
  constexpr std::size_t none = static_cast<std::size_t>(-1);

  // Two smallest third coordinates with distinct owners, so a point can
  // ignore itself.
  struct Top2 {
    double z1 = inf;
    std::size_t id1 = none;
    double z2 = inf;
    std::size_t id2 = none;
    void put(double z, std::size_t id) {
      if (id == id1) {
        z1 = std::min(z1, z);
        return;
      }
      if (z < z1) {
        z2 = z1;
        id2 = id1;
        z1 = z;
        id1 = id;
      } else if (id != id2 && z < z2) {
        z2 = z;
        id2 = id;
      } else if (id == id2) {
        z2 = std::min(z2, z);
      }
    }
    void merge(const Top2& o) {
      if (o.id1 != none) put(o.z1, o.id1);
      if (o.id2 != none) put(o.z2, o.id2);
    }
    [[nodiscard]] double best_except(std::size_t self) const { return id1 != self ? z1 : z2; }
  };

  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a][0] < pts[b][0]; });

  std::vector<double> ys(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) ys[i] = m >= 2 ? pts[i][1] : 0.0;
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::vector<Top2> tree(ys.size() + 1);

  std::size_t next = 0;
  for (std::size_t q : order) {
    const double qx = pts[q][0] + offset;
    while (next < order.size() && pts[order[next]][0] <= qx) {
      const std::size_t id = order[next];
      const double y = m >= 2 ? pts[id][1] : 0.0;
      const double z = m == 3 ? pts[id][2] : 0.0;
      for (auto i = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin()) + 1;
           i < tree.size(); i += i & (~i + 1)) {
        tree[i].put(z, id);
      }
      ++next;
    }
    Top2 acc;
    const double qy = m >= 2 ? pts[q][1] + offset : inf;
    for (auto i = static_cast<std::size_t>(std::upper_bound(ys.begin(), ys.end(), qy) - ys.begin()); i > 0;
         i -= i & (~i + 1)) {
      acc.merge(tree[i]);
    }
    const double best = acc.best_except(q);
    hit[q] = m == 3 ? best <= pts[q][2] + offset : best < inf;
  }
  return hit;
}

}  // namespace conebb::detail
