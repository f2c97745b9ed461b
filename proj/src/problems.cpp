#include "conebb/problems.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conebb::problems {

namespace {

using std::numbers::pi;
using Anchor = std::array<double, 3>;

double sq(double v) { return v * v; }

double dist2(std::span<const double> x, const Anchor& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < 3; ++i) s += sq(x[i] - a[i]);
  return s;
}

Box cube(std::size_t n, double lo, double hi) { return Box(Vector(n, lo), Vector(n, hi)); }

// Squared distances to three anchors on [-2,2]^3. ||grad|| = 2||x - a|| <= 2*3*sqrt(3)
// for anchors with entries +-1.
Problem anchor_problem(std::string name, const Anchor& a1, const Anchor& a2, const Anchor& a3) {
  const double L = 6.0 * std::sqrt(3.0);
  return Problem(std::move(name), cube(3, -2.0, 2.0),
                 {[a1](std::span<const double> x) { return dist2(x, a1); },
                  [a2](std::span<const double> x) { return dist2(x, a2); },
                  [a3](std::span<const double> x) { return dist2(x, a3); }},
                 {L, L, L});
}

// Radius profile shared by the knee problems:
// r(x) = 5 + 10 (x - 0.5)^2 + cos(2 K pi x) / K.
double knee_radius(double x, int K) { return 5.0 + 10.0 * sq(x - 0.5) + std::cos(2.0 * K * pi * x) / K; }
double knee_radius_max(int K) { return 7.5 + 1.0 / K; }
double knee_radius_slope_max() { return 10.0 + 2.0 * pi; }

}  // namespace

std::vector<std::string> names() {
  return {"tp1", "tp2", "pe1", "pe2", "pe3", "deb2dk", "deb3dk", "srn", "constr", "kita"};
}

// F = (k1 ||x - (1,1)||^2, k2 ||x + (1,1)||^2) on [-2,2]^2.
// ||grad f_i|| = 2 k_i ||x -+ (1,1)|| <= 6 sqrt(2) k_i.
Problem tp1(double k1, double k2) {
  if (!(k1 > 0.0 && k2 > 0.0)) throw std::invalid_argument("tp1: scale factors must be > 0");
  return Problem("tp1", cube(2, -2.0, 2.0),
                 {[k1](std::span<const double> x) { return k1 * sq(x[0] - 1.0) + k1 * sq(x[1] - 1.0); },
                  [k2](std::span<const double> x) { return k2 * sq(x[0] + 1.0) + k2 * sq(x[1] + 1.0); }},
                 {6.0 * std::sqrt(2.0) * k1, 6.0 * std::sqrt(2.0) * k2});
}

// With s = x1 + x2, d = x1 - x2:
//   f1 = k1 (0.5 (sqrt(1 + s^2) + sqrt(1 + d^2 + d)) + exp(-d^2))
//   f2 = k2 (0.5 (sqrt(1 + s^2) + sqrt(1 + d^2 - d)) + exp(-d^2))
// |df/ds| <= k/2, |df/dd| <= k (1/2 + sqrt(2) e^{-1/2}); ||grad_x f|| = sqrt(2 (f_s^2 + f_d^2)).
Problem tp2(double k1, double k2) {
  if (!(k1 > 0.0 && k2 > 0.0)) throw std::invalid_argument("tp2: scale factors must be > 0");
  const double fd = 0.5 + std::sqrt(2.0) * std::exp(-0.5);
  const double unit = std::sqrt(2.0 * (0.25 + fd * fd));
  return Problem(
      "tp2", cube(2, -1.5, 1.5),
      {[k1](std::span<const double> x) {
         const double s = x[0] + x[1];
         const double d = x[0] - x[1];
         return 0.5 * k1 * (std::sqrt(1.0 + s * s) + std::sqrt(1.0 + d * d + d)) + k1 * std::exp(-d * d);
       },
       [k2](std::span<const double> x) {
         const double s = x[0] + x[1];
         const double d = x[0] - x[1];
         return 0.5 * k2 * (std::sqrt(1.0 + s * s) + std::sqrt(1.0 + d * d - d)) + k2 * std::exp(-d * d);
       }},
      {unit * k1, unit * k2});
}

Problem pe1() { return anchor_problem("pe1", {1, 1, 1}, {-1, -1, -1}, {1, -1, 1}); }

// PE1 plus a penalty |f1 + f2 - 12| / (2 sqrt 6) * ||x + e2||^2 on the first two objectives.
// On [-2,2]^3: |f1 + f2 - 12| <= 18, ||grad (f1 + f2)|| = 4||x|| <= 8 sqrt 3,
// ||x + e2||^2 <= 17, ||grad ||x + e2||^2|| <= 2 sqrt 17.
Problem pe2() {
  const Anchor a1{1, 1, 1};
  const Anchor a2{-1, -1, -1};
  const Anchor a3{1, -1, 1};
  auto penalty = [a1, a2](std::span<const double> x) {
    const double shifted = sq(x[0]) + sq(x[1] + 1.0) + sq(x[2]);
    return std::abs(dist2(x, a1) + dist2(x, a2) - 12.0) / (2.0 * std::sqrt(6.0)) * shifted;
  };
  const double L_base = 6.0 * std::sqrt(3.0);
  const double L_pen = (8.0 * std::sqrt(3.0) * 17.0 + 18.0 * 2.0 * std::sqrt(17.0)) / (2.0 * std::sqrt(6.0));
  return Problem("pe2", cube(3, -2.0, 2.0),
                 {[a1, penalty](std::span<const double> x) { return dist2(x, a1) + penalty(x); },
                  [a2, penalty](std::span<const double> x) { return dist2(x, a2) + penalty(x); },
                  [a3](std::span<const double> x) { return dist2(x, a3); }},
                 {L_base + L_pen, L_base + L_pen, L_base});
}

Problem pe3() { return anchor_problem("pe3", {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}); }

// DEB2DK (Branke, Deb, Dierolf, Osswald 2004), x in [0,1]^n:
//   g = 1 + 9/(n-1) sum_{i>=2} x_i,  r = knee_radius(x1)
//   f1 = g r sin(pi x1 / 2),  f2 = g r cos(pi x1 / 2)
Problem deb2dk(int knees, int num_vars) {
  if (knees < 1) throw std::invalid_argument("deb2dk: K must be >= 1");
  if (num_vars < 2) throw std::invalid_argument("deb2dk: needs at least 2 variables");
  const auto n = static_cast<std::size_t>(num_vars);
  const double gscale = 9.0 / static_cast<double>(n - 1);
  auto g = [gscale](std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) s += x[i];
    return 1.0 + gscale * s;
  };
  const double dx1 = 10.0 * (knee_radius_slope_max() + knee_radius_max(knees) * pi / 2.0);
  const double dxi = gscale * knee_radius_max(knees);
  const double L = std::sqrt(dx1 * dx1 + static_cast<double>(n - 1) * dxi * dxi);
  return Problem("deb2dk", cube(n, 0.0, 1.0),
                 {[g, knees](std::span<const double> x) {
                    return g(x) * knee_radius(x[0], knees) * std::sin(pi * x[0] / 2.0);
                  },
                  [g, knees](std::span<const double> x) {
                    return g(x) * knee_radius(x[0], knees) * std::cos(pi * x[0] / 2.0);
                  }},
                 {L, L});
}

// DEB3DK, x in [0,1]^n:
//   g = 1 + 9/(n-2) sum_{i>=3} x_i,  r = (knee_radius(x1) + knee_radius(x2)) / 2
//   f1 = g r s1 s2,  f2 = g r s1 c2,  f3 = g r c1   (s_i = sin(pi x_i/2), c_i = cos(pi x_i/2))
Problem deb3dk(int knees, int num_vars) {
  if (knees < 1) throw std::invalid_argument("deb3dk: K must be >= 1");
  if (num_vars < 3) throw std::invalid_argument("deb3dk: needs at least 3 variables");
  const auto n = static_cast<std::size_t>(num_vars);
  const double gscale = 9.0 / static_cast<double>(n - 2);
  auto gr = [gscale, knees](std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 2; i < x.size(); ++i) s += x[i];
    return (1.0 + gscale * s) * 0.5 * (knee_radius(x[0], knees) + knee_radius(x[1], knees));
  };
  const double dx12 = 10.0 * (knee_radius_slope_max() / 2.0 + knee_radius_max(knees) * pi / 2.0);
  const double dxi = gscale * knee_radius_max(knees);
  const double L = std::sqrt(2.0 * dx12 * dx12 + static_cast<double>(n - 2) * dxi * dxi);
  return Problem(
      "deb3dk", cube(n, 0.0, 1.0),
      {[gr](std::span<const double> x) { return gr(x) * std::sin(pi * x[0] / 2) * std::sin(pi * x[1] / 2); },
       [gr](std::span<const double> x) { return gr(x) * std::sin(pi * x[0] / 2) * std::cos(pi * x[1] / 2); },
       [gr](std::span<const double> x) { return gr(x) * std::cos(pi * x[0] / 2); }},
      {L, L, L});
}

// SRN (Srinivas & Deb 1994), x in [-20,20]^2:
//   f1 = 2 + (x1-2)^2 + (x2-1)^2,  f2 = 9 x1 - (x2-1)^2
//   225 - x1^2 - x2^2 >= 0,  3 x2 - x1 - 10 >= 0
Problem srn() {
  return Problem(
      "srn", cube(2, -20.0, 20.0),
      {[](std::span<const double> x) { return 2.0 + sq(x[0] - 2.0) + sq(x[1] - 1.0); },
       [](std::span<const double> x) { return 9.0 * x[0] - sq(x[1] - 1.0); }},
      {2.0 * std::hypot(22.0, 21.0), std::hypot(9.0, 42.0)},
      {[](std::span<const double> x) { return 225.0 - sq(x[0]) - sq(x[1]); },
       [](std::span<const double> x) { return 3.0 * x[1] - x[0] - 10.0; }},
      {2.0 * std::hypot(20.0, 20.0), std::sqrt(10.0)});
}

// CONSTR (Deb 2001), x1 in [0.1,1], x2 in [0,5]:
//   f1 = x1,  f2 = (1 + x2) / x1
//   x2 + 9 x1 - 6 >= 0,  -x2 + 9 x1 - 1 >= 0
Problem constr() {
  return Problem("constr", Box({0.1, 0.0}, {1.0, 5.0}),
                 {[](std::span<const double> x) { return x[0]; },
                  [](std::span<const double> x) { return (1.0 + x[1]) / x[0]; }},
                 {1.0, std::hypot(6.0 / 0.01, 1.0 / 0.1)},
                 {[](std::span<const double> x) { return x[1] + 9.0 * x[0] - 6.0; },
                  [](std::span<const double> x) { return -x[1] + 9.0 * x[0] - 1.0; }},
                 {std::sqrt(82.0), std::sqrt(82.0)});
}

// KITA (Kita et al. 1996), originally maximized; negated here. x in [0,7]^2:
//   f1 = x1^2 - x2,  f2 = -(x1/2 + x2 + 1)
//   13/2 - x1/6 - x2 >= 0,  15/2 - x1/2 - x2 >= 0,  30 - 5 x1 - x2 >= 0
Problem kita() {
  return Problem("kita", cube(2, 0.0, 7.0),
                 {[](std::span<const double> x) { return sq(x[0]) - x[1]; },
                  [](std::span<const double> x) { return -(0.5 * x[0] + x[1] + 1.0); }},
                 {std::hypot(14.0, 1.0), std::hypot(0.5, 1.0)},
                 {[](std::span<const double> x) { return 6.5 - x[0] / 6.0 - x[1]; },
                  [](std::span<const double> x) { return 7.5 - 0.5 * x[0] - x[1]; },
                  [](std::span<const double> x) { return 30.0 - 5.0 * x[0] - x[1]; }},
                 {std::hypot(1.0 / 6.0, 1.0), std::hypot(0.5, 1.0), std::hypot(5.0, 1.0)});
}

Problem build(const ProblemSpec& spec) {
  const auto& n = spec.name;
  if (n == "tp1") return tp1(spec.k1, spec.k2);
  if (n == "tp2") return tp2(spec.k1, spec.k2);
  if (n == "pe1") return pe1();
  if (n == "pe2") return pe2();
  if (n == "pe3") return pe3();
  if (n == "deb2dk") return deb2dk(spec.knees, spec.num_vars > 0 ? spec.num_vars : 5);
  if (n == "deb3dk") return deb3dk(spec.knees, spec.num_vars > 0 ? spec.num_vars : 3);
  if (n == "srn") return srn();
  if (n == "constr") return constr();
  if (n == "kita") return kita();
  throw std::invalid_argument("unknown problem '" + n + "'");
}

Problem build(const std::string& name) { return build(preset(name).spec); }

std::vector<Preset> presets(const std::string& problem) {
  if (problem == "tp1" || problem == "tp2") {
    return {{"default", {problem, 0.1, 10.0}, 0.5, 0.05, {}},
            {"unscaled", {problem, 1.0, 1.0}, 0.05, 0.05, {}}};
  }
  if (problem == "deb2dk") {
    return {{"default", {problem, 1, 1, 4, 5}, 0.0015, 0.00015, {}},
            {"quick", {problem, 1, 1, 4, 5}, 1.2, 0.3, {}}};
  }
  if (problem == "deb3dk") {
    return {{"default", {problem, 1, 1, 1, 3}, 0.006, 0.008, {}},
            {"quick", {problem, 1, 1, 1, 3}, 1.0, 0.1, {}}};
  }
  if (problem == "pe3") {
    Preset p{"default", {problem}, 0.15, 0.1, {}};
    p.directions = {{0.1, 0.5, 0.5}, {0.5, 0.1, 0.5}, {0.5, 0.5, 0.1}};
    return {p};
  }
  if (problem == "pe1") return {{"default", {problem}, 0.15, 0.1, {}}};
  // penalty terms make L large, the normalized gap shrinks slowly
  if (problem == "pe2") return {{"default", {problem}, 0.5, 0.1, {}}};
  if (problem == "srn" || problem == "constr" || problem == "kita") {
    return {{"default", {problem}, 0.05, 0.05, {}}};
  }
  throw std::invalid_argument("unknown problem: " + problem);
}

Preset preset(const std::string& problem, const std::string& preset_name) {
  for (auto& p : presets(problem)) {
    if (p.name == preset_name) return p;
  }
  throw std::invalid_argument("unknown preset '" + preset_name + "' for problem '" + problem + "'");
}

}  // namespace conebb::problems
