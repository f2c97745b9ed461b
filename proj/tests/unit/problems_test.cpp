#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "conebb/problems.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace conebb;

TEST_CASE("TP1 and TP2 values") {
  const Problem t1 = problems::tp1(0.1, 10.0);
  CHECK(t1.objectives_at(Vector{1, 1}) == Vector{0.0, 80.0});
  const Vector m1 = t1.objectives_at(Vector{0, 0});
  CHECK(m1[0] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(m1[1] == doctest::Approx(20.0).epsilon(1e-15));

  const Problem t2 = problems::tp2(0.1, 10.0);
  CHECK(t2.domain() == Box({-1.5, -1.5}, {1.5, 1.5}));
  const Vector m2 = t2.objectives_at(Vector{0, 0});
  CHECK(m2[0] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(m2[1] == doctest::Approx(20.0).epsilon(1e-15));
}

TEST_CASE("PE1 values") {
  const Problem p = problems::pe1();
  CHECK(p.num_objectives() == 3);
  CHECK(p.objectives_at(Vector{1, 1, 1}) == Vector{0, 12, 4});
  CHECK(p.objectives_at(Vector{-1, -1, -1})[1] == 0.0);
  CHECK(p.objectives_at(Vector{1, -1, 1})[2] == 0.0);
}

TEST_CASE("registry") {
  for (const auto& n : problems::names()) {
    const Problem p = problems::build(n);
    CHECK(p.name() == n);
    CHECK(problems::preset(n).name == "default");
    CHECK(problems::preset(n).tol_gap > 0);
    CHECK(problems::preset(n).tol_width > 0);
  }
  CHECK(problems::preset("deb2dk").tol_gap == 0.0015);
  CHECK(problems::preset("deb2dk").tol_width == 0.00015);
  CHECK(problems::preset("deb2dk").spec.knees == 4);
  CHECK(problems::build(problems::preset("deb2dk").spec).num_vars() == 5);
  CHECK(problems::preset("deb3dk").tol_gap == 0.006);
  CHECK(problems::preset("deb3dk").tol_width == 0.008);
  CHECK(problems::preset("deb3dk").spec.knees == 1);
  const auto dirs = problems::preset("pe3").directions;
  REQUIRE(dirs.size() == 3);
  CHECK(dirs[0] == std::vector<double>{0.1, 0.5, 0.5});
  CHECK(dirs[1] == std::vector<double>{0.5, 0.1, 0.5});
  CHECK(dirs[2] == std::vector<double>{0.5, 0.5, 0.1});
  CHECK(problems::build("constr").num_constraints() == 2);
  CHECK(problems::build("kita").num_constraints() == 3);
  CHECK_THROWS_AS((void)problems::build("zdt1"), std::invalid_argument);
  CHECK_THROWS_AS((void)problems::preset("tp1", "nope"), std::invalid_argument);
  CHECK_THROWS_AS((void)problems::deb2dk(0), std::invalid_argument);
}

TEST_CASE("evaluate checks the domain and is deterministic") {
  std::mt19937_64 rng(301);
  for (const auto& n : problems::names()) {
    const Problem p = problems::build(n);
    Vector out = p.domain().hi();
    out[0] += 1.0;
    CHECK_THROWS_AS((void)p.evaluate(out), std::out_of_range);
    for (int t = 0; t < 50; ++t) {
      const Vector x = test::random_point_in(rng, p.domain());
      const Evaluation a = p.evaluate(x);
      const Evaluation b = p.evaluate(x);
      CHECK(a.objectives == b.objectives);
      CHECK(a.constraints == b.constraints);
      CHECK(is_feasible(a) == (total_violation(a) == 0.0));
    }
  }
}

TEST_CASE("TP1 objectives swap under x -> -x") {
  std::mt19937_64 rng(307);
  const double k1 = 0.1, k2 = 10.0;
  const Problem p = problems::tp1(k1, k2);
  for (int t = 0; t < 1000; ++t) {
    const Vector x = test::random_point_in(rng, p.domain());
    const Vector fx = p.objectives_at(x);
    const Vector fm = p.objectives_at(Vector{-x[0], -x[1]});
    CHECK(fm[0] / k1 == doctest::Approx(fx[1] / k2).epsilon(1e-12));
    CHECK(fm[1] / k2 == doctest::Approx(fx[0] / k1).epsilon(1e-12));
  }
}

TEST_CASE("PE3 objectives permute with the coordinates; PE1 is invariant under x1 <-> x3") {
  std::mt19937_64 rng(311);
  const Problem p3 = problems::pe3();
  const Problem p1 = problems::pe1();
  for (int t = 0; t < 1000; ++t) {
    const Vector x = test::random_point_in(rng, p3.domain());
    const Vector f = p3.objectives_at(x);
    // a^(i) = e - 2 e_i, so permuting coordinates permutes anchors the same way
    std::array<int, 3> perm{0, 1, 2};
    do {
      Vector px(3);
      for (int i = 0; i < 3; ++i) px[perm[i]] = x[i];
      const Vector g = p3.objectives_at(px);
      for (int i = 0; i < 3; ++i) CHECK(g[perm[i]] == doctest::Approx(f[i]).epsilon(1e-12));
    } while (std::next_permutation(perm.begin(), perm.end()));

    const Vector s{x[2], x[1], x[0]};
    const Vector a = p1.objectives_at(x);
    const Vector b = p1.objectives_at(s);
    for (int i = 0; i < 3; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
  }
}

TEST_CASE("DEB2DK with K=4 has four convex bulges along its front") {
  const Problem p = problems::deb2dk(4, 5);
  const int n = 20001;
  std::vector<Vector> front;
  for (int i = 0; i < n; ++i) {
    Vector x(5, 0.0);  // g = 1 on the front
    x[0] = static_cast<double>(i) / (n - 1);
    front.push_back(p.objectives_at(x));
  }
  std::vector<int> runs;
  for (int i = 1; i + 1 < n; ++i) {
    const double ax = front[i][0] - front[i - 1][0], ay = front[i][1] - front[i - 1][1];
    const double bx = front[i + 1][0] - front[i][0], by = front[i + 1][1] - front[i][1];
    const int s = ax * by - ay * bx > 0 ? 1 : -1;
    if (runs.empty() || runs.back() != s) runs.push_back(s);
  }
  CHECK(runs.size() - 1 == 8);
  CHECK(std::count(runs.begin(), runs.end(), 1) == 4);
}

TEST_CASE("constrained problems have feasible and infeasible regions") {
  std::mt19937_64 rng(313);
  for (const char* n : {"srn", "constr", "kita"}) {
    const Problem p = problems::build(n);
    int feas = 0;
    for (int t = 0; t < 2000; ++t) feas += is_feasible(p.evaluate(test::random_point_in(rng, p.domain())));
    CHECK_MESSAGE(feas > 0, n);
    CHECK_MESSAGE(feas < 2000, n);
  }
}
