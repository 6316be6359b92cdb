#include <cmath>

#include "copack/errors.hpp"
#include "copack/lp.hpp"
#include "copack/rng.hpp"
#include "copack/symmat.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace copack;

TEST_SUITE_BEGIN("core_math");

TEST_CASE("eig_sym: identity eigenvalues are all one") {
  Symmat id(3);
  for (int i = 0; i < 3; ++i) id.set(i, i, 1.0);
  auto d = eig_sym(id);
  for (double v : d.eigenvalues) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eig_sym: diagonal matrix returns sorted eigenvalues with axis vectors") {
  Symmat m(2);
  m.set(0, 0, -1.0);
  m.set(1, 1, 2.0);
  auto d = eig_sym(m);
  CHECK(d.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(d.eigenvalues[1] == doctest::Approx(2.0));
  CHECK(std::abs(d.vec(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(d.vec(1, 1)) == doctest::Approx(1.0));
}

TEST_CASE("eig_sym: random 6x6 reconstruction within 1e-10") {
  Rng rng(7);
  auto m = oracles::random_symmetric(6, rng);
  auto d = eig_sym(m);
  double err = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      double rij = 0.0;
      for (int k = 0; k < 6; ++k) rij += d.vec(i, k) * d.eigenvalues[k] * d.vec(j, k);
      err = std::max(err, std::abs(rij - m(i, j)));
    }
  CHECK(err <= 1e-10 * (1.0 + m.max_abs()));
}

TEST_CASE("eig_sym: eigenvalue sum equals trace; shift moves the spectrum") {
  Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_int(7));
    auto m = oracles::random_symmetric(n, rng);
    auto d = eig_sym(m);
    double sum = 0.0;
    for (double v : d.eigenvalues) sum += v;
    CHECK(sum == doctest::Approx(m.trace()).epsilon(1e-9));

    const double t = rng.uniform(-2.0, 2.0);
    Symmat shifted = m;
    for (int i = 0; i < n; ++i) shifted.set(i, i, m(i, i) + t);
    auto ds = eig_sym(shifted);
    for (int k = 0; k < n; ++k)
      CHECK(ds.eigenvalues[k] == doctest::Approx(d.eigenvalues[k] + t).epsilon(1e-9));
  }
}

TEST_CASE("rng: seeded streams are pinned (seeded reports must not drift)") {
  Rng r(42);
  CHECK(r.next() == 1546998764402558742ULL);
  CHECK(r.next() == 6990951692964543102ULL);
  CHECK(r.next() == 12544586762248559009ULL);
  CHECK(r.uniform01() == doctest::Approx(0.92469294532538759).epsilon(1e-15));
  CHECK(r.gaussian() == doctest::Approx(0.015871293375984964).epsilon(1e-12));
  CHECK(mix_seed(42, 7, 3) == 4446455778798456924ULL);

  Rng u(7);
  auto v = u.unit_vector(5);
  double norm2 = 0.0;
  for (double c : v) norm2 += c * c;
  CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("symmat basics: symmetry enforced, asymmetry rejected, hashing stable") {
  CHECK_THROWS_AS(Symmat::from_rows({{1.0, 2.0}, {3.0, 4.0}}, 1e-12), std::invalid_argument);
  auto m = Symmat::from_rows({{1.0, 2.0}, {2.0, 4.0}});
  CHECK(m(0, 1) == m(1, 0));
  CHECK(m.content_hash_hex().size() == 16);
  CHECK(m.content_hash() == Symmat::from_rows({{1.0, 2.0}, {2.0, 4.0}}).content_hash());
}

TEST_CASE("solve_lp: one variable above a lower-bound row") {
  LpProblem p(1);
  p.objective = {1.0};
  p.add_row({1.0}, Sense::Ge, 3.0);
  auto s = solve_lp(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.x[0] == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(s.objective == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(s.row_duals[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(s.dual_objective == doctest::Approx(3.0).epsilon(1e-7));
}

TEST_CASE("solve_lp: unbounded direction detected") {
  LpProblem p(1);
  p.objective = {-1.0};
  p.lower[0] = 0.0;
  auto s = solve_lp(p);
  CHECK(s.status == LpStatus::Unbounded);
}

TEST_CASE("solve_lp: infeasible pair yields a positive Farkas gap") {
  LpProblem p(1);
  p.objective = {1.0};
  p.add_row({1.0}, Sense::Ge, 2.0);
  p.add_row({1.0}, Sense::Le, 1.0);
  auto s = solve_lp(p);
  REQUIRE(s.status == LpStatus::Infeasible);
  REQUIRE(s.farkas.size() == 2);
  CHECK(s.farkas_gap > 1e-9);
  // Multiplier signs follow the row senses.
  CHECK(s.farkas[0] >= -1e-12);
  CHECK(s.farkas[1] <= 1e-12);
}

TEST_CASE("solve_lp: equality rows and free variables") {
  // min x + y s.t. x + y = 2, x - y >= -4
  LpProblem p(2);
  p.objective = {1.0, 1.0};
  p.add_row({1.0, 1.0}, Sense::Eq, 2.0);
  p.add_row({1.0, -1.0}, Sense::Ge, -4.0);
  auto s = solve_lp(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(s.x[0] + s.x[1] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(s.dual_objective == doctest::Approx(s.objective).epsilon(1e-7));
}

namespace {

LpProblem random_feasible_lp(int n, int m, Rng& rng) {
  // Constraints a.x <= b built around a known interior point, so the
  // instance is feasible by construction; bounded via box bounds.
  LpProblem p(n);
  std::vector<double> interior(n);
  for (auto& v : interior) v = rng.uniform(-1.0, 1.0);
  for (int j = 0; j < n; ++j) {
    p.objective[j] = rng.uniform(-1.0, 1.0);
    p.lower[j] = -4.0;
    p.upper[j] = 4.0;
  }
  for (int i = 0; i < m; ++i) {
    std::vector<double> a(n);
    double ax = 0.0;
    for (int j = 0; j < n; ++j) {
      a[j] = rng.uniform(-1.0, 1.0);
      ax += a[j] * interior[j];
    }
    p.add_row(std::move(a), Sense::Le, ax + rng.uniform(0.1, 1.5));
  }
  return p;
}

}  // namespace

TEST_CASE("solve_lp: random instances match vertex enumeration") {
  Rng rng(1234);
  // One full 8-var/12-row instance (the enumeration is combinatorial), plus a
  // batch of smaller ones for breadth.
  {
    LpProblem p = random_feasible_lp(8, 12, rng);
    auto s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    bool found = false;
    const double oracle = oracles::lp_vertex_enumeration(p, &found);
    REQUIRE(found);
    CHECK(s.objective == doctest::Approx(oracle).epsilon(1e-7));
  }
  for (int trial = 0; trial < 10; ++trial) {
    LpProblem p = random_feasible_lp(4 + trial % 2, 8, rng);
    auto s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    bool found = false;
    const double oracle = oracles::lp_vertex_enumeration(p, &found);
    REQUIRE(found);
    CHECK(s.objective == doctest::Approx(oracle).epsilon(1e-7));
  }
}

TEST_CASE("solve_lp: objective scaling keeps the argmin and scales the value") {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    LpProblem p = random_feasible_lp(5, 8, rng);
    auto s1 = solve_lp(p);
    REQUIRE(s1.status == LpStatus::Optimal);
    const double lambda = rng.uniform(0.5, 4.0);
    LpProblem q = p;
    for (auto& c : q.objective) c *= lambda;
    auto s2 = solve_lp(q);
    REQUIRE(s2.status == LpStatus::Optimal);
    CHECK(s2.objective == doctest::Approx(lambda * s1.objective).epsilon(1e-9));
    for (int j = 0; j < p.n_vars(); ++j)
      CHECK(s2.x[j] == doctest::Approx(s1.x[j]).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("solve_lp: strong duality holds on random optimal instances") {
  Rng rng(4321);
  for (int trial = 0; trial < 30; ++trial) {
    LpProblem p = random_feasible_lp(4 + trial % 5, 6 + trial % 7, rng);
    auto s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(std::abs(s.objective - s.dual_objective) <= 1e-7 * (1.0 + std::abs(s.objective)));
    CHECK(s.feasibility_residual <= 1e-8);
    CHECK(s.complementary_residual <= 1e-7);
  }
}

TEST_CASE("solve_lp: dual route agrees with the direct tableau") {
  Rng rng(555);
  for (int trial = 0; trial < 15; ++trial) {
    LpProblem p = random_feasible_lp(3 + trial % 4, 5 + trial % 9, rng);
    auto direct = detail::solve_lp_routed(p, detail::LpRoute::Direct);
    auto dual = detail::solve_lp_routed(p, detail::LpRoute::Dual);
    REQUIRE(direct.status == LpStatus::Optimal);
    REQUIRE(dual.status == LpStatus::Optimal);
    CHECK(dual.objective == doctest::Approx(direct.objective).epsilon(1e-7));
    CHECK(dual.feasibility_residual <= 1e-8);
    CHECK(dual.complementary_residual <= 1e-7);
  }
}

TEST_CASE("solve_lp: tall problems route through the dual automatically") {
  // 600 rows, 3 vars: x >= c_i rows; optimum at the largest c_i.
  Rng rng(777);
  LpProblem p(3);
  p.objective = {1.0, 1.0, 1.0};
  double worst = -kNoBound;
  for (int i = 0; i < 600; ++i) {
    const double c = rng.uniform(-1.0, 1.0);
    worst = std::max(worst, c);
    p.add_row({1.0, 0.0, 0.0}, Sense::Ge, c);
  }
  p.lower[1] = 0.0;
  p.lower[2] = -1.0;
  auto s = solve_lp(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.used_dual_form);
  CHECK(s.objective == doctest::Approx(worst + 0.0 - 1.0).epsilon(1e-8));
}

TEST_CASE("solve_lp: degenerate instance still terminates (Bland fallback ready)") {
  // Classic highly degenerate cube corner: many redundant rows through the
  // same vertex.
  LpProblem p(3);
  p.objective = {-0.75, 150.0, -0.02};
  p.lower = {0.0, 0.0, 0.0};
  p.upper = {kNoBound, kNoBound, 1.0};
  p.add_row({0.25, -60.0, -0.04}, Sense::Le, 0.0);
  p.add_row({0.5, -90.0, -0.02}, Sense::Le, 0.0);
  p.add_row({0.25, -60.0, -0.04}, Sense::Le, 0.0);
  p.add_row({0.5, -90.0, -0.02}, Sense::Le, 0.0);
  auto s = solve_lp(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == doctest::Approx(-0.05).epsilon(1e-8));
}

TEST_CASE("solve_lp: rejects malformed input") {
  LpProblem p(2);
  p.add_row({1.0}, Sense::Ge, 0.0);  // wrong row length
  CHECK_THROWS_AS(solve_lp(p), std::invalid_argument);
}

TEST_CASE("solve_lp: dual route handles equality rows and free variables") {
  // min x + 2y - z  s.t.  x + y + z = 3,  x - y >= -1,  z <= 2,  y >= 0.
  LpProblem p(3);
  p.objective = {1.0, 2.0, -1.0};
  p.lower[1] = 0.0;
  p.upper[2] = 2.0;
  p.add_row({1.0, 1.0, 1.0}, Sense::Eq, 3.0);
  p.add_row({1.0, -1.0, 0.0}, Sense::Ge, -1.0);
  auto direct = detail::solve_lp_routed(p, detail::LpRoute::Direct);
  auto dual = detail::solve_lp_routed(p, detail::LpRoute::Dual);
  REQUIRE(direct.status == LpStatus::Optimal);
  REQUIRE(dual.status == LpStatus::Optimal);
  CHECK(dual.objective == doctest::Approx(direct.objective).epsilon(1e-9));
  CHECK(dual.objective == doctest::Approx(-1.0).epsilon(1e-9));  // x=1, y=0, z=2
  CHECK(dual.feasibility_residual <= 1e-8);
  CHECK(dual.complementary_residual <= 1e-7);
  // Equality row recombines into an interpretable (free-sign) dual.
  CHECK(dual.row_duals[0] == doctest::Approx(direct.row_duals[0]).epsilon(1e-7).scale(1.0));
}

TEST_CASE("solve_lp: dual route certifies infeasibility with a Farkas ray") {
  // Tall infeasible instance: x <= -1 on a long grid, x >= 0 bound.
  LpProblem p(2);
  p.objective = {1.0, 0.0};
  p.lower = {0.0, 0.0};
  for (int i = 0; i < 400; ++i) p.add_row({1.0, 0.1}, Sense::Le, -1.0 - 0.001 * i);
  auto s = solve_lp(p);
  REQUIRE(s.status == LpStatus::Infeasible);
  CHECK(s.used_dual_form);
  CHECK(s.farkas_gap > 1e-9);
}

TEST_SUITE_END();
