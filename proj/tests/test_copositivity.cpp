#include <cmath>

#include "copack/copositivity.hpp"
#include "copack/errors.hpp"
#include "copack/kernels.hpp"
#include "copack/rng.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace copack;

namespace {

Symmat horn_matrix() {
  // Circulant (1, -1, 1, 1, -1): copositive, not psd, not entrywise
  // nonnegative.
  Symmat h(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j) {
      const int dist = std::min(j - i, 5 - (j - i));
      h.set(i, j, dist == 1 ? -1.0 : 1.0);
    }
  return h;
}

}  // namespace

TEST_SUITE_BEGIN("copositivity");

TEST_CASE("exact: identity is copositive with a certificate") {
  Symmat id(3);
  for (int i = 0; i < 3; ++i) id.set(i, i, 1.0);
  auto res = is_copositive_exact(id);
  CHECK(res.verdict == CopVerdict::Copositive);
  CHECK(!res.heuristic);
  REQUIRE(res.certificate.has_value());
  CHECK(!res.witness.has_value());
}

TEST_CASE("exact: 2x2 with dominant negative off-diagonal is refuted by (1,1)") {
  auto k = Symmat::from_rows({{1.0, -2.0}, {-2.0, 1.0}});
  auto res = is_copositive_exact(k);
  REQUIRE(res.verdict == CopVerdict::NotCopositive);
  REQUIRE(res.witness.has_value());
  const auto& w = *res.witness;
  CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(w[1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(res.witness_value == doctest::Approx(-2.0).epsilon(1e-9));
}

TEST_CASE("exact: 2x2 closed-form criterion on random matrices") {
  // Copositive iff diagonal nonnegative and k01 >= -sqrt(k00 k11).
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    Symmat k(2);
    k.set(0, 0, rng.uniform(-0.2, 1.5));
    k.set(1, 1, rng.uniform(-0.2, 1.5));
    k.set(0, 1, rng.uniform(-1.5, 1.5));
    bool expect = k(0, 0) >= 0 && k(1, 1) >= 0 &&
                  (k(0, 1) >= 0 || k(0, 1) * k(0, 1) <= k(0, 0) * k(1, 1));
    // Skip razor-edge instances where the closed form itself is ambiguous.
    if (k(0, 0) >= 0 && k(1, 1) >= 0 && k(0, 1) < 0 &&
        std::abs(k(0, 1) * k(0, 1) - k(0, 0) * k(1, 1)) < 1e-9)
      continue;
    auto res = is_copositive_exact(k);
    CHECK((res.verdict == CopVerdict::Copositive) == expect);
    if (res.verdict == CopVerdict::NotCopositive) {
      REQUIRE(res.witness.has_value());
      for (double v : *res.witness) CHECK(v >= 0.0);
      CHECK(res.witness_value < -1e-10);
      CHECK(k.quad_form(*res.witness) == doctest::Approx(res.witness_value));
    }
  }
}

TEST_CASE("exact: Horn matrix is copositive but neither psd nor nonnegative") {
  auto h = horn_matrix();
  auto res = is_copositive_exact(h);
  CHECK(res.verdict == CopVerdict::Copositive);
  auto eig = eig_sym(h);
  CHECK(eig.eigenvalues.front() < -1e-10);  // not psd
  bool has_negative_entry = false;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (h(i, j) < 0) has_negative_entry = true;
  CHECK(has_negative_entry);
  // Cross-check: fine simplex grid finds no negative value.
  auto grid = refute_copositive_grid(h, 200);
  CHECK(grid.verdict == CopVerdict::Copositive);
  CHECK(grid.heuristic);
}

TEST_CASE("exact: negative definite blocks are caught despite degenerate spectra") {
  // -I has a fully degenerate eigenspace; witnesses come from 1x1 blocks or
  // the span search.
  Symmat k(2);
  k.set(0, 0, -1.0);
  k.set(1, 1, -1.0);
  auto res = is_copositive_exact(k);
  REQUIRE(res.verdict == CopVerdict::NotCopositive);
  CHECK(res.witness_value < -1e-10);
}

TEST_CASE("exact: size cap enforced") {
  Symmat big(19);
  for (int i = 0; i < 19; ++i) big.set(i, i, 1.0);
  CHECK_THROWS_AS(is_copositive_exact(big), SizeCapError);
}

TEST_CASE("exact: psd implies copositive (100 random instances)") {
  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_int(6));
    auto res = is_copositive_exact(oracles::random_psd(n, rng));
    CHECK(res.verdict == CopVerdict::Copositive);
  }
}

TEST_CASE("exact: entrywise nonnegative implies copositive (100 random instances)") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_int(6));
    auto res = is_copositive_exact(oracles::random_nonnegative(n, rng));
    CHECK(res.verdict == CopVerdict::Copositive);
  }
}

TEST_CASE("exact: adding a nonnegative diagonal preserves copositivity") {
  Rng rng(43);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng.uniform_int(3));
    auto k = oracles::random_symmetric(n, rng);
    if (is_copositive_exact(k).verdict != CopVerdict::Copositive) continue;
    ++checked;
    Symmat shifted = k;
    for (int i = 0; i < n; ++i) shifted.set(i, i, k(i, i) + rng.uniform(0.0, 2.0));
    CHECK(is_copositive_exact(shifted).verdict == CopVerdict::Copositive);
  }
  CHECK(checked > 0);
}

TEST_CASE("grid refuter: identity and the antisymmetric-free 2x2") {
  Symmat id(3);
  for (int i = 0; i < 3; ++i) id.set(i, i, 1.0);
  auto res = refute_copositive_grid(id, 4);
  CHECK(res.verdict == CopVerdict::Copositive);
  CHECK(res.heuristic);

  auto k = Symmat::from_rows({{0.0, -1.0}, {-1.0, 0.0}});
  auto ref = refute_copositive_grid(k, 2);
  REQUIRE(ref.verdict == CopVerdict::NotCopositive);
  REQUIRE(ref.witness.has_value());
  CHECK((*ref.witness)[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK((*ref.witness)[1] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(ref.witness_value == doctest::Approx(-0.5).epsilon(1e-9));
}

TEST_CASE("grid refuter: rejects bad resolution") {
  Symmat id(2);
  CHECK_THROWS_AS(refute_copositive_grid(id, 0), std::invalid_argument);
}

TEST_CASE("grid vs exact: 200 random 5x5 matrices never contradict") {
  Rng rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    auto k = oracles::random_symmetric(5, rng);
    auto exact = is_copositive_exact(k);
    auto grid = refute_copositive_grid(k, 50);
    if (grid.verdict == CopVerdict::NotCopositive) {
      // The grid witness is hard evidence; the exact test must agree.
      CHECK(exact.verdict == CopVerdict::NotCopositive);
    }
    if (exact.verdict == CopVerdict::NotCopositive) {
      CHECK(exact.witness_value < -1e-10);
    }
  }
}

TEST_CASE("separate_sphere: nonnegative Jacobi coefficients admit no cut") {
  JacobiBasis b(3, 4);
  std::vector<double> g = {0.2, 0.0, 0.5, 0.1, 0.4};
  PolyKernel kernel(3, monomial_from_jacobi(b, g));
  auto cut = separate_sphere(kernel, 4, 8, 123);
  CHECK(!cut.has_value());
}

TEST_CASE("separate_sphere: the linear kernel has minimum energy zero") {
  PolyKernel kernel(3, {0.0, 1.0});
  for (int n : {2, 3, 5}) {
    auto cut = separate_sphere(kernel, n, 8, 7);
    CHECK(!cut.has_value());  // energy |sum x_i|^2 >= 0 never dips below -1e-7
  }
}

TEST_CASE("separate_sphere: constant negative kernel yields an immediate cut") {
  PolyKernel kernel(3, {-0.5});
  auto cut = separate_sphere(kernel, 2, 4, 3);
  REQUIRE(cut.has_value());
  CHECK(cut->energy == doctest::Approx(-2.0).epsilon(1e-9));
  CHECK(cut->config.size() == 2);
}

TEST_CASE("separate_sphere: energies are invariant under global rotation") {
  Rng rng(53);
  PolyKernel kernel(3, {0.3, -1.1, 0.25, -0.7});
  auto cut = separate_sphere(kernel, 5, 8, 11);
  REQUIRE(cut.has_value());
  const auto q = oracles::random_orthogonal(3, rng);
  std::vector<std::vector<double>> rotated;
  for (const auto& p : cut->config.points) {
    std::vector<double> rp(3, 0.0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) rp[i] += q[i][j] * p[j];
    double norm = 0.0;
    for (double v : rp) norm += v * v;
    norm = std::sqrt(norm);
    for (auto& v : rp) v /= norm;
    rotated.push_back(std::move(rp));
  }
  const double before = config_energy(kernel, cut->config);
  const double after = config_energy(kernel, PointConfig(3, rotated));
  CHECK(std::abs(before - after) <= 1e-9 * (1.0 + std::abs(before)));
  CHECK(before == doctest::Approx(cut->energy).epsilon(1e-9));
}

TEST_CASE("separate_sphere: deterministic for a fixed seed") {
  PolyKernel kernel(2, {0.1, -0.8, 0.2});
  auto a = separate_sphere(kernel, 4, 6, 99);
  auto b = separate_sphere(kernel, 4, 6, 99);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->energy == b->energy);
  for (int i = 0; i < a->config.size(); ++i)
    for (int c = 0; c < 2; ++c) CHECK(a->config.points[i][c] == b->config.points[i][c]);
}

TEST_SUITE_END();
