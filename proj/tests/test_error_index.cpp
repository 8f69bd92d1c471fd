#include "alopc/error_index.hpp"

#include <cmath>

#include "alopc/errors.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace alopc;
using testing::all_groups;
using testing::example_4x4;

TEST_SUITE_BEGIN("error_index");

TEST_CASE("consistent matrix with its ggmm vector has identity errors") {
  for (const AloGroup* g : all_groups()) {
    CAPTURE(g->name());
    Rng rng(41);
    const PcMatrix m = random_consistent_matrix(*g, 4, rng);
    const PriorityVector v = ggmm(m);
    const double e = g->identity();
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        CHECK(std::fabs(local_error(m, v, i, j) - e) <= kTol);
        CHECK(std::fabs(pair_error(m, v, i, j) - e) <= kTol);
      }
    }
    CHECK(std::fabs(global_error(m, v).global - e) <= kTol);
  }
}

TEST_CASE("example pair (1,2) against the geometric mean weights") {
  const PcMatrix m = example_4x4();
  const PriorityVector v = gmm(m);
  // Direct arithmetic: the row geometric means are 37.5^(1/4) and 3.2^(1/4),
  // and the normalization cancels in the ratio.
  const double expected = 2.5 * std::pow(3.2, 0.25) / std::pow(37.5, 0.25);
  CHECK(local_error(m, v, 0, 1) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(pair_error(m, v, 0, 1) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected > 1.0);  // already above the identity, norm keeps it
}

TEST_CASE("diagonal local error is the identity") {
  const PcMatrix m = example_4x4();
  const PriorityVector v = gmm(m);
  for (int i = 0; i < 4; ++i)
    CHECK(local_error(m, v, i, i) == doctest::Approx(1.0));
}

TEST_CASE("pair error is the norm of the local error") {
  // c_12 = 0.5 against equal weights leaves a local error of 0.5, whose
  // norm is 2.
  const PcMatrix m =
      PcMatrix::build(AloGroup::multiplicative(), {{1.0, 0.5}, {2.0, 1.0}});
  const PriorityVector v = external_vector(AloGroup::multiplicative(), {1.0, 1.0});
  CHECK(local_error(m, v, 0, 1) == doctest::Approx(0.5));
  CHECK(pair_error(m, v, 0, 1) == doctest::Approx(2.0));
}

TEST_CASE("global error: exhaustive scan agreement on the example") {
  const PcMatrix m = example_4x4();
  const PriorityVector v = gmm(m);
  const ErrorReport report = global_error(m, v);

  // Independent plain-double scan.
  double best = 0.0;
  int bi = 0, bj = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double eps = m.at(i, j) * v.weights[j] / v.weights[i];
      const double sym = std::max(eps, 1.0 / eps);
      if (sym > best) {
        best = sym;
        bi = i;
        bj = j;
      }
    }
  }
  CHECK(report.global == doctest::Approx(best).epsilon(1e-12));
  CHECK(report.argmax_i == bi);
  CHECK(report.argmax_j == bj);
  CHECK(report.global <= 2.0 + kTol);  // never above GI of this matrix
}

TEST_CASE("two-alternative matrices are reproduced exactly by ggmm") {
  for (const AloGroup* g : all_groups()) {
    Rng rng(42);
    const PcMatrix m = random_consistent_matrix(*g, 2, rng);
    const ErrorReport report = global_error(m, ggmm(m));
    CHECK(std::fabs(report.global - g->identity()) <= kTol);
  }
}

TEST_CASE("per-pair table is symmetric") {
  for (const AloGroup* g : all_groups()) {
    Rng rng(43);
    const PcMatrix m = random_perturbed_matrix(*g, 5, g->from_param(1.0), rng);
    const PriorityVector v = external_vector(*g, random_weights(*g, 5, rng));
    const ErrorReport report = global_error(m, v);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        REQUIRE(std::fabs(report.at(i, j) - report.at(j, i)) <= kTol);
  }
}

TEST_CASE("global error never drops below the identity") {
  for (const AloGroup* g : all_groups()) {
    CAPTURE(g->name());
    Rng rng(44);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = rng.uniform_int(2, 6);
      const PcMatrix m = random_perturbed_matrix(*g, n, g->from_param(1.2), rng);
      const PriorityVector v = external_vector(*g, random_weights(*g, n, rng));
      const double global = global_error(m, v).global;
      REQUIRE(global >= g->identity() - 1e-15);
      if (global <= g->identity() + 1e-9) {
        REQUIRE(m.is_consistent(1e-6));
      }
    }
  }
}

TEST_CASE("near-identity global error implies consistency") {
  for (const AloGroup* g : all_groups()) {
    Rng rng(45);
    const auto weights = random_weights(*g, 5, rng);
    const PcMatrix m = PcMatrix::from_weights(*g, weights);
    const PriorityVector v = external_vector(*g, weights);
    const double global = global_error(m, v).global;
    REQUIRE(global <= g->identity() + 1e-9);
    REQUIRE(m.is_consistent(1e-6));
  }
}

TEST_CASE("sandwich bounds") {
  SUBCASE("consistent pairs collapse to the entry") {
    for (const AloGroup* g : all_groups()) {
      Rng rng(46);
      const PcMatrix m = random_consistent_matrix(*g, 4, rng);
      const PriorityVector v = ggmm(m);
      const ErrorReport report = global_error(m, v);
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          const SandwichBounds b = lemma3_bounds(m, v, i, j, report);
          CHECK(std::fabs(b.lower - m.at(i, j)) <= 1e-6);
          CHECK(std::fabs(b.upper - m.at(i, j)) <= 1e-6);
        }
      }
    }
  }
  SUBCASE("all sixteen pairs of the example") {
    const PcMatrix m = example_4x4();
    const PriorityVector v = gmm(m);
    const ErrorReport report = global_error(m, v);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const SandwichBounds b = lemma3_bounds(m, v, i, j, report);
        REQUIRE(b.lower <= m.at(i, j) + kTol);
        REQUIRE(m.at(i, j) <= b.upper + kTol);
      }
    }
  }
  SUBCASE("random matrices with arbitrary vectors, every group") {
    for (const AloGroup* g : all_groups()) {
      CAPTURE(g->name());
      Rng rng(47);
      for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.uniform_int(2, 6);
        const PcMatrix m = random_perturbed_matrix(*g, n, g->from_param(1.0), rng);
        const PriorityVector v = external_vector(*g, random_weights(*g, n, rng));
        const ErrorReport report = global_error(m, v);
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            const SandwichBounds b = lemma3_bounds(m, v, i, j, report);
            REQUIRE(b.lower <= m.at(i, j) + kTol);
            REQUIRE(m.at(i, j) <= b.upper + kTol);
          }
        }
      }
    }
  }
}

TEST_CASE("argmax ties resolve to the lexicographically smallest pair") {
  // Equal weights on a symmetric matrix: every off-diagonal pair error ties.
  const PcMatrix m = PcMatrix::build(
      AloGroup::multiplicative(), {{1, 2, 2}, {0.5, 1, 1}, {0.5, 1, 1}});
  const PriorityVector v = external_vector(AloGroup::multiplicative(), {1, 1, 1});
  const ErrorReport report = global_error(m, v);
  CHECK(report.argmax_i == 0);
  CHECK(report.argmax_j == 1);
}

TEST_CASE("mismatched arguments are rejected") {
  const PcMatrix m = example_4x4();
  CHECK_THROWS_AS(
      global_error(m, external_vector(AloGroup::additive(), {1, 2, 3, 4})),
      MismatchError);
  CHECK_THROWS_AS(
      global_error(m, external_vector(AloGroup::multiplicative(), {1, 2, 3})),
      MismatchError);
}

TEST_SUITE_END();
