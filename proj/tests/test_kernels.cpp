#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rhspaces/kernels.hpp"
#include "rhspaces/spaces.hpp"

#include <random>

using namespace rhspaces;

TEST_CASE("kernel thread count is positive") { CHECK(kernel_threads() >= 1); }

TEST_CASE("parallel sample evaluation matches the serial reference") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (auto [n, s] : {std::pair<std::size_t, unsigned>{8, 0}, {12, 2}, {9, 1}, {7, 1}}) {
    const RealSpace w = build_space<Rational>(n, s);
    std::vector<std::vector<Rational>> coefficients(30, std::vector<Rational>(w.dimension()));
    for (auto& c : coefficients)
      for (auto& x : c) x = dist(rng);
    const auto serial = evaluate_samples<Rational>(w.basis, coefficients, true, Execution::serial);
    const auto parallel = evaluate_samples<Rational>(w.basis, coefficients, true, Execution::parallel);
    REQUIRE(serial == parallel);
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      const RealMatrix m = linear_combination<Rational>(w.basis, coefficients[i]);
      REQUIRE(serial[i].rank == exact_rank(m));
      REQUIRE(serial[i].inertia == signature(m));
    }
  }
  const ComplexSpace h = build_space<GaussianRational>(6, 0);
  std::vector<std::vector<Rational>> coefficients(20, std::vector<Rational>(h.dimension()));
  for (auto& c : coefficients)
    for (auto& x : c) x = dist(rng);
  CHECK(evaluate_samples<GaussianRational>(h.basis, coefficients, false, Execution::serial) ==
        evaluate_samples<GaussianRational>(h.basis, coefficients, false, Execution::parallel));
  CHECK_FALSE(evaluate_samples<GaussianRational>(h.basis, coefficients, false, Execution::serial)[0].inertia);
}

TEST_CASE("sample evaluation propagates errors") {
  const std::vector<RealMatrix> basis{RealMatrix{{0, 1}, {0, 0}}};
  const std::vector<std::vector<Rational>> coefficients(4, std::vector<Rational>{1});
  CHECK_THROWS_AS(evaluate_samples<Rational>(basis, coefficients, true, Execution::parallel),
                  std::invalid_argument);
}

TEST_CASE("parallel product matches the serial product") {
  std::mt19937_64 rng(8);
  for (std::size_t n : {1u, 3u, 17u, 40u}) {
    const RealMatrix a = oracle::random_integer_matrix(rng, n, n + 2, -5, 5);
    const RealMatrix b = oracle::random_integer_matrix(rng, n + 2, n, -5, 5);
    CHECK(mul_parallel(a, b) == a * b);
  }
  const ComplexMatrix k = kron(ComplexMatrix{{1, GaussianRational::imaginary_unit()}, {0, 1}}, ComplexMatrix::identity(5));
  CHECK(mul_parallel(k, k) == k * k);
  CHECK_THROWS_AS(mul_parallel(RealMatrix(2, 3), RealMatrix(2, 3)), std::invalid_argument);
}
