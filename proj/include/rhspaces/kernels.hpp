#pragma once

// Data-parallel kernels. Each kernel has a serial reference with identical
// output; the parallel variants use OpenMP when the build enables it.

#include "rhspaces/exact_linalg.hpp"

#include <optional>
#include <span>
#include <vector>

namespace rhspaces {

enum class Execution { serial, parallel };

/// Number of threads the parallel kernels may use (1 without OpenMP).
int kernel_threads();

/// Rank and, on request, inertia of one sampled combination.
struct SampleOutcome {
  std::size_t rank = 0;
  std::optional<Inertia> inertia;
  friend bool operator==(const SampleOutcome&, const SampleOutcome&) = default;
};

/// For each coefficient vector c, forms M(c) = sum_i c_i basis_i and computes its
/// exact rank (plus its signature when `with_signature`). Results are indexed
/// like `coefficients`, independently of scheduling.
template <typename T>
std::vector<SampleOutcome> evaluate_samples(std::span<const Matrix<T>> basis,
                                            std::span<const std::vector<Rational>> coefficients,
                                            bool with_signature, Execution execution);

/// Exact product with rows distributed across threads.
template <typename T>
Matrix<T> mul_parallel(const Matrix<T>& a, const Matrix<T>& b);

}  // namespace rhspaces
