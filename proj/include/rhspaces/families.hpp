#pragma once

#include "rhspaces/matrix.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rhspaces {

/// Pairwise anticommuting skew-adjoint matrices J_1..J_t of size m with J_i^2 = -I.
/// Together with the identity they span a space of matrices A(y) = y_0 I + sum y_i J_i
/// satisfying A(y)^* A(y) = |y|^2 I, so every nonzero element is invertible.
template <typename T>
struct AnticommutingFamily {
  std::size_t m = 0;
  std::vector<Matrix<T>> generators;

  static constexpr Field field = ScalarTraits<T>::field;

  std::size_t size() const { return generators.size(); }
  /// {I, J_1, ..., J_t}
  std::vector<Matrix<T>> span_basis() const;
};

using RealFamily = AnticommutingFamily<Rational>;
using ComplexFamily = AnticommutingFamily<GaussianRational>;

/// Deterministic maximal family: rho(m) - 1 real generators, rho_c(m) - 1 complex ones.
/// Throws std::domain_error for m == 0.
RealFamily build_real_family(std::size_t m);
ComplexFamily build_complex_family(std::size_t m);

template <typename T>
AnticommutingFamily<T> build_family(std::size_t m);

template <>
inline RealFamily build_family<Rational>(std::size_t m) {
  return build_real_family(m);
}
template <>
inline ComplexFamily build_family<GaussianRational>(std::size_t m) {
  return build_complex_family(m);
}

/// A(y) = y_0 I + sum_i y_i J_i. Throws std::invalid_argument unless y has t + 1 entries.
template <typename T>
Matrix<T> evaluate(const AnticommutingFamily<T>& family, std::span<const Rational> y);

/// Left multiplication by the imaginary units e_1..e_{dim-1} of the Cayley-Dickson
/// algebra of dimension dim in {1, 2, 4, 8} (reals, complexes, quaternions, octonions).
std::vector<RealMatrix> cayley_dickson_left_multiplications(std::size_t dim);

/// Empty when the family satisfies every structural identity, otherwise a
/// description of the first violated one.
template <typename T>
std::string family_violation(const AnticommutingFamily<T>& family);

}  // namespace rhspaces
