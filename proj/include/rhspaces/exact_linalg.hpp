#pragma once

#include "rhspaces/matrix.hpp"

#include <cstddef>
#include <vector>

namespace rhspaces {

/// Inertia of a self-adjoint matrix: counts of positive, negative and zero eigenvalues.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t rank() const { return positive + negative; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Rank over the fraction field. Denominators are cleared and the integer
/// (or Gaussian-integer) matrix is reduced with fraction-free Bareiss elimination.
std::size_t exact_rank(const RealMatrix& m);
std::size_t exact_rank(const ComplexMatrix& m);

/// Determinant of a square matrix, fraction-free.
Rational determinant(const RealMatrix& m);
GaussianRational determinant(const ComplexMatrix& m);

/// Coefficients of det(tI - M), leading coefficient first. Division-free
/// (Berkowitz), so it also works entry-wise over the Gaussian rationals.
std::vector<Rational> characteristic_polynomial(const RealMatrix& m);
std::vector<GaussianRational> characteristic_polynomial(const ComplexMatrix& m);

/// Exact signature of a symmetric / hermitian matrix.
///
/// Computed by symmetric fraction-free elimination: diagonal pivots only, with a
/// congruence e_i <- e_i + conj(a_ij) e_j whenever the active diagonal vanishes.
/// The pivots are the leading principal minors of a matrix congruent to the
/// input, so the negative count is the number of sign changes in 1, d_1, ..., d_r
/// (Jacobi). O(n^3). Throws std::invalid_argument for non-self-adjoint input.
Inertia signature(const RealMatrix& m);
Inertia signature(const ComplexMatrix& m);

/// Same result via the characteristic polynomial and Descartes' rule of signs,
/// which is exact because every root is real. O(n^4); kept as the reference.
Inertia signature_via_charpoly(const RealMatrix& m);
Inertia signature_via_charpoly(const ComplexMatrix& m);

}  // namespace rhspaces
