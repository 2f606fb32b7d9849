#pragma once

#include "rhspaces/classifier.hpp"
#include "rhspaces/families.hpp"

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

namespace rhspaces {

template <typename T>
struct MatrixSpace;

/// G_i G_j + G_j G_i = 2 delta_ij I: every nonzero M(v) squares to |v|^2 I, so has rank n.
struct SquareIdentity {
  friend bool operator==(const SquareIdentity&, const SquareIdentity&) = default;
};

/// G_i = [[0, B_i], [B_i^*, 0]] with p x (n - p) blocks and
/// B_i B_j^* + B_j B_i^* = 2 delta_ij I_p: rank M(v) = 2 rank B(v) = 2p.
struct FactorIdentity {
  std::size_t p = 0;
  friend bool operator==(const FactorIdentity&, const FactorIdentity&) = default;
};

/// G_i = diag(0_removed, inner.G_i) with the inner space certified on its own.
template <typename T>
struct Padding {
  std::size_t removed = 0;
  std::shared_ptr<const MatrixSpace<T>> inner;
};

/// Spaces imported without a certificate.
struct MissingCertificate {};

template <typename T>
using Certificate = std::variant<MissingCertificate, SquareIdentity, FactorIdentity, Padding<T>>;

/// Real-linear span of self-adjoint n x n matrices whose nonzero elements are
/// claimed to have rank `rank`.
template <typename T>
struct MatrixSpace {
  static constexpr Field field = ScalarTraits<T>::field;

  std::size_t n = 0;
  std::size_t rank = 0;
  std::vector<Matrix<T>> basis;
  Certificate<T> certificate;

  std::size_t dimension() const { return basis.size(); }
};

using RealSpace = MatrixSpace<Rational>;
using ComplexSpace = MatrixSpace<GaussianRational>;
using AnySpace = std::variant<RealSpace, ComplexSpace>;

/// The largest explicit constant-rank space for the query:
///  s = 0, even n: [[xI, A(y)], [A(y)^*, -xI]] over the family on n/2 (square identity);
///  s >= 1: the better of zero-padding build_space(n-1, s-1) and
///          [[0, B], [B^*, 0]] with B the family on (n+s)/2 minus its last s rows
///          (factor identity); ties go to padding;
///  odd rank k: the line through diag(0, ..., 0, 1, ..., 1) with k ones.
/// Throws std::domain_error for queries outside the classifier's range, and
/// std::length_error when n does not fit in memory-sized integers.
template <typename T>
MatrixSpace<T> build_space(std::size_t n, unsigned s);

AnySpace build_space(const BoundQuery& query);

/// Dimension build_space would produce, computed without building matrices.
std::uint64_t dimension_formula(const BoundQuery& query);

}  // namespace rhspaces
