#include "rhspaces/spaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace rhspaces {
namespace {

template <typename T>
Matrix<T> embed_lower_right(const Matrix<T>& inner, std::size_t removed) {
  Matrix<T> out(inner.rows() + removed, inner.cols() + removed);
  set_block(out, removed, removed, inner);
  return out;
}

template <typename T>
MatrixSpace<T> odd_rank_space(std::size_t n, unsigned s) {
  const std::size_t k = n - s;
  auto line = std::make_shared<MatrixSpace<T>>();
  line->n = k;
  line->rank = k;
  line->basis.push_back(Matrix<T>::identity(k));
  line->certificate = SquareIdentity{};
  if (s == 0) return *line;

  MatrixSpace<T> out;
  out.n = n;
  out.rank = k;
  out.basis.push_back(embed_lower_right(line->basis.front(), s));
  out.certificate = Padding<T>{s, line};
  return out;
}

template <typename T>
MatrixSpace<T> block_square_space(std::size_t n) {
  const std::size_t m = n / 2;
  const AnticommutingFamily<T> family = build_family<T>(m);
  const Matrix<T> id = Matrix<T>::identity(m);

  MatrixSpace<T> out;
  out.n = n;
  out.rank = n;
  Matrix<T> diagonal(n, n);
  set_block(diagonal, 0, 0, id);
  set_block(diagonal, m, m, -id);
  out.basis.push_back(std::move(diagonal));
  for (const Matrix<T>& j : family.span_basis()) {
    Matrix<T> g(n, n);
    set_block(g, 0, m, j);
    set_block(g, m, 0, conjugate_transpose(j));
    out.basis.push_back(std::move(g));
  }
  out.certificate = SquareIdentity{};
  return out;
}

template <typename T>
MatrixSpace<T> row_deletion_space(std::size_t n, unsigned s) {
  const std::size_t q = (n + s) / 2;
  const std::size_t p = q - s;
  const AnticommutingFamily<T> family = build_family<T>(q);

  MatrixSpace<T> out;
  out.n = n;
  out.rank = 2 * p;
  for (const Matrix<T>& a : family.span_basis()) {
    const Matrix<T> b = block(a, 0, 0, p, q);
    Matrix<T> g(n, n);
    set_block(g, 0, p, b);
    set_block(g, p, 0, conjugate_transpose(b));
    out.basis.push_back(std::move(g));
  }
  out.certificate = FactorIdentity{p};
  return out;
}

BoundQuery query_of(Field field, std::size_t n, unsigned s) {
  return BoundQuery{field, Integer(static_cast<unsigned long>(n)), s};
}

}  // namespace

std::uint64_t dimension_formula(const BoundQuery& query) {
  query.validate();
  const Integer k = query.rank();
  if (mpz_odd_p(k.get_mpz_t())) return 1;
  if (query.s == 0) return rho_field(HalfInteger::half_of(k), query.field) + 1;
  const BoundQuery smaller{query.field, query.n - 1, query.s - 1};
  const Integer q = (query.n + query.s) / 2;
  return std::max(dimension_formula(smaller), rho_field(HalfInteger(q), query.field));
}

template <typename T>
MatrixSpace<T> build_space(std::size_t n, unsigned s) {
  constexpr Field field = ScalarTraits<T>::field;
  query_of(field, n, s).validate();
  if ((n - s) % 2 == 1) return odd_rank_space<T>(n, s);
  if (s == 0) return block_square_space<T>(n);

  const std::uint64_t padded_dim = dimension_formula(query_of(field, n - 1, s - 1));
  const std::uint64_t deleted_dim = rho_field(HalfInteger(static_cast<long>((n + s) / 2)), field);
  if (deleted_dim > padded_dim) return row_deletion_space<T>(n, s);

  auto inner = std::make_shared<MatrixSpace<T>>(build_space<T>(n - 1, s - 1));
  MatrixSpace<T> out;
  out.n = n;
  out.rank = inner->rank;
  for (const Matrix<T>& g : inner->basis) out.basis.push_back(embed_lower_right(g, 1));
  out.certificate = Padding<T>{1, std::move(inner)};
  return out;
}

AnySpace build_space(const BoundQuery& query) {
  query.validate();
  if (!query.n.fits_ulong_p()) throw std::length_error("matrix size too large to construct");
  const std::size_t n = query.n.get_ui();
  if (query.field == Field::real) return build_space<Rational>(n, query.s);
  return build_space<GaussianRational>(n, query.s);
}

template RealSpace build_space<Rational>(std::size_t, unsigned);
template ComplexSpace build_space<GaussianRational>(std::size_t, unsigned);

}  // namespace rhspaces
