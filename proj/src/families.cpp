#include "rhspaces/families.hpp"

#include "rhspaces/rh_core.hpp"

#include <stdexcept>

namespace rhspaces {
namespace {

using Octet = std::vector<long>;

Octet cd_conj(const Octet& x) {
  if (x.size() == 1) return x;
  const std::size_t h = x.size() / 2;
  Octet a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  Octet out = cd_conj(a);
  for (long v : b) out.push_back(-v);
  return out;
}

// (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
Octet cd_mul(const Octet& x, const Octet& y) {
  if (x.size() == 1) return {x[0] * y[0]};
  const std::size_t h = x.size() / 2;
  const Octet a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  const Octet c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  const Octet ac = cd_mul(a, c), db = cd_mul(cd_conj(d), b);
  const Octet da = cd_mul(d, a), bc = cd_mul(b, cd_conj(c));
  Octet out(x.size());
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = ac[i] - db[i];
    out[h + i] = da[i] + bc[i];
  }
  return out;
}

RealMatrix rotation() { return RealMatrix{{0, -1}, {1, 0}}; }
RealMatrix reflection() { return RealMatrix{{1, 0}, {0, -1}}; }

template <typename T>
Matrix<T> product(const std::vector<Matrix<T>>& factors) {
  Matrix<T> out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = mul(out, factors[i]);
  return out;
}

// Eight anticommuting complex structures on R^16 and their product omega,
// which is symmetric, squares to I and anticommutes with each of them.
struct PeriodicityBlock {
  std::vector<RealMatrix> structures;
  RealMatrix omega;
};

PeriodicityBlock make_periodicity_block() {
  PeriodicityBlock block;
  for (const RealMatrix& o : cayley_dickson_left_multiplications(8)) {
    block.structures.push_back(kron(o, reflection()));
  }
  block.structures.push_back(kron(RealMatrix::identity(8), rotation()));
  block.omega = product(block.structures);

  const RealMatrix id = RealMatrix::identity(16);
  if (!(mul(block.omega, block.omega) == id) || !(transpose(block.omega) == block.omega)) {
    throw std::logic_error("periodicity element is not a symmetric involution");
  }
  for (const RealMatrix& e : block.structures) {
    if (!(mul(block.omega, e) == -mul(e, block.omega))) {
      throw std::logic_error("periodicity element fails to anticommute");
    }
  }
  return block;
}

template <typename T>
std::vector<Matrix<T>> tensor_identity(std::vector<Matrix<T>> gens, std::size_t u) {
  if (u == 1) return gens;
  const Matrix<T> id = Matrix<T>::identity(u);
  for (Matrix<T>& g : gens) g = kron(g, id);
  return gens;
}

ComplexMatrix kron_power(const ComplexMatrix& a, std::size_t times) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (std::size_t i = 0; i < times; ++i) out = kron(out, a);
  return out;
}

template <typename T>
bool entries_allowed(const Matrix<T>& m) {
  for (const T& x : m.data()) {
    if constexpr (std::is_same_v<T, Rational>) {
      if (x != 0 && x != 1 && x != -1) return false;
    } else {
      const bool real_unit = (x.re == 1 || x.re == -1) && x.im == 0;
      const bool imag_unit = (x.im == 1 || x.im == -1) && x.re == 0;
      if (!is_zero(x) && !real_unit && !imag_unit) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<RealMatrix> cayley_dickson_left_multiplications(std::size_t dim) {
  if (dim != 1 && dim != 2 && dim != 4 && dim != 8) {
    throw std::invalid_argument("Cayley-Dickson dimension must be 1, 2, 4 or 8");
  }
  std::vector<RealMatrix> out;
  for (std::size_t unit = 1; unit < dim; ++unit) {
    Octet e(dim, 0);
    e[unit] = 1;
    RealMatrix left(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      Octet ej(dim, 0);
      ej[j] = 1;
      const Octet column = cd_mul(e, ej);
      for (std::size_t i = 0; i < dim; ++i) left(i, j) = column[i];
    }
    out.push_back(std::move(left));
  }
  return out;
}

RealFamily build_real_family(std::size_t m) {
  if (m == 0) throw std::domain_error("family size m must be positive");
  const DyadicFactorization f = factor_dyadic(Integer(static_cast<unsigned long>(m)));
  std::size_t q = std::size_t{1} << f.c;
  std::vector<RealMatrix> gens = cayley_dickson_left_multiplications(q);
  if (f.d > 0) {
    const PeriodicityBlock block = make_periodicity_block();
    for (std::uint64_t step = 0; step < f.d; ++step) {
      std::vector<RealMatrix> next;
      const RealMatrix id = RealMatrix::identity(q);
      for (const RealMatrix& e : block.structures) next.push_back(kron(e, id));
      for (const RealMatrix& j : gens) next.push_back(kron(block.omega, j));
      gens = std::move(next);
      q *= 16;
    }
  }
  return RealFamily{m, tensor_identity(std::move(gens), f.odd_part.get_ui())};
}

ComplexFamily build_complex_family(std::size_t m) {
  if (m == 0) throw std::domain_error("family size m must be positive");
  const DyadicFactorization f = factor_dyadic(Integer(static_cast<unsigned long>(m)));
  const std::size_t b = f.valuation();
  const GaussianRational i_unit = GaussianRational::imaginary_unit();
  const ComplexMatrix x{{0, 1}, {1, 0}};
  const ComplexMatrix y{{0, -i_unit}, {i_unit, 0}};
  const ComplexMatrix z{{1, 0}, {0, -1}};

  // Jordan-Wigner strings Z^(j-1) (x) {X, Y} (x) I^(b-j), then Z^b.
  std::vector<ComplexMatrix> gens;
  for (std::size_t j = 1; j <= b; ++j) {
    const ComplexMatrix left = kron_power(z, j - 1);
    const ComplexMatrix right = ComplexMatrix::identity(std::size_t{1} << (b - j));
    gens.push_back(i_unit * kron(kron(left, x), right));
    gens.push_back(i_unit * kron(kron(left, y), right));
  }
  gens.push_back(i_unit * kron_power(z, b));
  return ComplexFamily{m, tensor_identity(std::move(gens), f.odd_part.get_ui())};
}

template <typename T>
std::vector<Matrix<T>> AnticommutingFamily<T>::span_basis() const {
  std::vector<Matrix<T>> out;
  out.reserve(generators.size() + 1);
  out.push_back(Matrix<T>::identity(m));
  out.insert(out.end(), generators.begin(), generators.end());
  return out;
}

template <typename T>
Matrix<T> evaluate(const AnticommutingFamily<T>& family, std::span<const Rational> y) {
  if (y.size() != family.generators.size() + 1) {
    throw std::invalid_argument("family of " + std::to_string(family.generators.size()) +
                                " generators needs " + std::to_string(family.generators.size() + 1) +
                                " coefficients, got " + std::to_string(y.size()));
  }
  const auto basis = family.span_basis();
  return linear_combination<T>(basis, y);
}

template <typename T>
std::string family_violation(const AnticommutingFamily<T>& family) {
  const std::uint64_t expected = rho_field(HalfInteger(static_cast<long>(family.m)), family.field) - 1;
  if (family.generators.size() != expected) {
    return "expected " + std::to_string(expected) + " generators, found " +
           std::to_string(family.generators.size());
  }
  const Matrix<T> minus_id = -Matrix<T>::identity(family.m);
  for (std::size_t i = 0; i < family.generators.size(); ++i) {
    const Matrix<T>& g = family.generators[i];
    const std::string name = "J_" + std::to_string(i + 1);
    if (g.rows() != family.m || g.cols() != family.m) return name + " has the wrong shape";
    if (!entries_allowed(g)) return name + " has entries outside the unit set";
    if (!is_skew_adjoint(g)) return name + " is not skew-adjoint";
    if (!(mul(g, g) == minus_id)) return name + "^2 != -I";
    for (std::size_t j = 0; j < i; ++j) {
      const Matrix<T>& h = family.generators[j];
      if (!(mul(g, h) + mul(h, g)).is_zero()) {
        return name + " and J_" + std::to_string(j + 1) + " do not anticommute";
      }
    }
  }
  return {};
}

template struct AnticommutingFamily<Rational>;
template struct AnticommutingFamily<GaussianRational>;
template RealMatrix evaluate(const RealFamily&, std::span<const Rational>);
template ComplexMatrix evaluate(const ComplexFamily&, std::span<const Rational>);
template std::string family_violation(const RealFamily&);
template std::string family_violation(const ComplexFamily&);

}  // namespace rhspaces
