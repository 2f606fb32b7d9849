#include "rhspaces/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace rhspaces {
namespace {

// Integral rings used after clearing denominators.

struct GaussInt {
  Integer re;
  Integer im;
};

bool ring_zero(const Integer& x) { return sgn(x) == 0; }
bool ring_zero(const GaussInt& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }

struct Scratch {
  Integer t0, t1, t2;
};

// target <- (pivot * target - a * b) / prev, the division being exact.
void bareiss_step(Integer& target, const Integer& pivot, const Integer& a, const Integer& b,
                  const Integer& prev, Scratch& s) {
  mpz_mul(s.t0.get_mpz_t(), pivot.get_mpz_t(), target.get_mpz_t());
  mpz_submul(s.t0.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_divexact(target.get_mpz_t(), s.t0.get_mpz_t(), prev.get_mpz_t());
}

void gauss_divexact(GaussInt& z, const GaussInt& d, Scratch& s) {
  if (sgn(d.im) == 0) {
    mpz_divexact(z.re.get_mpz_t(), z.re.get_mpz_t(), d.re.get_mpz_t());
    mpz_divexact(z.im.get_mpz_t(), z.im.get_mpz_t(), d.re.get_mpz_t());
    return;
  }
  // z * conj(d) / |d|^2
  s.t2 = d.re * d.re + d.im * d.im;
  Integer re = z.re * d.re + z.im * d.im;
  Integer im = z.im * d.re - z.re * d.im;
  mpz_divexact(z.re.get_mpz_t(), re.get_mpz_t(), s.t2.get_mpz_t());
  mpz_divexact(z.im.get_mpz_t(), im.get_mpz_t(), s.t2.get_mpz_t());
}

void bareiss_step(GaussInt& target, const GaussInt& pivot, const GaussInt& a, const GaussInt& b,
                  const GaussInt& prev, Scratch& s) {
  // re = p.re t.re - p.im t.im - (a.re b.re - a.im b.im)
  // im = p.re t.im + p.im t.re - (a.re b.im + a.im b.re)
  mpz_mul(s.t0.get_mpz_t(), pivot.re.get_mpz_t(), target.re.get_mpz_t());
  mpz_submul(s.t0.get_mpz_t(), pivot.im.get_mpz_t(), target.im.get_mpz_t());
  mpz_submul(s.t0.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
  mpz_addmul(s.t0.get_mpz_t(), a.im.get_mpz_t(), b.im.get_mpz_t());
  mpz_mul(s.t1.get_mpz_t(), pivot.re.get_mpz_t(), target.im.get_mpz_t());
  mpz_addmul(s.t1.get_mpz_t(), pivot.im.get_mpz_t(), target.re.get_mpz_t());
  mpz_submul(s.t1.get_mpz_t(), a.re.get_mpz_t(), b.im.get_mpz_t());
  mpz_submul(s.t1.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
  target.re.swap(s.t0);
  target.im.swap(s.t1);
  gauss_divexact(target, prev, s);
}

Integer ring_one(const Integer*) { return 1; }
GaussInt ring_one(const GaussInt*) { return {1, 0}; }

GaussInt ring_conj(const GaussInt& z) { return {z.re, -z.im}; }
const Integer& ring_conj(const Integer& x) { return x; }

void ring_addmul(Integer& target, const Integer& c, const Integer& x) {
  mpz_addmul(target.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
}
void ring_addmul(GaussInt& target, const GaussInt& c, const GaussInt& x) {
  Integer re = c.re * x.re - c.im * x.im;
  Integer im = c.re * x.im + c.im * x.re;
  target.re += re;
  target.im += im;
}

// Matrix of ring elements after clearing a common positive denominator.
template <typename R>
struct IntegralMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<R> a;
  Integer scale = 1;  // original = a / scale

  R& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

IntegralMatrix<Integer> clear_denominators(const RealMatrix& m) {
  IntegralMatrix<Integer> out{m.rows(), m.cols(), {}, 1};
  for (const Rational& x : m.data()) {
    mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), x.get_den_mpz_t());
  }
  out.a.resize(m.rows() * m.cols());
  Integer factor;
  for (std::size_t i = 0; i < out.a.size(); ++i) {
    const Rational& x = m.data()[i];
    if (sgn(x) == 0) continue;
    mpz_divexact(factor.get_mpz_t(), out.scale.get_mpz_t(), x.get_den_mpz_t());
    out.a[i] = x.get_num() * factor;
  }
  return out;
}

IntegralMatrix<GaussInt> clear_denominators(const ComplexMatrix& m) {
  IntegralMatrix<GaussInt> out{m.rows(), m.cols(), {}, 1};
  for (const GaussianRational& z : m.data()) {
    mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), z.re.get_den_mpz_t());
    mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), z.im.get_den_mpz_t());
  }
  out.a.resize(m.rows() * m.cols());
  Integer factor;
  for (std::size_t i = 0; i < out.a.size(); ++i) {
    const GaussianRational& z = m.data()[i];
    if (sgn(z.re) != 0) {
      mpz_divexact(factor.get_mpz_t(), out.scale.get_mpz_t(), z.re.get_den_mpz_t());
      out.a[i].re = z.re.get_num() * factor;
    }
    if (sgn(z.im) != 0) {
      mpz_divexact(factor.get_mpz_t(), out.scale.get_mpz_t(), z.im.get_den_mpz_t());
      out.a[i].im = z.im.get_num() * factor;
    }
  }
  return out;
}

// Row-pivoted Bareiss elimination in place. Returns the rank; when the matrix
// is square and nonsingular, the last pivot is the determinant up to `sign`.
template <typename R>
std::size_t bareiss(IntegralMatrix<R>& m, int& sign, R& last_pivot) {
  Scratch s;
  R prev = ring_one(static_cast<const R*>(nullptr));
  last_pivot = prev;
  sign = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot_row = rank;
    while (pivot_row < m.rows && ring_zero(m.at(pivot_row, c))) ++pivot_row;
    if (pivot_row == m.rows) continue;
    if (pivot_row != rank) {
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(pivot_row, j), m.at(rank, j));
      sign = -sign;
    }
    const R& pivot = m.at(rank, c);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      const R& lead = m.at(i, c);
      if (ring_zero(lead)) {
        // target <- pivot * target / prev
        for (std::size_t j = c + 1; j < m.cols; ++j) {
          R& t = m.at(i, j);
          if (!ring_zero(t)) bareiss_step(t, pivot, lead, lead, prev, s);
        }
        continue;
      }
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        bareiss_step(m.at(i, j), pivot, lead, m.at(rank, j), prev, s);
      }
      m.at(i, c) = R{};
    }
    prev = pivot;
    last_pivot = pivot;
    ++rank;
  }
  return rank;
}

template <typename R>
void symmetric_swap(IntegralMatrix<R>& m, std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(i, j), m.at(k, j));
  for (std::size_t j = 0; j < m.rows; ++j) std::swap(m.at(j, i), m.at(j, k));
}

const Integer& real_part(const Integer& x) { return x; }
const Integer& real_part(const GaussInt& z) { return z.re; }
bool is_real(const Integer&) { return true; }
bool is_real(const GaussInt& z) { return sgn(z.im) == 0; }

template <typename R>
Inertia symmetric_inertia(IntegralMatrix<R>& m) {
  const std::size_t n = m.rows;
  Scratch s;
  R prev = ring_one(static_cast<const R*>(nullptr));
  int prev_sign = 1;
  Inertia out;
  std::size_t k = 0;
  while (k < n) {
    std::size_t pivot = k;
    while (pivot < n && ring_zero(m.at(pivot, pivot))) ++pivot;
    if (pivot == n) {
      // Active diagonal vanishes: find a nonzero off-diagonal entry.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!ring_zero(m.at(i, j))) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;  // remaining block is zero
      // Congruence by P = I + x e_j e_i^T with x = conj(a_ij):
      // col_i += x col_j, then row_i += conj(x) row_j. New a_ii = 2 |a_ij|^2.
      const R x = ring_conj(m.at(pi, pj));
      const R xc = m.at(pi, pj);
      for (std::size_t r = k; r < n; ++r) ring_addmul(m.at(r, pi), x, m.at(r, pj));
      for (std::size_t c = k; c < n; ++c) ring_addmul(m.at(pi, c), xc, m.at(pj, c));
      pivot = pi;
    }
    symmetric_swap(m, pivot, k);
    const R& d = m.at(k, k);
    if (!is_real(d)) throw std::logic_error("hermitian elimination produced a non-real pivot");
    const int d_sign = sgn(real_part(d));
    if (d_sign == prev_sign) {
      ++out.positive;
    } else {
      ++out.negative;
    }
    prev_sign = d_sign;
    for (std::size_t i = k + 1; i < n; ++i) {
      const R& lead = m.at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        bareiss_step(m.at(i, j), d, lead, m.at(k, j), prev, s);
      }
    }
    prev = d;
    ++k;
  }
  out.zero = n - out.rank();
  return out;
}

template <typename T>
std::vector<T> berkowitz(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<T> coeffs{T(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Leading block A_r (r x r), row R = m(r, 0..r-1), column S = m(0..r-1, r), corner a = m(r, r).
    // First column of the Toeplitz factor: 1, -a, -R S, -R A S, ..., -R A^{r-1} S.
    std::vector<T> toeplitz(r + 2);
    toeplitz[0] = T(1);
    toeplitz[1] = -m(r, r);
    std::vector<T> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t p = 0; p < r; ++p) {
      T dot(0);
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * v[i];
      toeplitz[p + 2] = -dot;
      if (p + 1 < r) {
        std::vector<T> next(r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * v[j];
        v = std::move(next);
      }
    }
    std::vector<T> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += toeplitz[i - j] * coeffs[j];
    coeffs = std::move(next);
  }
  return coeffs;
}

std::size_t sign_variations(const std::vector<int>& signs) {
  std::size_t variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

// Coefficient signs, leading first, of a real-rooted polynomial.
Inertia inertia_from_real_charpoly(const std::vector<int>& signs) {
  const std::size_t degree = signs.size() - 1;
  std::size_t zero_roots = 0;
  while (zero_roots < degree && signs[degree - zero_roots] == 0) ++zero_roots;
  std::vector<int> reduced(signs.begin(), signs.end() - static_cast<std::ptrdiff_t>(zero_roots));
  std::vector<int> mirrored = reduced;
  // p(-t): coefficient of t^e flips sign when e is odd.
  const std::size_t reduced_degree = reduced.size() - 1;
  for (std::size_t i = 0; i < mirrored.size(); ++i) {
    if ((reduced_degree - i) % 2 == 1) mirrored[i] = -mirrored[i];
  }
  Inertia out;
  out.positive = sign_variations(reduced);
  out.negative = sign_variations(mirrored);
  out.zero = zero_roots;
  return out;
}

template <typename T>
void require_self_adjoint(const Matrix<T>& m) {
  if (!is_self_adjoint(m)) throw std::invalid_argument("signature requires a self-adjoint matrix");
}

}  // namespace

std::size_t exact_rank(const RealMatrix& m) {
  auto im = clear_denominators(m);
  int sign = 1;
  Integer last;
  return bareiss(im, sign, last);
}

std::size_t exact_rank(const ComplexMatrix& m) {
  auto im = clear_denominators(m);
  int sign = 1;
  GaussInt last;
  return bareiss(im, sign, last);
}

Rational determinant(const RealMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant needs a square matrix");
  if (m.rows() == 0) return 1;
  auto im = clear_denominators(m);
  int sign = 1;
  Integer last;
  if (bareiss(im, sign, last) < m.rows()) return 0;
  Integer scale_power;
  mpz_pow_ui(scale_power.get_mpz_t(), im.scale.get_mpz_t(), m.rows());
  Rational det(last * sign, scale_power);
  det.canonicalize();
  return det;
}

GaussianRational determinant(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant needs a square matrix");
  if (m.rows() == 0) return 1;
  auto im = clear_denominators(m);
  int sign = 1;
  GaussInt last;
  if (bareiss(im, sign, last) < m.rows()) return 0;
  Integer scale_power;
  mpz_pow_ui(scale_power.get_mpz_t(), im.scale.get_mpz_t(), m.rows());
  Rational re(last.re * sign, scale_power);
  Rational imag(last.im * sign, scale_power);
  re.canonicalize();
  imag.canonicalize();
  return {re, imag};
}

std::vector<Rational> characteristic_polynomial(const RealMatrix& m) { return berkowitz(m); }
std::vector<GaussianRational> characteristic_polynomial(const ComplexMatrix& m) {
  return berkowitz(m);
}

Inertia signature(const RealMatrix& m) {
  require_self_adjoint(m);
  auto im = clear_denominators(m);
  return symmetric_inertia(im);
}

Inertia signature(const ComplexMatrix& m) {
  require_self_adjoint(m);
  auto im = clear_denominators(m);
  return symmetric_inertia(im);
}

Inertia signature_via_charpoly(const RealMatrix& m) {
  require_self_adjoint(m);
  std::vector<int> signs;
  for (const Rational& c : berkowitz(m)) signs.push_back(sgn(c));
  return inertia_from_real_charpoly(signs);
}

Inertia signature_via_charpoly(const ComplexMatrix& m) {
  require_self_adjoint(m);
  std::vector<int> signs;
  for (const GaussianRational& c : berkowitz(m)) {
    if (sgn(c.im) != 0) throw std::logic_error("hermitian characteristic polynomial is not real");
    signs.push_back(sgn(c.re));
  }
  return inertia_from_real_charpoly(signs);
}

}  // namespace rhspaces
