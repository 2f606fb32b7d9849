#include "rhspaces/rh_core.hpp"

#include <stdexcept>

namespace rhspaces {

Integer DyadicFactorization::reassemble() const {
  Integer out;
  mpz_mul_2exp(out.get_mpz_t(), odd_part.get_mpz_t(), valuation());
  return out;
}

DyadicFactorization factor_dyadic(const Integer& r) {
  if (sgn(r) <= 0) throw std::domain_error("factor_dyadic needs r >= 1, got " + r.get_str());
  const std::uint64_t v = mpz_scan1(r.get_mpz_t(), 0);
  DyadicFactorization f;
  f.r = r;
  f.c = static_cast<unsigned>(v % 4);
  f.d = v / 4;
  mpz_tdiv_q_2exp(f.odd_part.get_mpz_t(), r.get_mpz_t(), v);
  return f;
}

HalfInteger HalfInteger::from_fraction(Integer numerator, unsigned denominator) {
  if (denominator == 1) return HalfInteger(std::move(numerator), 1);
  if (denominator != 2) throw std::invalid_argument("half-integer denominator must be 1 or 2");
  if (mpz_even_p(numerator.get_mpz_t())) {
    mpz_divexact_ui(numerator.get_mpz_t(), numerator.get_mpz_t(), 2);
    return HalfInteger(std::move(numerator), 1);
  }
  return HalfInteger(std::move(numerator), 2);
}

HalfInteger HalfInteger::parse(std::string_view text) {
  const Rational value = parse_rational(text);
  const Integer& den = value.get_den();
  if (den != 1 && den != 2) {
    throw std::invalid_argument("'" + std::string(text) + "' is not an integer or half-integer");
  }
  return from_fraction(value.get_num(), static_cast<unsigned>(den.get_ui()));
}

std::string HalfInteger::to_string() const {
  return denominator_ == 1 ? numerator_.get_str() : numerator_.get_str() + "/2";
}

std::uint64_t rho_of_valuation(std::uint64_t v, Field field) {
  if (field == Field::complex) return 2 * v + 2;
  return (std::uint64_t{1} << (v % 4)) + 8 * (v / 4);
}

namespace {

void require_positive(const HalfInteger& r, const char* name) {
  if (r.sign() <= 0) {
    throw std::domain_error(std::string(name) + " is defined for r > 0, got " + r.to_string());
  }
}

}  // namespace

std::uint64_t rho_field(const HalfInteger& r, Field field) {
  require_positive(r, field == Field::real ? "rho" : "rho_c");
  if (!r.is_integer()) return 0;
  return rho_of_valuation(mpz_scan1(r.numerator().get_mpz_t(), 0), field);
}

std::uint64_t rho(const HalfInteger& r) { return rho_field(r, Field::real); }
std::uint64_t rho_c(const HalfInteger& r) { return rho_field(r, Field::complex); }

std::uint64_t sigma(const Integer& n, const Integer& h, Field field) {
  if (sgn(n) <= 0) throw std::domain_error("sigma needs n >= 1");
  if (sgn(h) < 0 || h > n) throw std::domain_error("sigma needs 0 <= h <= n");
  // Odd h: every argument h/2 + j is a half-integer.
  if (mpz_odd_p(h.get_mpz_t())) return 0;
  Integer lo = h / 2;
  const Integer hi = n - lo;
  if (sgn(lo) == 0) lo = 1;  // rho is 0 at argument 0
  if (lo > hi) return 0;
  // Largest v with some multiple of 2^v in [lo, hi]: the candidate floor(hi / 2^v) * 2^v.
  Integer candidate;
  for (std::uint64_t v = mpz_sizeinbase(hi.get_mpz_t(), 2);; --v) {
    mpz_tdiv_q_2exp(candidate.get_mpz_t(), hi.get_mpz_t(), v);
    mpz_mul_2exp(candidate.get_mpz_t(), candidate.get_mpz_t(), v);
    if (sgn(candidate) > 0 && candidate >= lo) return rho_of_valuation(v, field);
    if (v == 0) break;
  }
  return 0;  // unreachable: v = 0 yields hi itself
}

}  // namespace rhspaces
