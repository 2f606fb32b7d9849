#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace rhspaces {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Canonical rational: gcd(|num|, den) == 1 and den > 0 after every operation.
using Rational = mpq_class;

enum class Field { real, complex };

std::string_view to_string(Field field);

/// Parses "p/q" or "p" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

/// Complex number with rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real_part) : re(std::move(real_part)) {}
  GaussianRational(Rational real_part, Rational imag_part)
      : re(std::move(real_part)), im(std::move(imag_part)) {}
  GaussianRational(long value) : re(value) {}
  GaussianRational(int value) : re(value) {}

  static GaussianRational imaginary_unit() { return {0, 1}; }

  GaussianRational& operator+=(const GaussianRational& other) {
    re += other.re;
    im += other.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& other) {
    re -= other.re;
    im -= other.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& other);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);
};

/// Scalar-generic helpers so matrix code can treat both fields uniformly.
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr Field field = Field::real;
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational conj(const Rational& x) { return x; }
  static bool is_real(const Rational&) { return true; }
};

template <>
struct ScalarTraits<GaussianRational> {
  static constexpr Field field = Field::complex;
  static bool is_zero(const GaussianRational& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }
  static GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }
  static bool is_real(const GaussianRational& z) { return sgn(z.im) == 0; }
};

template <typename T>
bool is_zero(const T& x) {
  return ScalarTraits<T>::is_zero(x);
}

template <typename T>
T conj(const T& x) {
  return ScalarTraits<T>::conj(x);
}

}  // namespace rhspaces
