#pragma once

#include "rhspaces/scalar.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace rhspaces {

/// r = 2^(c + 4d) * odd_part with 0 <= c <= 3.
struct DyadicFactorization {
  Integer r;
  unsigned c = 0;
  std::uint64_t d = 0;
  Integer odd_part;

  /// Total 2-adic valuation c + 4d.
  std::uint64_t valuation() const { return c + 4 * d; }
  Integer reassemble() const;
};

DyadicFactorization factor_dyadic(const Integer& r);

/// A value in (1/2)Z, kept in lowest terms: denominator 2 implies an odd numerator.
class HalfInteger {
 public:
  HalfInteger(Integer value) : numerator_(std::move(value)), denominator_(1) {}
  HalfInteger(long value) : numerator_(value), denominator_(1) {}
  HalfInteger(int value) : numerator_(value), denominator_(1) {}

  /// numerator / denominator with denominator in {1, 2}.
  static HalfInteger from_fraction(Integer numerator, unsigned denominator);
  /// Half of an integer, e.g. h/2 for a rank h.
  static HalfInteger half_of(const Integer& value) { return from_fraction(value, 2); }
  /// Parses "p" or "p/2" (also "p/1"). Throws std::invalid_argument.
  static HalfInteger parse(std::string_view text);

  const Integer& numerator() const { return numerator_; }
  unsigned denominator() const { return denominator_; }
  bool is_integer() const { return denominator_ == 1; }
  int sign() const { return sgn(numerator_); }
  std::string to_string() const;

  friend bool operator==(const HalfInteger&, const HalfInteger&) = default;

 private:
  HalfInteger(Integer numerator, unsigned denominator)
      : numerator_(std::move(numerator)), denominator_(denominator) {}

  Integer numerator_;
  unsigned denominator_;
};

/// Radon-Hurwitz number 2^c + 8d for a positive integer, 0 for a half-integer.
/// Throws std::domain_error for r <= 0.
std::uint64_t rho(const HalfInteger& r);

/// Complex Radon-Hurwitz number 2(c + 4d) + 2 for a positive integer, 0 for a half-integer.
std::uint64_t rho_c(const HalfInteger& r);

std::uint64_t rho_field(const HalfInteger& r, Field field);

/// rho of a 2-adic valuation v: 2^(v mod 4) + 8 floor(v/4), resp. 2v + 2.
std::uint64_t rho_of_valuation(std::uint64_t v, Field field);

/// max{ rho_field(h/2 + j) : 0 <= j <= n - h }, non-positive arguments contributing 0.
/// Runs in O(log n): rho grows strictly with the 2-adic valuation, so the window
/// maximum sits at the integer of largest valuation in it.
/// Throws std::domain_error unless 0 <= h <= n and n >= 1.
std::uint64_t sigma(const Integer& n, const Integer& h, Field field);

}  // namespace rhspaces
