#include "rhspaces/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace rhspaces {

std::string_view to_string(Field field) { return field == Field::real ? "real" : "complex"; }

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("denominator must be unsigned in '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

GaussianRational& GaussianRational::operator*=(const GaussianRational& other) {
  Rational real_part = re * other.re - im * other.im;
  im = re * other.im + im * other.re;
  re = std::move(real_part);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << '(' << z.re << ',' << z.im << ')';
}

}  // namespace rhspaces
