#pragma once

// JSON formats. Objects use nlohmann::json's default sorted key order, so
// dumps are byte-stable for equal inputs.

#include "rhspaces/classifier.hpp"
#include "rhspaces/families.hpp"
#include "rhspaces/spaces.hpp"
#include "rhspaces/verifier.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace rhspaces {

using Json = nlohmann::json;

/// Malformed or schema-violating input.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kSpaceSchemaVersion = 1;

/// Rationals are "p" or "p/q" strings; Gaussian rationals are {"re": "...", "im": "..."}.
Json entry_to_json(const Rational& x);
Json entry_to_json(const GaussianRational& z);
Rational rational_from_json(const Json& j);
GaussianRational gaussian_from_json(const Json& j);

template <typename T>
Json matrix_to_json(const Matrix<T>& m);

/// SpaceFileV1: schema_version, field, n, rank, dim, basis, optional certificate
/// ({"kind": "square"}, {"kind": "factor", "p": p} or {"kind": "padding", "inner": space}).
template <typename T>
Json space_to_json(const MatrixSpace<T>& space);
Json space_to_json(const AnySpace& space);

/// Throws SchemaError on any violation of SpaceFileV1.
AnySpace space_from_json(const Json& j);
AnySpace space_from_text(const std::string& text);

/// Canonical text form of a space: two-space indented JSON with a trailing newline.
std::string space_to_text(const AnySpace& space);

template <typename T>
Json family_to_json(const AnticommutingFamily<T>& family);

Json report_to_json(const BoundReport& report);
Json report_to_json(const VerificationReport& report);

/// n is emitted as a JSON number when it fits in 64 bits, otherwise as a decimal string.
Json integer_to_json(const Integer& value);

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

}  // namespace rhspaces
