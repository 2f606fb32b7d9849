#include "rhspaces/serialize.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

namespace rhspaces {

Json entry_to_json(const Rational& x) { return format_rational(x); }

Json entry_to_json(const GaussianRational& z) {
  return Json{{"re", format_rational(z.re)}, {"im", format_rational(z.im)}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw SchemaError("rational entries must be strings like \"p\" or \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

GaussianRational gaussian_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || j.size() != 2) {
    throw SchemaError("complex entries must be objects {\"re\": ..., \"im\": ...}");
  }
  return {rational_from_json(j.at("re")), rational_from_json(j.at("im"))};
}

template <typename T>
Json matrix_to_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const T& x : m.row(i)) row.push_back(entry_to_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename T>
Json space_to_json(const MatrixSpace<T>& space) {
  Json j;
  j["schema_version"] = kSpaceSchemaVersion;
  j["field"] = std::string(to_string(space.field));
  j["n"] = space.n;
  j["rank"] = space.rank;
  j["dim"] = space.dimension();
  Json basis = Json::array();
  for (const Matrix<T>& g : space.basis) basis.push_back(matrix_to_json(g));
  j["basis"] = std::move(basis);
  std::visit(
      [&](const auto& cert) {
        using C = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<C, SquareIdentity>) {
          j["certificate"] = Json{{"kind", "square"}};
        } else if constexpr (std::is_same_v<C, FactorIdentity>) {
          j["certificate"] = Json{{"kind", "factor"}, {"p", cert.p}};
        } else if constexpr (std::is_same_v<C, Padding<T>>) {
          Json c{{"kind", "padding"}};
          if (cert.inner) c["inner"] = space_to_json(*cert.inner);
          j["certificate"] = std::move(c);
        }
      },
      space.certificate);
  return j;
}

Json space_to_json(const AnySpace& space) {
  return std::visit([](const auto& s) { return space_to_json(s); }, space);
}

std::string space_to_text(const AnySpace& space) { return space_to_json(space).dump(2) + "\n"; }

namespace {

std::size_t size_field(const Json& j, const char* key, bool allow_zero) {
  if (!j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw SchemaError(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  const auto value = v.get<std::size_t>();
  if (!allow_zero && value == 0) throw SchemaError(std::string("field \"") + key + "\" must be positive");
  return value;
}

template <typename T>
T entry_from_json(const Json& j) {
  if constexpr (std::is_same_v<T, Rational>) {
    return rational_from_json(j);
  } else {
    return gaussian_from_json(j);
  }
}

template <typename T>
Matrix<T> matrix_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw SchemaError("basis matrices must have n rows");
  Matrix<T> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != n) throw SchemaError("basis matrices must be n x n");
    for (std::size_t c = 0; c < n; ++c) m(i, c) = entry_from_json<T>(row[c]);
  }
  return m;
}

template <typename T>
MatrixSpace<T> typed_space_from_json(const Json& j) {
  MatrixSpace<T> space;
  space.n = size_field(j, "n", false);
  space.rank = size_field(j, "rank", true);
  if (space.rank > space.n) throw SchemaError("rank exceeds n");
  const std::size_t dim = size_field(j, "dim", true);
  if (!j.contains("basis") || !j.at("basis").is_array()) throw SchemaError("missing array \"basis\"");
  const Json& basis = j.at("basis");
  if (basis.size() != dim) {
    throw SchemaError("dim is " + std::to_string(dim) + " but basis has " +
                      std::to_string(basis.size()) + " matrices");
  }
  for (const Json& m : basis) space.basis.push_back(matrix_from_json<T>(m, space.n));

  if (!j.contains("certificate")) {
    space.certificate = MissingCertificate{};
    return space;
  }
  const Json& cert = j.at("certificate");
  if (!cert.is_object() || !cert.contains("kind") || !cert.at("kind").is_string()) {
    throw SchemaError("certificate must be an object with a string \"kind\"");
  }
  const std::string kind = cert.at("kind").get<std::string>();
  if (kind == "square") {
    space.certificate = SquareIdentity{};
  } else if (kind == "factor") {
    space.certificate = FactorIdentity{size_field(cert, "p", true)};
  } else if (kind == "padding") {
    if (!cert.contains("inner") || !cert.at("inner").is_object()) {
      throw SchemaError("padding certificate needs an \"inner\" space");
    }
    AnySpace inner = space_from_json(cert.at("inner"));
    auto* typed = std::get_if<MatrixSpace<T>>(&inner);
    if (typed == nullptr) throw SchemaError("padding inner space has a different field");
    if (typed->n > space.n) throw SchemaError("padding inner space is larger than the space");
    const std::size_t removed = space.n - typed->n;
    space.certificate = Padding<T>{removed, std::make_shared<const MatrixSpace<T>>(std::move(*typed))};
  } else {
    throw SchemaError("unknown certificate kind \"" + kind + "\"");
  }
  return space;
}

}  // namespace

AnySpace space_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("space must be a JSON object");
  if (!j.contains("schema_version") || j.at("schema_version") != kSpaceSchemaVersion) {
    throw SchemaError("unsupported or missing schema_version (expected 1)");
  }
  if (!j.contains("field") || !j.at("field").is_string()) throw SchemaError("missing string \"field\"");
  const std::string field = j.at("field").get<std::string>();
  if (field == "real") return typed_space_from_json<Rational>(j);
  if (field == "complex") return typed_space_from_json<GaussianRational>(j);
  throw SchemaError("field must be \"real\" or \"complex\"");
}

AnySpace space_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return space_from_json(j);
}

template <typename T>
Json family_to_json(const AnticommutingFamily<T>& family) {
  Json gens = Json::array();
  for (const Matrix<T>& g : family.generators) gens.push_back(matrix_to_json(g));
  return Json{{"field", std::string(to_string(family.field))}, {"m", family.m}, {"generators", gens}};
}

Json integer_to_json(const Integer& value) {
  if (value.fits_ulong_p()) return static_cast<std::uint64_t>(value.get_ui());
  return value.get_str();
}

Json report_to_json(const BoundReport& report) {
  return Json{{"field", report.query.field == Field::real ? "real-symmetric" : "complex-hermitian"},
              {"n", integer_to_json(report.query.n)},
              {"s", report.query.s},
              {"sigma", report.sigma},
              {"lower", report.lower},
              {"upper", report.upper},
              {"status", std::string(to_string(report.status))},
              {"rule", std::string(to_string(report.rule))}};
}

Json report_to_json(const VerificationReport& report) {
  Json j{{"space_id", report.space_id},
         {"self_adjoint_ok", report.self_adjoint_ok},
         {"independence_ok", report.independence_ok},
         {"certificate_ok", report.certificate_ok},
         {"certificate_reason", report.certificate_reason},
         {"samples_tested", report.samples_tested},
         {"rank_failures", report.rank_failures},
         {"signature_failures", report.signature_failures},
         {"passed", report.passed()}};
  j["signature_ok"] = report.signature_ok ? Json(*report.signature_ok) : Json(nullptr);
  return j;
}

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    char byte[3];
    std::snprintf(byte, sizeof byte, "%02x", digest[i]);
    hex += byte;
  }
  return hex;
}

template Json matrix_to_json(const RealMatrix&);
template Json matrix_to_json(const ComplexMatrix&);
template Json space_to_json(const RealSpace&);
template Json space_to_json(const ComplexSpace&);
template Json family_to_json(const RealFamily&);
template Json family_to_json(const ComplexFamily&);

}  // namespace rhspaces
