#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhspaces/serialize.hpp"

using namespace rhspaces;

namespace {

template <typename T>
bool same_space(const MatrixSpace<T>& a, const MatrixSpace<T>& b) {
  if (a.n != b.n || a.rank != b.rank || a.basis != b.basis) return false;
  if (a.certificate.index() != b.certificate.index()) return false;
  if (const auto* fa = std::get_if<FactorIdentity>(&a.certificate)) {
    return *fa == std::get<FactorIdentity>(b.certificate);
  }
  if (const auto* pa = std::get_if<Padding<T>>(&a.certificate)) {
    const auto& pb = std::get<Padding<T>>(b.certificate);
    return pa->removed == pb.removed && same_space(*pa->inner, *pb.inner);
  }
  return true;
}

Json w40() { return space_to_json(build_space<Rational>(4, 0)); }

void expect_schema_error(const Json& j, const std::string& fragment) {
  try {
    space_from_json(j);
    FAIL("accepted: " << j.dump());
  } catch (const SchemaError& e) {
    CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
  }
}

}  // namespace

TEST_CASE("entries") {
  Rational half(-3, 6);
  half.canonicalize();
  CHECK(entry_to_json(half) == "-1/2");
  CHECK(entry_to_json(Rational(4)) == "4");
  CHECK(entry_to_json(GaussianRational(0, -1)) == Json{{"re", "0"}, {"im", "-1"}});
  CHECK(rational_from_json("6/4") == Rational(3, 2));
  CHECK(gaussian_from_json(Json{{"re", "1/2"}, {"im", "-2"}}) == GaussianRational(Rational(1, 2), -2));
  CHECK_THROWS_AS(rational_from_json(1), SchemaError);
  CHECK_THROWS_AS(rational_from_json("1/0"), SchemaError);
  CHECK_THROWS_AS(rational_from_json("0.5"), SchemaError);
  CHECK_THROWS_AS(gaussian_from_json(Json{{"re", "1"}}), SchemaError);
  CHECK_THROWS_AS(gaussian_from_json(Json{{"re", "1"}, {"im", "0"}, {"x", "0"}}), SchemaError);
}

TEST_CASE("space file layout") {
  const Json j = w40();
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("field") == "real");
  CHECK(j.at("n") == 4);
  CHECK(j.at("rank") == 4);
  CHECK(j.at("dim") == 3);
  CHECK(j.at("certificate") == Json{{"kind", "square"}});
  CHECK(j.at("basis")[0][0] == Json{"1", "0", "0", "0"});

  const Json f = space_to_json(build_space<Rational>(7, 1));
  CHECK(f.at("certificate") == Json{{"kind", "factor"}, {"p", 3}});
  const Json p = space_to_json(build_space<Rational>(5, 1));
  CHECK(p.at("certificate").at("kind") == "padding");
  CHECK(p.at("certificate").at("inner").at("n") == 4);
  const Json h = space_to_json(build_space<GaussianRational>(3, 1));
  CHECK(h.at("field") == "complex");
  CHECK(h.at("dim") == 4);
  CHECK(h.at("basis")[0][0][1] == Json{{"im", "0"}, {"re", "1"}});

  RealSpace bare;
  bare.n = 1;
  bare.rank = 1;
  bare.basis = {RealMatrix::identity(1)};
  CHECK_FALSE(space_to_json(bare).contains("certificate"));
}

TEST_CASE("round trip for all supported queries with n <= 32") {
  for (std::size_t n = 1; n <= 32; ++n) {
    for (unsigned s = 0; s <= 2; ++s) {
      if (n <= s) continue;
      INFO("n = " << n << ", s = " << s);
      const RealSpace r = build_space<Rational>(n, s);
      const std::string text = space_to_text(AnySpace(r));
      const AnySpace back = space_from_text(text);
      REQUIRE(std::holds_alternative<RealSpace>(back));
      REQUIRE(same_space(r, std::get<RealSpace>(back)));
      REQUIRE(space_to_text(back) == text);
      if (s <= 1) {
        const ComplexSpace c = build_space<GaussianRational>(n, s);
        const AnySpace cb = space_from_text(space_to_text(AnySpace(c)));
        REQUIRE(std::holds_alternative<ComplexSpace>(cb));
        REQUIRE(same_space(c, std::get<ComplexSpace>(cb)));
      }
    }
  }
}

TEST_CASE("output is byte-stable") {
  const std::string a = space_to_text(build_space(BoundQuery{Field::real, 12, 2}));
  const std::string b = space_to_text(build_space(BoundQuery{Field::real, 12, 2}));
  CHECK(a == b);
  CHECK(a.back() == '\n');
  // Keys appear sorted.
  CHECK(a.find("\"basis\"") < a.find("\"certificate\""));
  CHECK(a.find("\"rank\"") < a.find("\"schema_version\""));
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("schema violations") {
  Json j = w40();
  j["dim"] = 2;
  expect_schema_error(j, "dim is 2");

  j = w40();
  j["field"] = "quaternion";
  expect_schema_error(j, "field");

  j = w40();
  j["basis"][1][0][2] = "x";
  expect_schema_error(j, "x");

  j = w40();
  j["basis"][1][0] = Json{"1", "0"};
  expect_schema_error(j, "n x n");

  j = w40();
  j["certificate"] = Json{{"kind", "magic"}};
  expect_schema_error(j, "magic");

  j = w40();
  j["certificate"] = Json{{"kind", "padding"}};
  expect_schema_error(j, "inner");

  j = w40();
  j.erase("schema_version");
  expect_schema_error(j, "schema_version");

  j = w40();
  j["rank"] = 9;
  expect_schema_error(j, "rank");

  j = w40();
  j["n"] = -4;
  expect_schema_error(j, "nonnegative");

  j = w40();
  j.erase("basis");
  expect_schema_error(j, "basis");

  expect_schema_error(Json::array(), "object");
  CHECK_THROWS_AS(space_from_text("{not json"), SchemaError);

  // A real matrix where complex entries are required.
  j = w40();
  j["field"] = "complex";
  expect_schema_error(j, "complex entries");
}

TEST_CASE("imported spaces without certificates") {
  Json j = w40();
  j.erase("certificate");
  const AnySpace s = space_from_json(j);
  CHECK(std::holds_alternative<MissingCertificate>(std::get<RealSpace>(s).certificate));
}

TEST_CASE("report JSON") {
  const Json c = report_to_json(classify({Field::real, 11, 1}));
  CHECK(c.at("status") == "unknown");
  CHECK(c.at("lower") == 2);
  CHECK(c.at("upper") == 3);
  CHECK(c.at("field") == "real-symmetric");
  CHECK(c.at("n") == 11);

  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 80);
  CHECK(integer_to_json(big) == "1208925819614629174706176");

  RealSpace line;
  line.n = 2;
  line.rank = 2;
  line.basis = {RealMatrix::identity(2)};
  const Json v = report_to_json(verify_space(line));
  CHECK(v.at("signature_ok").is_null());
  CHECK(v.at("certificate_reason") == "missing");
  CHECK(v.at("passed") == false);
}

TEST_CASE("family JSON") {
  const Json j = family_to_json(build_real_family(2));
  CHECK(j.at("m") == 2);
  CHECK(j.at("generators").size() == 1);
  CHECK(j.at("generators")[0] == Json::parse(R"([["0", "-1"], ["1", "0"]])"));
}
