#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhspaces/verifier.hpp"

using namespace rhspaces;

namespace {

RealMatrix diag(std::initializer_list<long> values) {
  RealMatrix m(values.size(), values.size());
  std::size_t i = 0;
  for (long v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

VerificationOptions quick(Execution execution = Execution::parallel) {
  VerificationOptions o;
  o.samples = 40;
  o.seed = 7;
  o.execution = execution;
  return o;
}

}  // namespace

TEST_CASE("check_certificate examples") {
  RealSpace w = build_space<Rational>(4, 0);
  CHECK(check_certificate(w).ok);

  RealSpace corrupted = w;
  REQUIRE(corrupted.basis[0](0, 0) == 1);
  corrupted.basis[0](0, 0) = 2;
  const auto result = check_certificate(corrupted);
  CHECK_FALSE(result.ok);
  CHECK(result.reason.find("G_1 G_1") != std::string::npos);

  RealSpace empty;
  empty.n = 3;
  empty.rank = 0;
  CHECK(check_certificate(empty).ok);
  CHECK(verify_space(empty).passed());
}

TEST_CASE("every single sign flip of W^0 on 8x8 is caught") {
  const RealSpace w = build_space<Rational>(8, 0);
  std::size_t flips = 0;
  for (std::size_t b = 0; b < w.dimension(); ++b) {
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        if (w.basis[b](i, j) == 0) continue;
        RealSpace c = w;
        c.basis[b](i, j) = -c.basis[b](i, j);
        INFO("basis " << b << " entry (" << i << ", " << j << ")");
        REQUIRE_FALSE(check_certificate(c).ok);
        ++flips;
      }
    }
  }
  CHECK(flips > 0);
}

TEST_CASE("certificates are checked against the claimed rank and sizes") {
  RealSpace w = build_space<Rational>(7, 1);
  w.rank = 4;
  CHECK(check_certificate(w).reason.find("rank") != std::string::npos);

  RealSpace padded = build_space<Rational>(5, 1);
  REQUIRE(std::holds_alternative<Padding<Rational>>(padded.certificate));
  CHECK(check_certificate(padded).ok);
  padded.basis[0](0, 0) = 1;
  CHECK(check_certificate(padded).reason.find("padding") != std::string::npos);

  RealSpace bad_p = build_space<Rational>(7, 1);
  bad_p.certificate = FactorIdentity{4};
  CHECK_FALSE(check_certificate(bad_p).ok);
}

TEST_CASE("verify passes on hermitian W^1 for n = 3") {
  const VerificationReport r = verify_space(build_space<GaussianRational>(3, 1));
  CHECK(r.passed());
  CHECK(r.self_adjoint_ok);
  CHECK(r.independence_ok);
  CHECK(r.certificate_ok);
  CHECK(r.rank_failures.empty());
  REQUIRE(r.signature_ok.has_value());
  CHECK(*r.signature_ok);
  // 4 basis vectors + 12 signed pairs + all-ones + 200 random
  CHECK(r.samples_tested == 4 + 12 + 1 + 200);
  CHECK(r.space_id.size() == 64);
}

TEST_CASE("a rank-2 basis element under a rank-4 claim is reported") {
  RealSpace w;
  w.n = 4;
  w.rank = 4;
  w.basis = {diag({1, 1, -1, -1}), diag({1, -1, 0, 0})};
  const auto r = verify_space(w, quick());
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.rank_failures.empty());
  CHECK(std::find(r.rank_failures.begin(), r.rank_failures.end(), std::vector<long>{0, 1}) !=
        r.rank_failures.end());
  CHECK(std::is_sorted(r.rank_failures.begin(), r.rank_failures.end()));
  CHECK(r.certificate_reason == "missing");
}

TEST_CASE("line through diag(1,1,0)") {
  RealSpace w;
  w.n = 3;
  w.rank = 2;
  w.basis = {diag({1, 1, 0})};
  const auto r = verify_space(w);
  CHECK(r.rank_failures.empty());
  CHECK_FALSE(r.signature_ok.has_value());
  CHECK(r.self_adjoint_ok);
  CHECK(r.independence_ok);
  // Imported without a certificate: sampling passes, the proof is absent.
  CHECK_FALSE(r.certificate_ok);
  CHECK(r.certificate_reason == "missing");
}

TEST_CASE("signature failures are reported") {
  // diag(x + y, x - y) is definite whenever |x| > |y|.
  RealSpace w;
  w.n = 2;
  w.rank = 2;
  w.basis = {RealMatrix::identity(2), diag({1, -1})};
  const auto r = verify_space(w, quick());
  REQUIRE(r.signature_ok.has_value());
  CHECK_FALSE(*r.signature_ok);
  CHECK(std::find(r.signature_failures.begin(), r.signature_failures.end(), std::vector<long>{1, 0}) !=
        r.signature_failures.end());
}

TEST_CASE("non-self-adjoint and dependent bases") {
  RealSpace w;
  w.n = 2;
  w.rank = 2;
  w.basis = {RealMatrix{{0, 1}, {0, 0}}};
  auto r = verify_space(w, quick());
  CHECK_FALSE(r.self_adjoint_ok);
  CHECK_FALSE(r.passed());

  w.basis = {RealMatrix::identity(2), RealMatrix::identity(2) * Rational(2)};
  r = verify_space(w, quick());
  CHECK_FALSE(r.independence_ok);

  w.basis = {RealMatrix::identity(3)};
  r = verify_space(w, quick());
  CHECK_FALSE(r.self_adjoint_ok);
  CHECK(check_certificate(w).reason.find("n x n") != std::string::npos);
}

TEST_CASE("sample coefficients") {
  const auto s = sample_coefficients(3, 5, 0);
  REQUIRE(s.size() == 3 + 6 + 1 + 5);
  CHECK(s[0] == std::vector<long>{1, 0, 0});
  CHECK(s[3] == std::vector<long>{1, 1, 0});
  CHECK(s[4] == std::vector<long>{1, -1, 0});
  CHECK(s[9] == std::vector<long>{1, 1, 1});
  for (std::size_t i = 10; i < s.size(); ++i) {
    bool nonzero = false;
    for (long x : s[i]) {
      CHECK(x >= -9);
      CHECK(x <= 9);
      nonzero = nonzero || x != 0;
    }
    CHECK(nonzero);
  }
  CHECK(sample_coefficients(0, 5, 0).empty());
  CHECK(sample_coefficients(3, 5, 1) != s);

  // Reference splitmix64 outputs for seed 0.
  SplitMix64 g(0);
  CHECK(g.next() == 0xE220A8397B1DCDAFULL);
  CHECK(g.next() == 0x6E789E6AA1B965F4ULL);
}

TEST_CASE("verification is deterministic and independent of scheduling") {
  const RealSpace w = build_space<Rational>(12, 2);
  const auto a = verify_space(w, quick(Execution::serial));
  const auto b = verify_space(w, quick(Execution::parallel));
  const auto c = verify_space(w, quick(Execution::parallel));
  CHECK(a.passed());
  CHECK(a.space_id == b.space_id);
  CHECK(a.samples_tested == b.samples_tested);
  CHECK(b.rank_failures == c.rank_failures);

  RealSpace broken = w;
  broken.rank = 6;
  const auto x = verify_space(broken, quick(Execution::serial));
  const auto y = verify_space(broken, quick(Execution::parallel));
  CHECK(x.rank_failures == y.rank_failures);
  CHECK(x.signature_failures == y.signature_failures);
  CHECK(x.rank_failures.size() == x.samples_tested);
  CHECK(x.space_id != a.space_id);
}

TEST_CASE("constructed spaces verify (small sweep)") {
  for (std::size_t n = 2; n <= 16; ++n) {
    for (unsigned s = 0; s <= 2; ++s) {
      if (n <= s || (n - s) % 2 == 1) continue;
      INFO("n = " << n << ", s = " << s);
      REQUIRE(verify_space(build_space<Rational>(n, s), quick()).passed());
      if (s <= 1) REQUIRE(verify_space(build_space<GaussianRational>(n, s), quick()).passed());
    }
  }
}
