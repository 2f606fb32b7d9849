#include "rhspaces/verifier.hpp"

#include "rhspaces/serialize.hpp"

#include <algorithm>

namespace rhspaces {
namespace {

std::string pair_name(std::size_t i, std::size_t j) {
  return "G_" + std::to_string(i + 1) + " G_" + std::to_string(j + 1) + " + G_" + std::to_string(j + 1) +
         " G_" + std::to_string(i + 1);
}

template <typename T>
CertificateCheck check_square(const MatrixSpace<T>& space) {
  if (space.rank != space.n) {
    return {false, "square identity proves rank " + std::to_string(space.n) + ", but rank " +
                       std::to_string(space.rank) + " is claimed"};
  }
  const Matrix<T> two_id = Matrix<T>::identity(space.n) * T(2);
  const auto& g = space.basis;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i; j < g.size(); ++j) {
      const Matrix<T> anti = mul(g[i], g[j]) + mul(g[j], g[i]);
      const bool ok = i == j ? anti == two_id : anti.is_zero();
      if (!ok) return {false, "square identity fails: " + pair_name(i, j) + (i == j ? " != 2I" : " != 0")};
    }
  }
  return {true, "square identity holds"};
}

template <typename T>
CertificateCheck check_factor(const MatrixSpace<T>& space, std::size_t p) {
  const std::size_t n = space.n;
  if (p == 0 || 2 * p > n) return {false, "factor block size p=" + std::to_string(p) + " is out of range"};
  if (space.rank != 2 * p) {
    return {false, "factor identity proves rank " + std::to_string(2 * p) + ", but rank " +
                       std::to_string(space.rank) + " is claimed"};
  }
  const std::size_t q = n - p;
  std::vector<Matrix<T>> blocks;
  for (std::size_t i = 0; i < space.basis.size(); ++i) {
    const Matrix<T>& g = space.basis[i];
    const std::string name = "G_" + std::to_string(i + 1);
    if (!block(g, 0, 0, p, p).is_zero() || !block(g, p, p, q, q).is_zero()) {
      return {false, "factor identity fails: " + name + " has nonzero diagonal blocks"};
    }
    Matrix<T> b = block(g, 0, p, p, q);
    if (!(block(g, p, 0, q, p) == conjugate_transpose(b))) {
      return {false, "factor identity fails: " + name + " lower block is not B^*"};
    }
    blocks.push_back(std::move(b));
  }
  const Matrix<T> two_id = Matrix<T>::identity(p) * T(2);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Matrix<T> bi_adj = conjugate_transpose(blocks[i]);
    for (std::size_t j = i; j < blocks.size(); ++j) {
      const Matrix<T> sym = mul(blocks[i], conjugate_transpose(blocks[j])) + mul(blocks[j], bi_adj);
      const bool ok = i == j ? sym == two_id : sym.is_zero();
      if (!ok) {
        return {false, "factor identity fails: B_" + std::to_string(i + 1) + " B_" + std::to_string(j + 1) +
                           "^* + B_" + std::to_string(j + 1) + " B_" + std::to_string(i + 1) + "^*" +
                           (i == j ? " != 2I" : " != 0")};
      }
    }
  }
  return {true, "factor identity holds"};
}

template <typename T>
CertificateCheck check_padding(const MatrixSpace<T>& space, const Padding<T>& padding) {
  if (!padding.inner) return {false, "padding certificate has no inner space"};
  const MatrixSpace<T>& inner = *padding.inner;
  if (inner.n + padding.removed != space.n) return {false, "padding sizes do not add up"};
  if (inner.rank != space.rank) return {false, "padding inner rank differs from the claimed rank"};
  if (inner.dimension() != space.dimension()) return {false, "padding inner dimension differs"};
  const std::size_t r = padding.removed;
  for (std::size_t i = 0; i < space.basis.size(); ++i) {
    const Matrix<T>& g = space.basis[i];
    const std::string name = "G_" + std::to_string(i + 1);
    if (!block(g, 0, 0, r, space.n).is_zero() || !block(g, 0, 0, space.n, r).is_zero()) {
      return {false, "padding fails: " + name + " has nonzero padded rows or columns"};
    }
    if (!(block(g, r, r, inner.n, inner.n) == inner.basis[i])) {
      return {false, "padding fails: " + name + " does not embed the inner basis matrix"};
    }
  }
  CertificateCheck nested = check_certificate(inner);
  nested.reason = "inner: " + nested.reason;
  return nested;
}

template <typename T>
bool basis_is_square(const MatrixSpace<T>& space) {
  return std::all_of(space.basis.begin(), space.basis.end(),
                     [&](const Matrix<T>& g) { return g.rows() == space.n && g.cols() == space.n; });
}

// Basis matrices flattened into rows of a real matrix; complex entries
// contribute real and imaginary parts, so rank measures real-linear independence.
template <typename T>
RealMatrix vectorized_basis(const MatrixSpace<T>& space) {
  const std::size_t entries = space.n * space.n;
  constexpr std::size_t parts = std::is_same_v<T, Rational> ? 1 : 2;
  RealMatrix out(space.basis.size(), entries * parts);
  for (std::size_t b = 0; b < space.basis.size(); ++b) {
    const auto data = space.basis[b].data();
    for (std::size_t e = 0; e < entries; ++e) {
      if constexpr (parts == 1) {
        out(b, e) = data[e];
      } else {
        out(b, 2 * e) = data[e].re;
        out(b, 2 * e + 1) = data[e].im;
      }
    }
  }
  return out;
}

}  // namespace

template <typename T>
CertificateCheck check_certificate(const MatrixSpace<T>& space) {
  if (!basis_is_square(space)) return {false, "basis matrices are not n x n"};
  if (space.basis.empty()) return {true, "vacuous: the space has no nonzero element"};
  return std::visit(
      [&](const auto& cert) -> CertificateCheck {
        using C = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<C, MissingCertificate>) {
          return {false, "missing"};
        } else if constexpr (std::is_same_v<C, SquareIdentity>) {
          return check_square(space);
        } else if constexpr (std::is_same_v<C, FactorIdentity>) {
          return check_factor(space, cert.p);
        } else {
          return check_padding(space, cert);
        }
      },
      space.certificate);
}

CertificateCheck check_certificate(const AnySpace& space) {
  return std::visit([](const auto& s) { return check_certificate(s); }, space);
}

std::vector<std::vector<long>> sample_coefficients(std::size_t dimension, std::size_t random_count,
                                                   std::uint64_t seed) {
  std::vector<std::vector<long>> out;
  if (dimension == 0) return out;
  for (std::size_t i = 0; i < dimension; ++i) {
    std::vector<long> e(dimension, 0);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < dimension; ++i) {
    for (std::size_t j = i + 1; j < dimension; ++j) {
      std::vector<long> plus(dimension, 0), minus(dimension, 0);
      plus[i] = minus[i] = 1;
      plus[j] = 1;
      minus[j] = -1;
      out.push_back(std::move(plus));
      out.push_back(std::move(minus));
    }
  }
  out.emplace_back(dimension, 1);

  SplitMix64 rng(seed);
  for (std::size_t s = 0; s < random_count; ++s) {
    std::vector<long> v(dimension);
    bool nonzero = false;
    while (!nonzero) {
      for (long& x : v) {
        x = static_cast<long>(rng.next() % 19) - 9;
        nonzero = nonzero || x != 0;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

template <typename T>
VerificationReport verify_space(const MatrixSpace<T>& space, const VerificationOptions& options) {
  VerificationReport report;
  report.space_id = sha256_hex(space_to_json(space).dump());

  const bool shapes_ok = basis_is_square(space);
  report.self_adjoint_ok =
      shapes_ok && std::all_of(space.basis.begin(), space.basis.end(),
                               [](const Matrix<T>& g) { return is_self_adjoint(g); });
  report.independence_ok =
      shapes_ok && (space.basis.empty() || exact_rank(vectorized_basis(space)) == space.dimension());

  const CertificateCheck cert = check_certificate(space);
  report.certificate_ok = cert.ok;
  report.certificate_reason = cert.reason;

  const bool signature_applies = space.dimension() >= 2 && space.rank % 2 == 0;
  if (!shapes_ok) {
    if (signature_applies) report.signature_ok = false;
    return report;
  }

  const auto samples = sample_coefficients(space.dimension(), options.samples, options.seed);
  std::vector<std::vector<Rational>> coefficients;
  coefficients.reserve(samples.size());
  for (const auto& v : samples) coefficients.emplace_back(v.begin(), v.end());

  const bool with_signature = signature_applies && report.self_adjoint_ok;
  const auto outcomes = evaluate_samples<T>(space.basis, coefficients, with_signature, options.execution);
  report.samples_tested = outcomes.size();

  const Inertia balanced{space.rank / 2, space.rank / 2, space.n - space.rank};
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].rank != space.rank) report.rank_failures.push_back(samples[i]);
    if (with_signature && !(*outcomes[i].inertia == balanced)) report.signature_failures.push_back(samples[i]);
  }
  std::sort(report.rank_failures.begin(), report.rank_failures.end());
  std::sort(report.signature_failures.begin(), report.signature_failures.end());
  if (signature_applies) report.signature_ok = with_signature && report.signature_failures.empty();
  return report;
}

VerificationReport verify_space(const AnySpace& space, const VerificationOptions& options) {
  return std::visit([&](const auto& s) { return verify_space(s, options); }, space);
}

template CertificateCheck check_certificate(const RealSpace&);
template CertificateCheck check_certificate(const ComplexSpace&);
template VerificationReport verify_space(const RealSpace&, const VerificationOptions&);
template VerificationReport verify_space(const ComplexSpace&, const VerificationOptions&);

}  // namespace rhspaces
