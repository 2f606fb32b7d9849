#pragma once

#include "rhspaces/kernels.hpp"
#include "rhspaces/spaces.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rhspaces {

/// Outcome of checking a certificate's finitely many identities. `reason`
/// names the first failing identity, or why no check was possible.
struct CertificateCheck {
  bool ok = false;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// A certificate that checks out proves the rank claim for every nonzero real
/// combination, not just sampled ones.
template <typename T>
CertificateCheck check_certificate(const MatrixSpace<T>& space);

CertificateCheck check_certificate(const AnySpace& space);

/// splitmix64, the generator behind sampled coefficient vectors.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Coefficient vectors checked by verify_space, in order: each basis vector,
/// e_i + e_j and e_i - e_j for i < j, the all-ones vector, then `random_count`
/// vectors with entries (next() % 19) - 9 drawn coordinate by coordinate,
/// redrawing any all-zero vector. Empty for dimension 0.
std::vector<std::vector<long>> sample_coefficients(std::size_t dimension, std::size_t random_count,
                                                   std::uint64_t seed);

struct VerificationOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  Execution execution = Execution::parallel;
};

struct VerificationReport {
  std::string space_id;  // SHA-256 of the canonical JSON serialization
  bool self_adjoint_ok = false;
  bool independence_ok = false;
  bool certificate_ok = false;
  std::string certificate_reason;
  std::size_t samples_tested = 0;
  std::vector<std::vector<long>> rank_failures;       // sorted lexicographically
  std::optional<bool> signature_ok;                    // empty: not applicable
  std::vector<std::vector<long>> signature_failures;  // sorted lexicographically

  bool passed() const {
    return self_adjoint_ok && independence_ok && certificate_ok && rank_failures.empty() &&
           signature_ok.value_or(true);
  }
};

/// Runs every check and reports failures instead of throwing:
///  basis self-adjointness, real-linear independence of the basis, the certificate,
///  exact rank of every sampled combination against the claimed rank, and, for
///  dimension >= 2 with even rank, signature (k/2, k/2) on every sample.
template <typename T>
VerificationReport verify_space(const MatrixSpace<T>& space, const VerificationOptions& options = {});

VerificationReport verify_space(const AnySpace& space, const VerificationOptions& options = {});

}  // namespace rhspaces
