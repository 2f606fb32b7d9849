#pragma once

#include "rhspaces/rh_core.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace rhspaces {

/// Which clause of the bound theory decided a report.
enum class BoundRule {
  odd_rank_inferred,       // constant odd rank forbids a path A -> -A; scalar lines exist
  upper_attained,          // sigma equals rho(k/2): the block construction reaches sigma + 1
  lower_optimal_n3,        // n = 3, s = 1 (real)
  lower_optimal_c23,       // s = 1 (real), (n+1)/2 = 2^(c+4d) odd with c in {2, 3}
  undecided_c01,           // s = 1 (real), c in {0, 1}: upper bound not excluded
  undecided_corank2,       // s = 2 (real), sigma > rho((n-2)/2)
  hermitian_lower_optimal  // hermitian, sigma above rho_c(k/2)
};

std::string_view to_string(BoundRule rule);

enum class BoundStatus { exact, unknown };

std::string_view to_string(BoundStatus status);

/// n x n real symmetric (s in 0..2) or complex hermitian (s in 0..1) matrices of rank n - s.
struct BoundQuery {
  Field field = Field::real;
  Integer n;
  unsigned s = 0;

  Integer rank() const { return n - s; }
  /// Throws std::domain_error when (field, s) is out of range or n <= s.
  void validate() const;
};

/// Interval [lower, upper] containing the maximal dimension of a rank-k space.
/// `lower` is the dimension of the best explicit construction.
struct BoundReport {
  BoundQuery query;
  std::uint64_t sigma = 0;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  BoundStatus status = BoundStatus::exact;
  BoundRule rule = BoundRule::upper_attained;
};

BoundReport classify(const BoundQuery& query);

}  // namespace rhspaces
