#include "rhspaces/classifier.hpp"

#include <stdexcept>

namespace rhspaces {

std::string_view to_string(BoundRule rule) {
  switch (rule) {
    case BoundRule::odd_rank_inferred: return "odd_rank_inferred";
    case BoundRule::upper_attained: return "upper_attained";
    case BoundRule::lower_optimal_n3: return "lower_optimal_n3";
    case BoundRule::lower_optimal_c23: return "lower_optimal_c23";
    case BoundRule::undecided_c01: return "undecided_c01";
    case BoundRule::undecided_corank2: return "undecided_corank2";
    case BoundRule::hermitian_lower_optimal: return "hermitian_lower_optimal";
  }
  return "?";
}

std::string_view to_string(BoundStatus status) {
  return status == BoundStatus::exact ? "exact" : "unknown";
}

void BoundQuery::validate() const {
  const unsigned max_s = field == Field::real ? 2 : 1;
  if (s > max_s) {
    throw std::domain_error("corank s=" + std::to_string(s) + " is outside 0.." +
                            std::to_string(max_s) + " for " +
                            (field == Field::real ? "real symmetric" : "hermitian") + " matrices");
  }
  if (n <= s) throw std::domain_error("matrix size n must exceed the corank s");
}

BoundReport classify(const BoundQuery& query) {
  query.validate();
  BoundReport report;
  report.query = query;
  const Integer k = query.rank();

  auto settle = [&](std::uint64_t lower, std::uint64_t upper, BoundRule rule) {
    report.lower = lower;
    report.upper = upper;
    report.status = lower == upper ? BoundStatus::exact : BoundStatus::unknown;
    report.rule = rule;
    return report;
  };

  report.sigma = sigma(query.n, k, query.field);

  if (mpz_odd_p(k.get_mpz_t())) return settle(1, 1, BoundRule::odd_rank_inferred);

  const std::uint64_t sig = report.sigma;
  if (sig == rho_field(HalfInteger::half_of(k), query.field)) {
    return settle(sig + 1, sig + 1, BoundRule::upper_attained);
  }

  if (query.field == Field::complex) return settle(sig, sig, BoundRule::hermitian_lower_optimal);

  if (query.s == 1) {
    // k even and rho(k/2) < sigma, so sigma = rho((n+1)/2).
    const Integer half_up = (query.n + 1) / 2;
    if (half_up == 2) return settle(sig, sig, BoundRule::lower_optimal_n3);
    const unsigned c = factor_dyadic(half_up).c;
    if (c == 2 || c == 3) return settle(sig, sig, BoundRule::lower_optimal_c23);
    return settle(sig, sig + 1, BoundRule::undecided_c01);
  }

  // Real, s = 2, sigma > rho((n-2)/2).
  return settle(sig, sig + 1, BoundRule::undecided_corank2);
}

}  // namespace rhspaces
