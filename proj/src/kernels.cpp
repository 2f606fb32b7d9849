#include "rhspaces/kernels.hpp"

#ifdef RHSPACES_HAVE_OPENMP
#include <omp.h>
#endif

#include <exception>
#include <stdexcept>

namespace rhspaces {

int kernel_threads() {
#ifdef RHSPACES_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

template <typename T>
SampleOutcome evaluate_one(std::span<const Matrix<T>> basis, const std::vector<Rational>& coeffs,
                           bool with_signature) {
  const Matrix<T> m = linear_combination<T>(basis, coeffs);
  SampleOutcome out;
  out.rank = exact_rank(m);
  if (with_signature) out.inertia = signature(m);
  return out;
}

}  // namespace

template <typename T>
std::vector<SampleOutcome> evaluate_samples(std::span<const Matrix<T>> basis,
                                            std::span<const std::vector<Rational>> coefficients,
                                            bool with_signature, Execution execution) {
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(coefficients.size());
  std::vector<SampleOutcome> out(coefficients.size());
  if (execution == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      out[i] = evaluate_one(basis, coefficients[i], with_signature);
    }
    return out;
  }
  // Exceptions may not cross the parallel region; keep the first and rethrow.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i] = evaluate_one(basis, coefficients[i], with_signature);
    } catch (...) {
#pragma omp critical(rhspaces_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

template <typename T>
Matrix<T> mul_parallel(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in mul");
  Matrix<T> out(a.rows(), b.cols());
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const T& bkj = b(k, j);
        if (!is_zero(bkj)) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

template std::vector<SampleOutcome> evaluate_samples<Rational>(
    std::span<const RealMatrix>, std::span<const std::vector<Rational>>, bool, Execution);
template std::vector<SampleOutcome> evaluate_samples<GaussianRational>(
    std::span<const ComplexMatrix>, std::span<const std::vector<Rational>>, bool, Execution);
template RealMatrix mul_parallel(const RealMatrix&, const RealMatrix&);
template ComplexMatrix mul_parallel(const ComplexMatrix&, const ComplexMatrix&);

}  // namespace rhspaces
