#include "lieclosed/batch.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lieclosed/oracle.hpp"
#include "lieclosed/zmethod.hpp"

namespace lieclosed {

int batch_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

// Applies fn to every input. Exceptions thrown inside the parallel region
// are captured and the first one is rethrown after the loop.
template <class Out, class In, class Fn>
std::vector<Out> run(std::span<const In> in, Execution exec, Fn fn) {
  std::vector<Out> out(in.size());
  const long count = static_cast<long>(in.size());
  if (exec == Execution::serial) {
    for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(in[static_cast<std::size_t>(i)]);
    return out;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(in[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(lieclosed_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace

std::vector<Mat4> lorentz_exp_batch(std::span<const LorentzParams> params, Execution exec) {
  return run<Mat4>(params, exec, [](const LorentzParams& p) { return lorentz_exp_closed(p); });
}

std::vector<Mat5> poincare_exp_batch(std::span<const PoincareParams> params, Execution exec) {
  return run<Mat5>(params, exec, [](const PoincareParams& p) { return poincare_exp_closed(p); });
}

std::vector<Mat5> galilei_exp_batch(std::span<const GalileiParams> params, Execution exec) {
  return run<Mat5>(params, exec, [](const GalileiParams& p) { return galilei_exp_closed(p); });
}

std::vector<Matrix> matrix_exp_batch(std::span<const Matrix> mats, Execution exec) {
  return run<Matrix>(mats, exec, [](const Matrix& a) { return matrix_exp(a); });
}

std::vector<Matrix> series_exp_batch(std::span<const Matrix> mats, double tol, Execution exec) {
  return run<Matrix>(mats, exec, [tol](const Matrix& a) { return oracle::series_exp(a, tol); });
}

}  // namespace lieclosed
