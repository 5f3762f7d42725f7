#include "qi/core.hpp"

#include <cmath>
#include <cstdlib>

#ifdef QI_HAS_OPENMP
#include <omp.h>
#endif

namespace qi {

const Mat& pauli(int a) {
  static const Mat s0 = (Mat(2, 2) << 1, 0, 0, 1).finished();
  static const Mat sx = (Mat(2, 2) << 0, 1, 1, 0).finished();
  static const Mat sy =
      (Mat(2, 2) << 0, cxd(0, -1), cxd(0, 1), 0).finished();
  static const Mat sz = (Mat(2, 2) << 1, 0, 0, -1).finished();
  switch (a) {
    case 0: return s0;
    case 1: return sx;
    case 2: return sy;
    case 3: return sz;
  }
  throw InvalidState("pauli index must be 0..3");
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double xlog2x(double p) {
  if (p <= 0.0) return 0.0;
  return p * std::log2(p);
}

namespace {
int g_thread_override = 0;
}

int max_threads() {
#ifdef QI_HAS_OPENMP
  if (g_thread_override > 0) return g_thread_override;
  if (const char* env = std::getenv("QI_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) { g_thread_override = n > 0 ? n : 0; }

void run_indexed(std::size_t n, const std::function<void(std::size_t)>& fn,
                 Exec exec) {
#ifdef QI_HAS_OPENMP
  if (exec == Exec::parallel && n > 1) {
    const int nt = max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

std::string version_string() { return "qi 1.0.0"; }

}  // namespace qi
