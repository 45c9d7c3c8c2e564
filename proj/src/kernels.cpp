#include "efpm/kernels.hpp"

#include <algorithm>
#include <cassert>

#include "efpm/errors.hpp"

#if EFPM_HAVE_AVX2
#include "kernels_avx2.hpp"
#endif

namespace efpm::kernels {

void scale_row_scalar(double scale, const double* q, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = scale * q[i];
}

double best_surplus_scalar(double scale, const double* q, const double* p,
                           std::size_t n) {
  assert(n >= 1);
  double best = scale * q[0] - p[0];
  for (std::size_t i = 1; i < n; ++i) best = std::max(best, scale * q[i] - p[i]);
  return best;
}

std::size_t best_surplus_argmax(double scale, const double* q, const double* p,
                                std::size_t n, double tol) {
  const double best = best_surplus_scalar(scale, q, p, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (scale * q[i] - p[i] >= best - tol) return i;
  }
  return 0;  // unreachable: the maximizer itself qualifies
}

bool monge_rows_ok_scalar(const double* hi, const double* lo, std::size_t n,
                          double tol) {
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (hi[k] + lo[k + 1] < hi[k + 1] + lo[k] - tol) return false;
  }
  return true;
}

namespace {

bool cpu_supports_avx2() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Backend g_active = Backend::scalar;

Backend detect() {
#if EFPM_HAVE_AVX2
  if (cpu_supports_avx2()) return Backend::avx2;
#endif
  return Backend::scalar;
}

}  // namespace

void (*scale_row)(double, const double*, double*, std::size_t) = scale_row_scalar;
double (*best_surplus)(double, const double*, const double*, std::size_t) =
    best_surplus_scalar;
bool (*monge_rows_ok)(const double*, const double*, std::size_t, double) =
    monge_rows_ok_scalar;

bool backend_available(Backend b) {
  switch (b) {
    case Backend::scalar: return true;
    case Backend::avx2:
#if EFPM_HAVE_AVX2
      return cpu_supports_avx2();
#else
      return false;
#endif
  }
  return false;
}

void select_backend(Backend b) {
  if (!backend_available(b)) {
    throw Error(Errc::invalid_spec,
                std::string("kernel backend unavailable: ") + backend_name(b));
  }
  switch (b) {
    case Backend::scalar:
      scale_row = scale_row_scalar;
      best_surplus = best_surplus_scalar;
      monge_rows_ok = monge_rows_ok_scalar;
      break;
    case Backend::avx2:
#if EFPM_HAVE_AVX2
      scale_row = scale_row_avx2;
      best_surplus = best_surplus_avx2;
      monge_rows_ok = monge_rows_ok_avx2;
#endif
      break;
  }
  g_active = b;
}

Backend active_backend() { return g_active; }

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "?";
}

namespace {
// Pick the widest available backend before main() runs.
struct BackendInit {
  BackendInit() { select_backend(detect()); }
} g_backend_init;
}  // namespace

}  // namespace efpm::kernels
