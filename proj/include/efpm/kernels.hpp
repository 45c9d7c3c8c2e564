#pragma once

#include <cstddef>

// Inner-loop kernels shared by the solver and the audit: valuation-row
// materialization, the best-surplus max-reduction and the adjacent
// inverse-Monge row test. Each kernel has a scalar reference implementation
// and, on x86-64, an AVX2 variant. The dispatched function pointers are set
// once at startup from a CPU check and can be overridden with
// select_backend(). Both variants perform the same multiply/subtract per
// element (no FMA, contraction disabled), so their results are bit-identical;
// the equivalence tests assert exact equality.

namespace efpm::kernels {

enum class Backend { scalar, avx2 };

// out[i] = scale * q[i] for i in [0, n)
void scale_row_scalar(double scale, const double* q, double* out, std::size_t n);

// max over i in [0, n) of scale * q[i] - p[i]; requires n >= 1
double best_surplus_scalar(double scale, const double* q, const double* p,
                           std::size_t n);

// Smallest index attaining the best-surplus maximum within tol. Diagnostic
// helper, scalar only.
std::size_t best_surplus_argmax(double scale, const double* q, const double* p,
                                std::size_t n, double tol);

// true iff hi[k] + lo[k+1] >= hi[k+1] + lo[k] - tol for all adjacent column
// pairs of two consecutive rows
bool monge_rows_ok_scalar(const double* hi, const double* lo, std::size_t n,
                          double tol);

// Dispatched entry points. Calling them from multiple threads is fine;
// select_backend must not race with in-flight solves.
extern void (*scale_row)(double scale, const double* q, double* out, std::size_t n);
extern double (*best_surplus)(double scale, const double* q, const double* p,
                              std::size_t n);
extern bool (*monge_rows_ok)(const double* hi, const double* lo, std::size_t n,
                             double tol);

bool backend_available(Backend b);
void select_backend(Backend b);  // throws Error(invalid_spec) if unavailable
Backend active_backend();
const char* backend_name(Backend b);

}  // namespace efpm::kernels
