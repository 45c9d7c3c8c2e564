#pragma once

#include <cstddef>

// Internal declarations for the AVX2 translation unit. Only compiled (and
// only referenced) when the build targets x86-64.

namespace efpm::kernels {

void scale_row_avx2(double scale, const double* q, double* out, std::size_t n);
double best_surplus_avx2(double scale, const double* q, const double* p,
                         std::size_t n);
bool monge_rows_ok_avx2(const double* hi, const double* lo, std::size_t n,
                        double tol);

}  // namespace efpm::kernels
