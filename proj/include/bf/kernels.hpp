#pragma once

#include <cstddef>
#include <string_view>

namespace bf::kernels {

// Dense double kernels behind the contraction loop. Each operation has a
// scalar reference implementation and, on x86-64, an AVX2 variant selected at
// runtime. Variants agree under double equality on every input (infinities
// and ties included) and return identical indices; the equivalence suite
// enforces this.

// Horizontal minimum of x[0..n). Returns +inf for n == 0.
double min_value(const double* x, std::size_t n);

// First index i in [start, n) with x[i] == v, or n if none.
std::size_t find_next_equal(const double* x, std::size_t n, std::size_t start,
                            double v);

// dst[i] = min(dst[i], src[i]) for i in [0, n).
void min_inplace(double* dst, const double* src, std::size_t n);

// dst[i] = src[i] - c for i in [0, n). In-place (dst == src) allowed.
void sub_scalar(double* dst, const double* src, double c, std::size_t n);

// Scalar reference path, always available; the equivalence tests compare the
// dispatched kernels against these.
namespace scalar {
double min_value(const double* x, std::size_t n);
std::size_t find_next_equal(const double* x, std::size_t n, std::size_t start,
                            double v);
void min_inplace(double* dst, const double* src, std::size_t n);
void sub_scalar(double* dst, const double* src, double c, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double min_value(const double* x, std::size_t n);
std::size_t find_next_equal(const double* x, std::size_t n, std::size_t start,
                            double v);
void min_inplace(double* dst, const double* src, std::size_t n);
void sub_scalar(double* dst, const double* src, double c, std::size_t n);
}  // namespace avx2
#endif

// Name of the active variant: "avx2" or "scalar". Selection happens once, at
// first use, from CPU feature detection; BF_FORCE_SCALAR=1 in the environment
// pins the scalar path.
std::string_view active_variant();

}  // namespace bf::kernels
