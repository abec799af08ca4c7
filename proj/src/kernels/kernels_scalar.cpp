#include <limits>

#include "bf/kernels.hpp"

namespace bf::kernels::scalar {

double min_value(const double* x, std::size_t n) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] < m) m = x[i];
  return m;
}

std::size_t find_next_equal(const double* x, std::size_t n, std::size_t start,
                            double v) {
  for (std::size_t i = start; i < n; ++i)
    if (x[i] == v) return i;
  return n;
}

void min_inplace(double* dst, const double* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (src[i] < dst[i]) dst[i] = src[i];
}

void sub_scalar(double* dst, const double* src, double c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = src[i] - c;
}

}  // namespace bf::kernels::scalar
