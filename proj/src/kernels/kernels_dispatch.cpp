// Runtime kernel selection. Compiled without SIMD flags so that feature
// detection itself runs on any CPU.

#include <cstdlib>

#include "bf/kernels.hpp"

namespace bf::kernels {

namespace {

struct Table {
  double (*min_value)(const double*, std::size_t);
  std::size_t (*find_next_equal)(const double*, std::size_t, std::size_t, double);
  void (*min_inplace)(double*, const double*, std::size_t);
  void (*sub_scalar)(double*, const double*, double, std::size_t);
  const char* name;
};

constexpr Table kScalarTable{scalar::min_value, scalar::find_next_equal,
                             scalar::min_inplace, scalar::sub_scalar, "scalar"};

bool force_scalar() {
  const char* v = std::getenv("BF_FORCE_SCALAR");
  return v != nullptr && v[0] != '\0' && v[0] != '0';
}

Table select() {
  if (force_scalar()) return kScalarTable;
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2"))
    return Table{avx2::min_value, avx2::find_next_equal, avx2::min_inplace,
                 avx2::sub_scalar, "avx2"};
#endif
  return kScalarTable;
}

const Table& table() {
  static const Table t = select();
  return t;
}

}  // namespace

double min_value(const double* x, std::size_t n) { return table().min_value(x, n); }

std::size_t find_next_equal(const double* x, std::size_t n, std::size_t start,
                            double v) {
  return table().find_next_equal(x, n, start, v);
}

void min_inplace(double* dst, const double* src, std::size_t n) {
  table().min_inplace(dst, src, n);
}

void sub_scalar(double* dst, const double* src, double c, std::size_t n) {
  table().sub_scalar(dst, src, c, n);
}

std::string_view active_variant() { return table().name; }

}  // namespace bf::kernels
