#include <random>
#include <vector>

#include "bf/kernels.hpp"
#include "doctest.h"

using namespace bf;

namespace {

// Random vectors salted with infinities and planted duplicates so ties and
// absent-arc sentinels are exercised.
std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> w(-100.0, 100.0);
  std::bernoulli_distribution inf(0.15);
  std::vector<double> x(n);
  for (auto& e : x) e = inf(rng) ? std::numeric_limits<double>::infinity() : w(rng);
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int dup = 0; dup < 3; ++dup) x[pick(rng)] = x[pick(rng)];
  }
  return x;
}

}  // namespace

TEST_CASE("kernel variants agree on min_value and find_next_equal") {
  std::mt19937_64 rng(1234);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 31u, 64u, 100u}) {
    for (int trial = 0; trial < 50; ++trial) {
      auto x = random_vector(rng, n);
      double m_ref = kernels::scalar::min_value(x.data(), n);
      double m_disp = kernels::min_value(x.data(), n);
      CHECK(m_ref == m_disp);
#if defined(__x86_64__)
      if (kernels::active_variant() == "avx2")
        CHECK(kernels::avx2::min_value(x.data(), n) == m_ref);
#endif
      if (n == 0) continue;
      // every occurrence index must match, walked to exhaustion
      std::size_t i_ref = 0, i_disp = 0;
      while (true) {
        i_ref = kernels::scalar::find_next_equal(x.data(), n, i_ref, m_ref);
        i_disp = kernels::find_next_equal(x.data(), n, i_disp, m_ref);
        CHECK(i_ref == i_disp);
        if (i_ref >= n) break;
        ++i_ref;
        ++i_disp;
      }
    }
  }
}

TEST_CASE("kernel variants agree on min_inplace and sub_scalar") {
  std::mt19937_64 rng(99);
  for (std::size_t n : {0u, 1u, 3u, 4u, 6u, 8u, 13u, 32u, 65u}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto dst0 = random_vector(rng, n);
      auto src = random_vector(rng, n);
      auto dst_ref = dst0, dst_disp = dst0;
      kernels::scalar::min_inplace(dst_ref.data(), src.data(), n);
      kernels::min_inplace(dst_disp.data(), src.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(dst_ref[i] == dst_disp[i]);

      double c = std::uniform_real_distribution<double>(-5.0, 5.0)(rng);
      std::vector<double> out_ref(n), out_disp(n);
      kernels::scalar::sub_scalar(out_ref.data(), src.data(), c, n);
      kernels::sub_scalar(out_disp.data(), src.data(), c, n);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(out_ref[i] == out_disp[i]);
        if (src[i] == std::numeric_limits<double>::infinity())
          CHECK(out_ref[i] == std::numeric_limits<double>::infinity());
      }
    }
  }
}

TEST_CASE("kernel edge semantics") {
  CHECK(kernels::min_value(nullptr, 0) == std::numeric_limits<double>::infinity());
  double one = 1.0;
  CHECK(kernels::find_next_equal(&one, 1, 0, 2.0) == 1);
  CHECK(kernels::find_next_equal(&one, 1, 1, 1.0) == 1);
  CHECK(kernels::find_next_equal(&one, 1, 0, 1.0) == 0);
  // in-place sub_scalar aliasing
  std::vector<double> x{1.0, 2.0, 3.0, 4.0, 5.0};
  kernels::sub_scalar(x.data(), x.data(), 1.0, x.size());
  CHECK(x == std::vector<double>{0.0, 1.0, 2.0, 3.0, 4.0});
  MESSAGE("active kernel variant: ", kernels::active_variant());
}
