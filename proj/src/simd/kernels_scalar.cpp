#include "nilmassey/simd/kernels.hpp"

namespace nilmassey::simd::detail {
namespace {

void axpy_mod_scalar(uint32_t* y, const uint32_t* x, std::size_t len, uint32_t c, uint32_t m) {
  const uint64_t mm = m;
  for (std::size_t i = 0; i < len; ++i)
    y[i] = static_cast<uint32_t>((y[i] + static_cast<uint64_t>(c) * x[i]) % mm);
}

void add_mod_scalar(uint32_t* y, const uint32_t* x, std::size_t len, uint32_t m) {
  for (std::size_t i = 0; i < len; ++i) {
    uint64_t s = static_cast<uint64_t>(y[i]) + x[i];
    y[i] = static_cast<uint32_t>(s >= m ? s - m : s);
  }
}

void scale_mod_scalar(uint32_t* y, std::size_t len, uint32_t c, uint32_t m) {
  for (std::size_t i = 0; i < len; ++i)
    y[i] = static_cast<uint32_t>(static_cast<uint64_t>(c) * y[i] % m);
}

}  // namespace

const KernelTable kScalarTable{"scalar", &axpy_mod_scalar, &add_mod_scalar, &scale_mod_scalar};

}  // namespace nilmassey::simd::detail
