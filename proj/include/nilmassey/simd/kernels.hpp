#pragma once

// Modular vector kernels used by the inner loops of series products, matrix
// products and elimination. Every kernel has a scalar reference variant; an
// AVX2 variant is compiled on x86-64 and picked at runtime when the CPU
// supports it. Both variants must produce bit-identical output.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace nilmassey::simd {

enum class KernelKind { scalar, avx2 };

/// Vector variants only handle moduli up to this bound (products stay below
/// 2^30, so they fit signed 32-bit lanes). Larger moduli fall back to scalar.
inline constexpr uint32_t kVectorModulusLimit = 1u << 15;

struct KernelTable {
  std::string_view name;
  // y[i] = (y[i] + c * x[i]) mod m
  void (*axpy_mod)(uint32_t* y, const uint32_t* x, std::size_t len, uint32_t c, uint32_t m);
  // y[i] = (y[i] + x[i]) mod m
  void (*add_mod)(uint32_t* y, const uint32_t* x, std::size_t len, uint32_t m);
  // y[i] = (c * y[i]) mod m
  void (*scale_mod)(uint32_t* y, std::size_t len, uint32_t c, uint32_t m);
};

bool supported(KernelKind kind);
const KernelTable& table(KernelKind kind);

/// Currently selected table. Initialized from CPU detection; the environment
/// variable NILMASSEY_KERNELS=scalar|avx2 overrides the choice.
const KernelTable& active();

/// Returns false (and leaves the selection unchanged) if unsupported.
bool select(KernelKind kind);

inline void axpy_mod(std::span<uint32_t> y, std::span<const uint32_t> x, uint32_t c, uint32_t m) {
  active().axpy_mod(y.data(), x.data(), y.size(), c, m);
}
inline void add_mod(std::span<uint32_t> y, std::span<const uint32_t> x, uint32_t m) {
  active().add_mod(y.data(), x.data(), y.size(), m);
}
inline void scale_mod(std::span<uint32_t> y, uint32_t c, uint32_t m) {
  active().scale_mod(y.data(), y.size(), c, m);
}

namespace detail {
extern const KernelTable kScalarTable;
#if defined(NILMASSEY_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
}  // namespace detail

}  // namespace nilmassey::simd
