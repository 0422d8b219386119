#include <atomic>
#include <cstdlib>
#include <string_view>

#include "nilmassey/simd/kernels.hpp"

namespace nilmassey::simd {
namespace {

bool cpu_has_avx2() {
#if defined(NILMASSEY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* initial_table() {
  const char* env = std::getenv("NILMASSEY_KERNELS");
  if (env != nullptr && std::string_view(env) == "scalar") return &detail::kScalarTable;
  if (supported(KernelKind::avx2)) return &table(KernelKind::avx2);
  return &detail::kScalarTable;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> ptr{initial_table()};
  return ptr;
}

}  // namespace

bool supported(KernelKind kind) {
  switch (kind) {
    case KernelKind::scalar:
      return true;
    case KernelKind::avx2:
      return cpu_has_avx2();
  }
  return false;
}

const KernelTable& table(KernelKind kind) {
#if defined(NILMASSEY_HAVE_AVX2)
  if (kind == KernelKind::avx2 && cpu_has_avx2()) return detail::kAvx2Table;
#endif
  (void)kind;
  return detail::kScalarTable;
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

bool select(KernelKind kind) {
  if (!supported(kind)) return false;
  current().store(&table(kind), std::memory_order_relaxed);
  return true;
}

}  // namespace nilmassey::simd
