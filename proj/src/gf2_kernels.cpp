#include "msp/gf2.hpp"

namespace msp::gf2 {

void xor_rows_scalar(Word* dst, const Word* src, size_t nwords) {
  for (size_t i = 0; i < nwords; ++i) dst[i] ^= src[i];
}

#if defined(__aarch64__)
#include <arm_neon.h>
void xor_rows_neon(Word* dst, const Word* src, size_t nwords) {
  size_t i = 0;
  for (; i + 2 <= nwords; i += 2) {
    uint64x2_t a = vld1q_u64(dst + i);
    uint64x2_t b = vld1q_u64(src + i);
    vst1q_u64(dst + i, veorq_u64(a, b));
  }
  for (; i < nwords; ++i) dst[i] ^= src[i];
}
#endif

const Kernel& active_kernel() {
  static const Kernel kernel = [] {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return Kernel{xor_rows_avx2, "avx2"};
#endif
#if defined(__aarch64__)
    return Kernel{xor_rows_neon, "neon"};
#endif
    return Kernel{xor_rows_scalar, "scalar"};
  }();
  return kernel;
}

std::vector<Kernel> available_kernels() {
  std::vector<Kernel> out{{xor_rows_scalar, "scalar"}};
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) out.push_back({xor_rows_avx2, "avx2"});
#endif
#if defined(__aarch64__)
  out.push_back({xor_rows_neon, "neon"});
#endif
  return out;
}

}  // namespace msp::gf2
