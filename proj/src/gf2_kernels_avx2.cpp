// AVX2 variant of the row-combination kernel. Compiled with -mavx2 for
// this translation unit only; callers reach it through active_kernel(),
// which checks CPU support at runtime.
#include "msp/gf2.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace msp::gf2 {

void xor_rows_avx2(Word* dst, const Word* src, size_t nwords) {
  size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
  }
  for (; i < nwords; ++i) dst[i] ^= src[i];
}

}  // namespace msp::gf2
#endif
