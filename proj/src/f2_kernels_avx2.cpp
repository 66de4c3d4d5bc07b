#include "ksalg/f2_kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#endif

namespace ksalg::f2 {

#if defined(__x86_64__) || defined(__i386__)

__attribute__((target("avx2"))) void xor_row_avx2(std::uint64_t* dst, const std::uint64_t* src,
                                                  std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + w));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w), _mm256_xor_si256(a, b));
  }
  for (; w < words; ++w) dst[w] ^= src[w];
}

__attribute__((target("avx2"))) bool is_zero_avx2(const std::uint64_t* row, std::size_t words) {
  std::size_t w = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; w + 4 <= words; w += 4)
    acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + w)));
  std::uint64_t tail = 0;
  for (; w < words; ++w) tail |= row[w];
  return _mm256_testz_si256(acc, acc) && tail == 0;
}

#else

void xor_row_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  xor_row_scalar(dst, src, words);
}
bool is_zero_avx2(const std::uint64_t* row, std::size_t words) { return is_zero_scalar(row, words); }

#endif

}  // namespace ksalg::f2
