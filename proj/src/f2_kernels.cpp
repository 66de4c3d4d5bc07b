#include "ksalg/f2_kernels.hpp"

#include <atomic>

#include "ksalg/istates.hpp"

namespace ksalg::f2 {

void xor_row_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) dst[w] ^= src[w];
}

bool is_zero_scalar(const std::uint64_t* row, std::size_t words) {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words; ++w) acc |= row[w];
  return acc == 0;
}

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool has = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return has;
#else
  return false;
#endif
}

namespace {
using XorFn = void (*)(std::uint64_t*, const std::uint64_t*, std::size_t);
using ZeroFn = bool (*)(const std::uint64_t*, std::size_t);

struct Table {
  std::atomic<XorFn> xr;
  std::atomic<ZeroFn> zr;
  std::atomic<Kernel> kind;
  Table() {
    bool avx = avx2_available();
    xr = avx ? &xor_row_avx2 : &xor_row_scalar;
    zr = avx ? &is_zero_avx2 : &is_zero_scalar;
    kind = avx ? Kernel::Avx2 : Kernel::Scalar;
  }
};

Table& table() {
  static Table t;
  return t;
}
}  // namespace

Kernel active_kernel() { return table().kind.load(); }

void set_kernel(Kernel k) {
  if (k == Kernel::Avx2 && !avx2_available()) throw InvalidArgument("AVX2 not available on this CPU");
  Table& t = table();
  t.xr = k == Kernel::Avx2 ? &xor_row_avx2 : &xor_row_scalar;
  t.zr = k == Kernel::Avx2 ? &is_zero_avx2 : &is_zero_scalar;
  t.kind = k;
}

void xor_row(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  table().xr.load(std::memory_order_relaxed)(dst, src, words);
}

bool is_zero(const std::uint64_t* row, std::size_t words) {
  return table().zr.load(std::memory_order_relaxed)(row, words);
}

}  // namespace ksalg::f2
