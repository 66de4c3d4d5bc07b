#pragma once

#include <cstddef>
#include <cstdint>

// Word-level F2 row kernels. Scalar versions are the reference; AVX2 versions are picked
// at runtime when the CPU has them.
namespace ksalg::f2 {

enum class Kernel { Scalar, Avx2 };

void xor_row_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
bool is_zero_scalar(const std::uint64_t* row, std::size_t words);

// Only callable when avx2_available().
void xor_row_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
bool is_zero_avx2(const std::uint64_t* row, std::size_t words);

bool avx2_available();
Kernel active_kernel();
// Throws InvalidArgument when asking for AVX2 on a CPU without it.
void set_kernel(Kernel k);

void xor_row(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
bool is_zero(const std::uint64_t* row, std::size_t words);

}  // namespace ksalg::f2
