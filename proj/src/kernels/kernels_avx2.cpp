// Compiled with -mavx2; only reached after a runtime CPU check.
#include "monotone/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

namespace monotone::kernels::avx2 {
namespace {

void creator(std::uint32_t* states, std::size_t n, unsigned bit) {
  const std::uint32_t low = (2u << bit) - 1u;
  const std::uint32_t set = 1u << bit;
  const __m256i vlow = _mm256_set1_epi32(static_cast<int>(low));
  const __m256i vset = _mm256_set1_epi32(static_cast<int>(set));
  const __m256i vnone = _mm256_set1_epi32(-1);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t x = 0;
  for (; x + 8 <= n; x += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(states + x));
    __m256i ok = _mm256_cmpeq_epi32(_mm256_and_si256(s, vlow), zero);
    __m256i r = _mm256_blendv_epi8(vnone, _mm256_or_si256(s, vset), ok);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(states + x), r);
  }
  for (; x < n; ++x) states[x] = (states[x] & low) == 0 ? (states[x] | set) : kNone;
}

void annihilator(std::uint32_t* states, std::size_t n, unsigned bit) {
  const std::uint32_t low = (2u << bit) - 1u;
  const std::uint32_t set = 1u << bit;
  const __m256i vlow = _mm256_set1_epi32(static_cast<int>(low));
  const __m256i vset = _mm256_set1_epi32(static_cast<int>(set));
  const __m256i vnone = _mm256_set1_epi32(-1);
  std::size_t x = 0;
  for (; x + 8 <= n; x += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(states + x));
    __m256i lead = _mm256_cmpeq_epi32(_mm256_and_si256(s, vlow), vset);
    __m256i none = _mm256_cmpeq_epi32(s, vnone);
    __m256i ok = _mm256_andnot_si256(none, lead);
    __m256i r = _mm256_blendv_epi8(vnone, _mm256_andnot_si256(vset, s), ok);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(states + x), r);
  }
  for (; x < n; ++x) {
    const std::uint32_t s = states[x];
    states[x] = (s != kNone && (s & low) == set) ? (s & ~set) : kNone;
  }
}

void gather(std::uint32_t* out, const std::uint32_t* outer, const std::uint32_t* inner, std::size_t n) {
  const __m256i vnone = _mm256_set1_epi32(-1);
  const int* base = reinterpret_cast<const int*>(outer);
  std::size_t x = 0;
  for (; x + 8 <= n; x += 8) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(inner + x));
    __m256i valid = _mm256_xor_si256(_mm256_cmpeq_epi32(idx, vnone), vnone);
    __m256i r = _mm256_mask_i32gather_epi32(vnone, base, idx, valid, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + x), r);
  }
  for (; x < n; ++x) out[x] = inner[x] == kNone ? kNone : outer[inner[x]];
}

std::size_t count_fixed(const std::uint32_t* map, std::size_t n) {
  std::size_t count = 0;
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(8);
  std::size_t x = 0;
  for (; x + 8 <= n; x += 8) {
    __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(map + x));
    __m256i eq = _mm256_cmpeq_epi32(m, iota);
    count += static_cast<std::size_t>(__builtin_popcount(_mm256_movemask_ps(_mm256_castsi256_ps(eq))));
    iota = _mm256_add_epi32(iota, step);
  }
  for (; x < n; ++x) count += map[x] == x;
  return count;
}

constexpr Table kTable{"avx2", creator, annihilator, gather, count_fixed};

}  // namespace

const Table* table() { return &kTable; }

}  // namespace monotone::kernels::avx2

#else

namespace monotone::kernels::avx2 {
const Table* table() { return nullptr; }
}  // namespace monotone::kernels::avx2

#endif
