#include <immintrin.h>

#include <bit>
#include <vector>

#include "thinness/kernels.hpp"

namespace thinness::kernels {

#if defined(__x86_64__) || defined(__i386__)

namespace {

__attribute__((target("avx2"))) inline __m256i popcount32(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2,
                                       3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_srli_epi32(_mm256_mullo_epi32(bytes, _mm256_set1_epi32(0x01010101)), 24);
}

}  // namespace

__attribute__((target("avx2"))) void boundary_table_avx2(const std::uint32_t* nbr, int n, std::uint8_t* out) {
  if (n < 3) {
    boundary_table_scalar(nbr, n, out);
    return;
  }
  const int lo_bits = n < 10 ? n : 10;
  const int hi_bits = n - lo_bits;
  const std::uint32_t lo_total = std::uint32_t{1} << lo_bits;
  const std::uint32_t hi_total = std::uint32_t{1} << hi_bits;
  std::vector<std::uint32_t> nlo(lo_total, 0), nhi(hi_total, 0);
  for (std::uint32_t l = 1; l < lo_total; ++l) nlo[l] = nlo[l & (l - 1)] | nbr[std::countr_zero(l)];
  for (std::uint32_t h = 1; h < hi_total; ++h) nhi[h] = nhi[h & (h - 1)] | nbr[lo_bits + std::countr_zero(h)];
  const __m256i step = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  alignas(32) std::uint32_t lanes[8];
  for (std::uint32_t h = 0; h < hi_total; ++h) {
    const __m256i nh = _mm256_set1_epi32(static_cast<int>(nhi[h]));
    const std::uint32_t base = h << lo_bits;
    for (std::uint32_t l = 0; l < lo_total; l += 8) {
      __m256i nl = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(nlo.data() + l));
      __m256i y = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(base | l)), step);
      __m256i open = _mm256_andnot_si256(y, _mm256_or_si256(nh, nl));
      _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), popcount32(open));
      std::uint8_t* dst = out + base + l;
      for (int t = 0; t < 8; ++t) dst[t] = static_cast<std::uint8_t>(lanes[t]);
    }
  }
}

__attribute__((target("avx2"))) void box_row_avx2(const std::int32_t* x1, const std::int32_t* x2,
                                                  const std::int32_t* y1, const std::int32_t* y2, int m, int i,
                                                  std::uint64_t* row) {
  const int words = (m + 63) / 64;
  for (int w = 0; w < words; ++w) row[w] = 0;
  const __m256i ix1 = _mm256_set1_epi32(x1[i]), ix2 = _mm256_set1_epi32(x2[i]);
  const __m256i iy1 = _mm256_set1_epi32(y1[i]), iy2 = _mm256_set1_epi32(y2[i]);
  int j = 0;
  for (; j + 8 <= m; j += 8) {
    __m256i jx1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x1 + j));
    __m256i jx2 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x2 + j));
    __m256i jy1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y1 + j));
    __m256i jy2 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y2 + j));
    __m256i miss = _mm256_or_si256(_mm256_cmpgt_epi32(ix1, jx2), _mm256_cmpgt_epi32(jx1, ix2));
    miss = _mm256_or_si256(miss, _mm256_or_si256(_mm256_cmpgt_epi32(iy1, jy2), _mm256_cmpgt_epi32(jy1, iy2)));
    std::uint64_t hit = ~static_cast<std::uint64_t>(_mm256_movemask_ps(_mm256_castsi256_ps(miss))) & 0xffU;
    row[j >> 6] |= hit << (j & 63);
  }
  for (; j < m; ++j)
    if (x1[i] <= x2[j] && x1[j] <= x2[i] && y1[i] <= y2[j] && y1[j] <= y2[i])
      row[j >> 6] |= std::uint64_t{1} << (j & 63);
}

#else

void boundary_table_avx2(const std::uint32_t* nbr, int n, std::uint8_t* out) { boundary_table_scalar(nbr, n, out); }
void box_row_avx2(const std::int32_t* x1, const std::int32_t* x2, const std::int32_t* y1, const std::int32_t* y2,
                  int m, int i, std::uint64_t* row) {
  box_row_scalar(x1, x2, y1, y2, m, i, row);
}

#endif

}  // namespace thinness::kernels
