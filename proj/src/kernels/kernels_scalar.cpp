#include <bit>
#include <vector>

#include "thinness/kernels.hpp"

namespace thinness::kernels {

void boundary_table_scalar(const std::uint32_t* nbr, int n, std::uint8_t* out) {
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<std::uint32_t> nset(total, 0);
  for (std::uint32_t y = 1; y < total; ++y) nset[y] = nset[y & (y - 1)] | nbr[std::countr_zero(y)];
  for (std::uint32_t y = 0; y < total; ++y) out[y] = static_cast<std::uint8_t>(std::popcount(nset[y] & ~y));
}

void box_row_scalar(const std::int32_t* x1, const std::int32_t* x2, const std::int32_t* y1, const std::int32_t* y2,
                    int m, int i, std::uint64_t* row) {
  const int words = (m + 63) / 64;
  for (int w = 0; w < words; ++w) row[w] = 0;
  for (int j = 0; j < m; ++j)
    if (x1[i] <= x2[j] && x1[j] <= x2[i] && y1[i] <= y2[j] && y1[j] <= y2[i])
      row[j >> 6] |= std::uint64_t{1} << (j & 63);
}

}  // namespace thinness::kernels
