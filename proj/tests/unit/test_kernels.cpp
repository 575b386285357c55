#include <random>
#include <vector>

#include "doctest.h"
#include "thinness/kernels.hpp"

using namespace thinness::kernels;

namespace {

std::vector<std::uint32_t> random_nbrs(int n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 3 == 0) nbr[u] |= 1U << v, nbr[v] |= 1U << u;
  return nbr;
}

}  // namespace

TEST_CASE("isa reporting") {
  CHECK(std::string(isa_name(Isa::scalar)) == "scalar");
  CHECK(std::string(isa_name(Isa::avx2)) == "avx2");
  if (!avx2_available()) CHECK(active_isa() == Isa::scalar);
}

TEST_CASE("boundary table scalar reference on a path") {
  // 0-1-2
  const std::uint32_t nbr[] = {0b010, 0b101, 0b010};
  std::vector<std::uint8_t> out(8);
  boundary_table_scalar(nbr, 3, out.data());
  CHECK(out[0b000] == 0);
  CHECK(out[0b001] == 1);
  CHECK(out[0b010] == 2);
  CHECK(out[0b011] == 1);
  CHECK(out[0b101] == 1);
  CHECK(out[0b111] == 0);
}

TEST_CASE("boundary table: dispatch and avx2 agree with scalar") {
  std::mt19937_64 rng(81);
  for (int n = 0; n <= 14; ++n)
    for (int rep = 0; rep < 3; ++rep) {
      auto nbr = random_nbrs(n, rng);
      const std::size_t size = std::size_t{1} << n;
      std::vector<std::uint8_t> ref(size), got(size);
      boundary_table_scalar(nbr.data(), n, ref.data());
      boundary_table(nbr.data(), n, got.data());
      CHECK(got == ref);
      if (avx2_available()) {
        std::vector<std::uint8_t> simd(size);
        boundary_table_avx2(nbr.data(), n, simd.data());
        CHECK(simd == ref);
      }
    }
}

TEST_CASE("box rows: dispatch and avx2 agree with scalar") {
  std::mt19937_64 rng(82);
  for (int m : {1, 2, 7, 8, 9, 63, 64, 65, 130}) {
    std::vector<std::int32_t> x1(m), x2(m), y1(m), y2(m);
    for (int i = 0; i < m; ++i) {
      x1[i] = static_cast<std::int32_t>(rng() % 40) - 20;
      x2[i] = x1[i] + static_cast<std::int32_t>(rng() % 8);
      y1[i] = static_cast<std::int32_t>(rng() % 40) - 20;
      y2[i] = y1[i] + static_cast<std::int32_t>(rng() % 8);
    }
    const std::size_t words = static_cast<std::size_t>((m + 63) / 64);
    for (int i = 0; i < m; ++i) {
      std::vector<std::uint64_t> ref(words, ~0ULL), got(words, ~0ULL);
      box_row_scalar(x1.data(), x2.data(), y1.data(), y2.data(), m, i, ref.data());
      for (int j = 0; j < m; ++j) {
        const bool meet = x1[i] <= x2[j] && x1[j] <= x2[i] && y1[i] <= y2[j] && y1[j] <= y2[i];
        CHECK(((ref[j >> 6] >> (j & 63)) & 1U) == static_cast<std::uint64_t>(meet));
      }
      box_row(x1.data(), x2.data(), y1.data(), y2.data(), m, i, got.data());
      CHECK(got == ref);
      if (avx2_available()) {
        std::vector<std::uint64_t> simd(words, ~0ULL);
        box_row_avx2(x1.data(), x2.data(), y1.data(), y2.data(), m, i, simd.data());
        CHECK(simd == ref);
      }
    }
  }
}
