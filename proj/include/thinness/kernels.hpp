#pragma once

#include <cstdint>

// Hot loops with a scalar reference implementation and an AVX2 variant picked
// at runtime. Setting THINNESS_FORCE_SCALAR=1 pins the scalar path.
namespace thinness::kernels {

enum class Isa { scalar, avx2 };

bool avx2_available();
Isa active_isa();
const char* isa_name(Isa isa);

// out[Y] = |N(Y) \ Y| for every subset Y of {0..n-1}; nbr[v] is the neighbour mask of v.
// n <= 24; out must hold 2^n entries.
void boundary_table(const std::uint32_t* nbr, int n, std::uint8_t* out);
void boundary_table_scalar(const std::uint32_t* nbr, int n, std::uint8_t* out);
void boundary_table_avx2(const std::uint32_t* nbr, int n, std::uint8_t* out);

// Closed-rectangle test of box i against boxes 0..m-1 (structure of arrays).
// Bit j of row is set iff the boxes meet; row holds (m+63)/64 words and is overwritten.
void box_row(const std::int32_t* x1, const std::int32_t* x2, const std::int32_t* y1, const std::int32_t* y2, int m,
             int i, std::uint64_t* row);
void box_row_scalar(const std::int32_t* x1, const std::int32_t* x2, const std::int32_t* y1, const std::int32_t* y2,
                    int m, int i, std::uint64_t* row);
void box_row_avx2(const std::int32_t* x1, const std::int32_t* x2, const std::int32_t* y1, const std::int32_t* y2, int m,
                  int i, std::uint64_t* row);

}  // namespace thinness::kernels
