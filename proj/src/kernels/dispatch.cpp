#include <cstdlib>
#include <cstring>

#include "thinness/kernels.hpp"

namespace thinness::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* force = std::getenv("THINNESS_FORCE_SCALAR");
    if (force && std::strcmp(force, "0") != 0) return Isa::scalar;
    return avx2_available() ? Isa::avx2 : Isa::scalar;
  }();
  return isa;
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void boundary_table(const std::uint32_t* nbr, int n, std::uint8_t* out) {
  if (active_isa() == Isa::avx2)
    boundary_table_avx2(nbr, n, out);
  else
    boundary_table_scalar(nbr, n, out);
}

void box_row(const std::int32_t* x1, const std::int32_t* x2, const std::int32_t* y1, const std::int32_t* y2, int m,
             int i, std::uint64_t* row) {
  if (active_isa() == Isa::avx2)
    box_row_avx2(x1, x2, y1, y2, m, i, row);
  else
    box_row_scalar(x1, x2, y1, y2, m, i, row);
}

}  // namespace thinness::kernels
