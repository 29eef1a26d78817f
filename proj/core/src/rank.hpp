#ifndef CMREG_SRC_RANK_HPP
#define CMREG_SRC_RANK_HPP

#include <cstdint>
#include <vector>

#include "cmreg/homology.hpp"

namespace cmreg::detail {

/** Dense row-major integer matrix for the elimination kernels. */
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;  // rows * cols entries

  long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/** Exact rank over the field: fraction-free (Bareiss) elimination for the
 *  rationals, modular elimination for GF(p). No floating point anywhere.
 *  The Bareiss pass runs in int64 with 128-bit intermediates and restarts
 *  with arbitrary-precision integers if a minor leaves the int64 range. */
int rank_over(const IntMatrix& m, const FieldSpec& field);

}  // namespace cmreg::detail

#endif
