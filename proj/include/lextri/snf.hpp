#pragma once

#include <cstdint>
#include <vector>

namespace lextri {

// Nonzero invariant factors d1 | d2 | ... of an integer matrix, positive,
// in divisibility order.  Row/column operations run in 64-bit arithmetic
// and transparently redo the computation in arbitrary precision if any
// intermediate value overflows.
std::vector<std::int64_t> smith_normal_form(std::vector<std::vector<std::int64_t>> m);

}  // namespace lextri
