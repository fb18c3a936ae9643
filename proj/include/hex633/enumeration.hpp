#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hex633/hermitian.hpp"

namespace hex633 {

// All A with det(A) = 1, 0 < trace(A) <= T, canonically sorted.
// T < 2 yields an empty list.
std::vector<LatticePoint> enumerate_centers(std::int64_t T);

// All A != 0 with det(A) = 0, 0 < trace(A) <= T, canonically sorted.
// Both diagonal entries of a future null vector are necessarily >= 0.
std::vector<LatticePoint> enumerate_null(std::int64_t T, bool primitive_only);

// Histogram of enumerate_centers(T) by trace value.
std::map<std::int64_t, std::int64_t> count_by_trace(std::int64_t T);

}  // namespace hex633
