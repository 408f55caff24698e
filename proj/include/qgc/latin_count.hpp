#pragma once

#include <cstdint>

namespace qgc {

// Exhaustively counts Latin squares of the given order whose first row and
// first column are in natural order. Exact; feasible for order <= 6.
// Throws TableError(order_too_large_for_exhaustive) above that.
std::uint64_t count_reduced_latin_squares(int order);

}  // namespace qgc
