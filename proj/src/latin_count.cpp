#include "qgc/latin_count.hpp"

#include <array>
#include <bit>

#include "qgc/error.hpp"

namespace qgc {

namespace {

constexpr int kMaxExhaustiveOrder = 6;

// Backtracks over the free cells (row >= 1, column >= 1) in row-major
// order; the first row and column are pinned to natural order. row_used
// and col_used hold one bit per symbol already placed in that line.
struct ReducedCounter {
  int n;
  std::uint32_t full_mask;
  std::array<std::uint32_t, kMaxExhaustiveOrder> row_used{};
  std::array<std::uint32_t, kMaxExhaustiveOrder> col_used{};
  std::uint64_t count = 0;

  void fill(int r, int c) {
    if (r == n) {
      ++count;
      return;
    }
    const int next_r = (c + 1 == n) ? r + 1 : r;
    const int next_c = (c + 1 == n) ? 1 : c + 1;
    std::uint32_t candidates = full_mask & ~(row_used[r] | col_used[c]);
    while (candidates != 0) {
      const std::uint32_t bit = candidates & (~candidates + 1);
      candidates ^= bit;
      row_used[r] |= bit;
      col_used[c] |= bit;
      fill(next_r, next_c);
      row_used[r] ^= bit;
      col_used[c] ^= bit;
    }
  }
};

}  // namespace

std::uint64_t count_reduced_latin_squares(int order) {
  if (order < 1) {
    throw TableError(TableError::Kind::order_out_of_range, order,
                     "order must be positive");
  }
  if (order > kMaxExhaustiveOrder) {
    throw TableError(TableError::Kind::order_too_large_for_exhaustive, order,
                     "exhaustive count supports order <= 6, got " +
                         std::to_string(order));
  }
  if (order <= 2) {
    return 1;
  }

  ReducedCounter counter;
  counter.n = order;
  counter.full_mask = (1u << order) - 1;
  for (int i = 0; i < order; ++i) {
    counter.row_used[i] = 1u << i;   // column 0 holds symbol i in row i
    counter.col_used[i] = 1u << i;   // row 0 holds symbol i in column i
  }
  counter.fill(1, 1);
  return counter.count;
}

}  // namespace qgc
