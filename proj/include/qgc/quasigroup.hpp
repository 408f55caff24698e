#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "qgc/error.hpp"

namespace qgc {

// n x n Latin square over {0..n-1}. Row r is the left operand: the cell
// at (r, c) is the product r * c. Immutable after construction and safe
// to share across threads.
class QuasigroupTable {
public:
  static constexpr int kMinOrder = 1;
  static constexpr int kMaxOrder = 256;
  // Deployment order: one symbol per byte.
  static constexpr int kCipherOrder = 256;

  // Checks the Latin square property (every row and column a permutation
  // of {0..n-1}) and takes ownership of the cells on success. `cells` is
  // row-major with exactly order*order entries.
  static QuasigroupTable validate(int order, std::vector<std::uint8_t> cells);

  int order() const { return order_; }

  std::uint8_t at(int row, int col) const {
    return cells_[static_cast<std::size_t>(row) * order_ + col];
  }

  std::span<const std::uint8_t> cells() const { return cells_; }

  bool operator==(const QuasigroupTable&) const = default;

private:
  friend QuasigroupTable generate_table(int, std::uint64_t);

  QuasigroupTable(int order, std::vector<std::uint8_t> cells)
      : order_(order), cells_(std::move(cells)) {}

  int order_;
  std::vector<std::uint8_t> cells_;
};

// Companion table for the right-division operation: inverse(r, c) is the
// column where symbol c sits in row r of the source table, so
// inverse(r, qg(r, c)) == c for all cells.
class InverseTable {
public:
  int order() const { return order_; }

  std::uint8_t at(int row, int col) const {
    return cells_[static_cast<std::size_t>(row) * order_ + col];
  }

  std::span<const std::uint8_t> cells() const { return cells_; }

private:
  friend InverseTable invert_table(const QuasigroupTable&);

  InverseTable(int order, std::vector<std::uint8_t> cells)
      : order_(order), cells_(std::move(cells)) {}

  int order_;
  std::vector<std::uint8_t> cells_;
};

// Deterministic table construction: the cyclic square L0[i][j] = (i+j) mod n
// transformed by three independently shuffled permutations,
// table[i][j] = gamma(L0[alpha(i)][beta(j)]). Isotopy preserves the Latin
// property, so the result is valid by construction. The shuffles are
// Fisher-Yates driven by SplitMix64, so a given (order, gen_seed) pair
// yields the same table on every platform.
QuasigroupTable generate_table(int order, std::uint64_t gen_seed);

InverseTable invert_table(const QuasigroupTable& qg);

// Chained stream transform: c1 = qg(seed, m1), ci = qg(c(i-1), mi).
// Output length equals input length. The in-place variants overwrite the
// buffer as they go.
std::vector<std::uint8_t> stream_encrypt(const QuasigroupTable& qg,
                                         std::uint8_t seed,
                                         std::span<const std::uint8_t> message);
void stream_encrypt_inplace(const QuasigroupTable& qg, std::uint8_t seed,
                            std::span<std::uint8_t> data);

// Inverse transform: m1 = inv(seed, c1), mi = inv(c(i-1), ci).
std::vector<std::uint8_t> stream_decrypt(const InverseTable& inv,
                                         std::uint8_t seed,
                                         std::span<const std::uint8_t> cipher);
void stream_decrypt_inplace(const InverseTable& inv, std::uint8_t seed,
                            std::span<std::uint8_t> data);

// Table files. Text: header line "qg <order>" followed by n rows of n
// space-separated decimal symbols. Binary: header line "qgb <order>"
// followed by order*order raw bytes, row-major. Loading validates the
// Latin square property.
enum class TableFormat { text, binary };

void save_table(const QuasigroupTable& qg, std::ostream& out, TableFormat fmt);
void save_table(const QuasigroupTable& qg, const std::filesystem::path& path,
                TableFormat fmt);
QuasigroupTable load_table(std::istream& in);
QuasigroupTable load_table(const std::filesystem::path& path);

}  // namespace qgc
