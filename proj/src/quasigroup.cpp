#include "qgc/quasigroup.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "qgc/rng.hpp"

namespace qgc {

namespace {

std::vector<std::uint8_t> shuffled_identity(int n, SplitMix64& rng) {
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i + 1));
    std::swap(p[i], p[j]);
  }
  return p;
}

void check_symbols_below_order(std::span<const std::uint8_t> data, int order) {
  for (std::uint8_t b : data) {
    if (b >= order) {
      throw TableError(TableError::Kind::symbol_out_of_range, b,
                       "symbol " + std::to_string(b) +
                           " outside table order " + std::to_string(order));
    }
  }
}

}  // namespace

QuasigroupTable QuasigroupTable::validate(int order,
                                          std::vector<std::uint8_t> cells) {
  if (order < kMinOrder || order > kMaxOrder) {
    throw TableError(TableError::Kind::order_out_of_range, order,
                     "table order must be in [1,256], got " +
                         std::to_string(order));
  }
  const auto n = static_cast<std::size_t>(order);
  if (cells.size() != n * n) {
    throw Error("cell count " + std::to_string(cells.size()) +
                " does not match order " + std::to_string(order));
  }

  std::vector<bool> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t c = 0; c < n; ++c) {
      std::uint8_t v = cells[r * n + c];
      if (v >= order) {
        throw TableError(TableError::Kind::symbol_out_of_range, v,
                         "symbol " + std::to_string(v) + " at (" +
                             std::to_string(r) + "," + std::to_string(c) +
                             ") outside order " + std::to_string(order));
      }
      if (seen[v]) {
        throw TableError(TableError::Kind::duplicate_in_row,
                         static_cast<int>(r),
                         "duplicate symbol " + std::to_string(v) + " in row " +
                             std::to_string(r));
      }
      seen[v] = true;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t r = 0; r < n; ++r) {
      std::uint8_t v = cells[r * n + c];
      if (seen[v]) {
        throw TableError(TableError::Kind::duplicate_in_column,
                         static_cast<int>(c),
                         "duplicate symbol " + std::to_string(v) +
                             " in column " + std::to_string(c));
      }
      seen[v] = true;
    }
  }
  return QuasigroupTable(order, std::move(cells));
}

QuasigroupTable generate_table(int order, std::uint64_t gen_seed) {
  if (order < 2 || order > QuasigroupTable::kMaxOrder) {
    throw TableError(TableError::Kind::order_out_of_range, order,
                     "generated table order must be in [2,256], got " +
                         std::to_string(order));
  }
  SplitMix64 rng(gen_seed);
  const auto alpha = shuffled_identity(order, rng);
  const auto beta = shuffled_identity(order, rng);
  const auto gamma = shuffled_identity(order, rng);

  const auto n = static_cast<std::size_t>(order);
  std::vector<std::uint8_t> cells(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      cells[r * n + c] = gamma[(alpha[r] + beta[c]) % order];
    }
  }
  return QuasigroupTable(order, std::move(cells));
}

InverseTable invert_table(const QuasigroupTable& qg) {
  const int order = qg.order();
  const auto n = static_cast<std::size_t>(order);
  std::vector<std::uint8_t> inv(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      inv[r * n + qg.at(static_cast<int>(r), static_cast<int>(c))] =
          static_cast<std::uint8_t>(c);
    }
  }
  return InverseTable(order, std::move(inv));
}

void stream_encrypt_inplace(const QuasigroupTable& qg, std::uint8_t seed,
                            std::span<std::uint8_t> data) {
  const int order = qg.order();
  if (seed >= order) {
    throw TableError(TableError::Kind::symbol_out_of_range, seed,
                     "seed " + std::to_string(seed) + " outside table order " +
                         std::to_string(order));
  }
  const std::uint8_t* table = qg.cells().data();
  std::uint8_t prev = seed;
  if (order == QuasigroupTable::kCipherOrder) {
    for (auto& b : data) {
      prev = table[(static_cast<std::size_t>(prev) << 8) | b];
      b = prev;
    }
  } else {
    check_symbols_below_order(data, order);
    for (auto& b : data) {
      prev = table[static_cast<std::size_t>(prev) * order + b];
      b = prev;
    }
  }
}

std::vector<std::uint8_t> stream_encrypt(const QuasigroupTable& qg,
                                         std::uint8_t seed,
                                         std::span<const std::uint8_t> message) {
  std::vector<std::uint8_t> out(message.begin(), message.end());
  stream_encrypt_inplace(qg, seed, out);
  return out;
}

void stream_decrypt_inplace(const InverseTable& inv, std::uint8_t seed,
                            std::span<std::uint8_t> data) {
  const int order = inv.order();
  if (seed >= order) {
    throw TableError(TableError::Kind::symbol_out_of_range, seed,
                     "seed " + std::to_string(seed) + " outside table order " +
                         std::to_string(order));
  }
  const std::uint8_t* table = inv.cells().data();
  std::uint8_t prev = seed;
  if (order == QuasigroupTable::kCipherOrder) {
    for (auto& b : data) {
      std::uint8_t cur = b;
      b = table[(static_cast<std::size_t>(prev) << 8) | cur];
      prev = cur;
    }
  } else {
    check_symbols_below_order(data, order);
    for (auto& b : data) {
      std::uint8_t cur = b;
      b = table[static_cast<std::size_t>(prev) * order + cur];
      prev = cur;
    }
  }
}

std::vector<std::uint8_t> stream_decrypt(const InverseTable& inv,
                                         std::uint8_t seed,
                                         std::span<const std::uint8_t> cipher) {
  std::vector<std::uint8_t> out(cipher.begin(), cipher.end());
  stream_decrypt_inplace(inv, seed, out);
  return out;
}

void save_table(const QuasigroupTable& qg, std::ostream& out, TableFormat fmt) {
  const int n = qg.order();
  if (fmt == TableFormat::text) {
    out << "qg " << n << '\n';
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        out << static_cast<int>(qg.at(r, c)) << (c + 1 == n ? '\n' : ' ');
      }
    }
  } else {
    out << "qgb " << n << '\n';
    out.write(reinterpret_cast<const char*>(qg.cells().data()),
              static_cast<std::streamsize>(qg.cells().size()));
  }
  if (!out) {
    throw IoError("failed writing quasigroup table");
  }
}

void save_table(const QuasigroupTable& qg, const std::filesystem::path& path,
                TableFormat fmt) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  save_table(qg, out, fmt);
}

QuasigroupTable load_table(std::istream& in) {
  std::string magic;
  int order = 0;
  if (!(in >> magic >> order)) {
    throw IoError("missing quasigroup table header");
  }
  if (order < QuasigroupTable::kMinOrder ||
      order > QuasigroupTable::kMaxOrder) {
    throw TableError(TableError::Kind::order_out_of_range, order,
                     "table header order out of range: " +
                         std::to_string(order));
  }
  const auto n = static_cast<std::size_t>(order);
  std::vector<std::uint8_t> cells(n * n);

  if (magic == "qg") {
    for (auto& cell : cells) {
      int v = 0;
      if (!(in >> v)) {
        throw IoError("truncated quasigroup table body");
      }
      if (v < 0 || v > 255) {
        throw TableError(TableError::Kind::symbol_out_of_range, v,
                         "table entry " + std::to_string(v) +
                             " is not a byte");
      }
      cell = static_cast<std::uint8_t>(v);
    }
  } else if (magic == "qgb") {
    in.get();  // consume the newline ending the header line
    in.read(reinterpret_cast<char*>(cells.data()),
            static_cast<std::streamsize>(cells.size()));
    if (in.gcount() != static_cast<std::streamsize>(cells.size())) {
      throw IoError("truncated binary quasigroup table body");
    }
  } else {
    throw IoError("unknown quasigroup table magic: " + magic);
  }
  return QuasigroupTable::validate(order, std::move(cells));
}

QuasigroupTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  return load_table(in);
}

}  // namespace qgc
