#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qgc/rng.hpp"

namespace qgc {

struct EncryptResult {
  std::vector<std::uint8_t> ciphertext;
  // IV consumed by chained modes, empty otherwise. Travels alongside the
  // ciphertext; never part of it.
  std::vector<std::uint8_t> iv;
};

// Uniform cipher surface so different algorithms run under the same
// battery and throughput benchmarks. Implementations accept plaintext of
// any length and pad (pad byte = pad length, full extra block when
// already aligned), so decrypt(encrypt(m)) == m for every length.
class BlockCipher {
public:
  virtual ~BlockCipher() = default;

  virtual std::string name() const = 0;
  virtual std::size_t block_size() const = 0;
  virtual std::size_t key_size() const = 0;
  // True for cipher-block-chained modes (IVs in play).
  virtual bool chained() const = 0;
  // Bytes of precomputed lookup tables owned by the implementation.
  virtual std::size_t table_memory_bytes() const { return 0; }

  virtual EncryptResult encrypt(std::span<const std::uint8_t> key,
                                std::span<const std::uint8_t> plain,
                                RandomSource& rng) const = 0;
  virtual std::vector<std::uint8_t> decrypt(
      std::span<const std::uint8_t> key,
      std::span<const std::uint8_t> ciphertext,
      std::span<const std::uint8_t> iv) const = 0;
};

}  // namespace qgc
