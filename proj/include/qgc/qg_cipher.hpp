#pragma once

#include "qgc/cbc.hpp"
#include "qgc/cipher.hpp"
#include "qgc/quasigroup.hpp"

namespace qgc {

// Registry adapters for the quasigroup block cipher. Each instance binds
// one table (and its precomputed inverse: 2 x order^2 bytes of lookup
// state) and pads with the shared scheme so arbitrary-length input works.

class QgEcbCipher final : public BlockCipher {
public:
  explicit QgEcbCipher(QuasigroupTable table);

  std::string name() const override { return "qg-ecb"; }
  std::size_t block_size() const override { return kBlockBytes; }
  std::size_t key_size() const override { return kKeyBytes; }
  bool chained() const override { return false; }
  std::size_t table_memory_bytes() const override;

  EncryptResult encrypt(std::span<const std::uint8_t> key,
                        std::span<const std::uint8_t> plain,
                        RandomSource& rng) const override;
  std::vector<std::uint8_t> decrypt(
      std::span<const std::uint8_t> key,
      std::span<const std::uint8_t> ciphertext,
      std::span<const std::uint8_t> iv) const override;

private:
  QuasigroupTable table_;
  InverseTable inverse_;
};

class QgCbcCipher final : public BlockCipher {
public:
  explicit QgCbcCipher(QuasigroupTable table);

  std::string name() const override { return "qg-cbc"; }
  std::size_t block_size() const override { return kBlockBytes; }
  std::size_t key_size() const override { return kKeyBytes; }
  bool chained() const override { return true; }
  std::size_t table_memory_bytes() const override;

  EncryptResult encrypt(std::span<const std::uint8_t> key,
                        std::span<const std::uint8_t> plain,
                        RandomSource& rng) const override;
  std::vector<std::uint8_t> decrypt(
      std::span<const std::uint8_t> key,
      std::span<const std::uint8_t> ciphertext,
      std::span<const std::uint8_t> iv) const override;

private:
  QuasigroupTable table_;
  InverseTable inverse_;
};

// Builds a CipherKey from raw registry key bytes (exactly 32).
CipherKey cipher_key_from_bytes(std::span<const std::uint8_t> key);

}  // namespace qgc
