#pragma once

#include "qgc/cipher.hpp"

namespace qgc {

// AES-256 baseline, wired to OpenSSL's vetted implementation through the
// same registry surface as the quasigroup cipher. PKCS#7 padding (the
// library default) is byte-for-byte the padding scheme used elsewhere in
// this project, so the two ciphers see identical padded plaintexts.

class Aes256EcbCipher final : public BlockCipher {
public:
  std::string name() const override { return "aes256-ecb"; }
  std::size_t block_size() const override { return 16; }
  std::size_t key_size() const override { return 32; }
  bool chained() const override { return false; }

  EncryptResult encrypt(std::span<const std::uint8_t> key,
                        std::span<const std::uint8_t> plain,
                        RandomSource& rng) const override;
  std::vector<std::uint8_t> decrypt(
      std::span<const std::uint8_t> key,
      std::span<const std::uint8_t> ciphertext,
      std::span<const std::uint8_t> iv) const override;
};

class Aes256CbcCipher final : public BlockCipher {
public:
  std::string name() const override { return "aes256-cbc"; }
  std::size_t block_size() const override { return 16; }
  std::size_t key_size() const override { return 32; }
  bool chained() const override { return true; }

  EncryptResult encrypt(std::span<const std::uint8_t> key,
                        std::span<const std::uint8_t> plain,
                        RandomSource& rng) const override;
  std::vector<std::uint8_t> decrypt(
      std::span<const std::uint8_t> key,
      std::span<const std::uint8_t> ciphertext,
      std::span<const std::uint8_t> iv) const override;
};

}  // namespace qgc
