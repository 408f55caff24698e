#include "qgc/qg_cipher.hpp"

#include <algorithm>
#include <cstring>

namespace qgc {

CipherKey cipher_key_from_bytes(std::span<const std::uint8_t> key) {
  if (key.size() != kKeyBytes) {
    throw Error("key must be exactly " + std::to_string(kKeyBytes) +
                " bytes, got " + std::to_string(key.size()));
  }
  CipherKey out;
  std::memcpy(out.seeds.data(), key.data(), kKeyBytes);
  return out;
}

QgEcbCipher::QgEcbCipher(QuasigroupTable table)
    : table_(std::move(table)), inverse_(invert_table(table_)) {}

std::size_t QgEcbCipher::table_memory_bytes() const {
  return table_.cells().size() + inverse_.cells().size();
}

EncryptResult QgEcbCipher::encrypt(std::span<const std::uint8_t> key,
                                   std::span<const std::uint8_t> plain,
                                   RandomSource&) const {
  const CipherKey ck = cipher_key_from_bytes(key);
  return {encrypt_message_ecb(table_, ck, pad_message(plain)), {}};
}

std::vector<std::uint8_t> QgEcbCipher::decrypt(
    std::span<const std::uint8_t> key, std::span<const std::uint8_t> ciphertext,
    std::span<const std::uint8_t>) const {
  const CipherKey ck = cipher_key_from_bytes(key);
  std::vector<std::uint8_t> plain = decrypt_message_ecb(inverse_, ck, ciphertext);
  unpad_message(plain);
  return plain;
}

QgCbcCipher::QgCbcCipher(QuasigroupTable table)
    : table_(std::move(table)), inverse_(invert_table(table_)) {}

std::size_t QgCbcCipher::table_memory_bytes() const {
  return table_.cells().size() + inverse_.cells().size();
}

EncryptResult QgCbcCipher::encrypt(std::span<const std::uint8_t> key,
                                   std::span<const std::uint8_t> plain,
                                   RandomSource& rng) const {
  const CipherKey ck = cipher_key_from_bytes(key);
  const InitializationVector iv = generate_iv(rng);
  CbcEnvelope env = cbc_encrypt(table_, ck, iv, plain);
  EncryptResult result;
  result.ciphertext = std::move(env.ciphertext);
  result.iv.assign(iv.begin(), iv.end());
  return result;
}

std::vector<std::uint8_t> QgCbcCipher::decrypt(
    std::span<const std::uint8_t> key, std::span<const std::uint8_t> ciphertext,
    std::span<const std::uint8_t> iv) const {
  const CipherKey ck = cipher_key_from_bytes(key);
  CbcEnvelope env;
  if (iv.size() != env.iv.size()) {
    throw EnvelopeError(EnvelopeError::Kind::malformed_envelope,
                        "IV must be 16 bytes");
  }
  std::copy(iv.begin(), iv.end(), env.iv.begin());
  env.ciphertext.assign(ciphertext.begin(), ciphertext.end());
  return cbc_decrypt(inverse_, ck, env);
}

}  // namespace qgc
