#include "qgc/aes_cipher.hpp"

#include <openssl/evp.h>

#include <memory>

#include "qgc/error.hpp"

namespace qgc {

namespace {

using CtxPtr =
    std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)>;

CtxPtr make_ctx() {
  CtxPtr ctx(EVP_CIPHER_CTX_new(), EVP_CIPHER_CTX_free);
  if (!ctx) {
    throw Error("EVP_CIPHER_CTX_new failed");
  }
  return ctx;
}

std::vector<std::uint8_t> evp_encrypt(const EVP_CIPHER* cipher,
                                      std::span<const std::uint8_t> key,
                                      const std::uint8_t* iv,
                                      std::span<const std::uint8_t> plain) {
  if (key.size() != 32) {
    throw Error("AES-256 key must be 32 bytes");
  }
  CtxPtr ctx = make_ctx();
  if (EVP_EncryptInit_ex(ctx.get(), cipher, nullptr, key.data(), iv) != 1) {
    throw Error("EVP_EncryptInit_ex failed");
  }
  std::vector<std::uint8_t> out(plain.size() + 16);
  int written = 0;
  int total = 0;
  if (EVP_EncryptUpdate(ctx.get(), out.data(), &written, plain.data(),
                        static_cast<int>(plain.size())) != 1) {
    throw Error("EVP_EncryptUpdate failed");
  }
  total = written;
  if (EVP_EncryptFinal_ex(ctx.get(), out.data() + total, &written) != 1) {
    throw Error("EVP_EncryptFinal_ex failed");
  }
  total += written;
  out.resize(static_cast<std::size_t>(total));
  return out;
}

std::vector<std::uint8_t> evp_decrypt(const EVP_CIPHER* cipher,
                                      std::span<const std::uint8_t> key,
                                      const std::uint8_t* iv,
                                      std::span<const std::uint8_t> ct) {
  if (key.size() != 32) {
    throw Error("AES-256 key must be 32 bytes");
  }
  CtxPtr ctx = make_ctx();
  if (EVP_DecryptInit_ex(ctx.get(), cipher, nullptr, key.data(), iv) != 1) {
    throw Error("EVP_DecryptInit_ex failed");
  }
  std::vector<std::uint8_t> out(ct.size() + 16);
  int written = 0;
  int total = 0;
  if (EVP_DecryptUpdate(ctx.get(), out.data(), &written, ct.data(),
                        static_cast<int>(ct.size())) != 1) {
    throw EnvelopeError(EnvelopeError::Kind::malformed_envelope,
                        "EVP_DecryptUpdate failed");
  }
  total = written;
  if (EVP_DecryptFinal_ex(ctx.get(), out.data() + total, &written) != 1) {
    // The library signals inconsistent padding here.
    throw EnvelopeError(EnvelopeError::Kind::bad_padding,
                        "AES padding check failed");
  }
  total += written;
  out.resize(static_cast<std::size_t>(total));
  return out;
}

}  // namespace

EncryptResult Aes256EcbCipher::encrypt(std::span<const std::uint8_t> key,
                                       std::span<const std::uint8_t> plain,
                                       RandomSource&) const {
  return {evp_encrypt(EVP_aes_256_ecb(), key, nullptr, plain), {}};
}

std::vector<std::uint8_t> Aes256EcbCipher::decrypt(
    std::span<const std::uint8_t> key, std::span<const std::uint8_t> ciphertext,
    std::span<const std::uint8_t>) const {
  return evp_decrypt(EVP_aes_256_ecb(), key, nullptr, ciphertext);
}

EncryptResult Aes256CbcCipher::encrypt(std::span<const std::uint8_t> key,
                                       std::span<const std::uint8_t> plain,
                                       RandomSource& rng) const {
  EncryptResult result;
  result.iv.resize(16);
  rng.fill(result.iv);
  result.ciphertext = evp_encrypt(EVP_aes_256_cbc(), key, result.iv.data(), plain);
  return result;
}

std::vector<std::uint8_t> Aes256CbcCipher::decrypt(
    std::span<const std::uint8_t> key, std::span<const std::uint8_t> ciphertext,
    std::span<const std::uint8_t> iv) const {
  if (iv.size() != 16) {
    throw EnvelopeError(EnvelopeError::Kind::malformed_envelope,
                        "IV must be 16 bytes");
  }
  return evp_decrypt(EVP_aes_256_cbc(), key, iv.data(), ciphertext);
}

}  // namespace qgc
