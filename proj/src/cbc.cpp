#include "qgc/cbc.hpp"

#include <cstring>

namespace qgc {

std::vector<std::uint8_t> CbcEnvelope::to_bytes() const {
  std::vector<std::uint8_t> out(kEnvelopeMagic.size() + iv.size() +
                                ciphertext.size());
  std::memcpy(out.data(), kEnvelopeMagic.data(), kEnvelopeMagic.size());
  std::memcpy(out.data() + kEnvelopeMagic.size(), iv.data(), iv.size());
  if (!ciphertext.empty()) {
    std::memcpy(out.data() + kEnvelopeMagic.size() + iv.size(),
                ciphertext.data(), ciphertext.size());
  }
  return out;
}

CbcEnvelope CbcEnvelope::from_bytes(std::span<const std::uint8_t> bytes) {
  const std::size_t header = kEnvelopeMagic.size() + kBlockBytes;
  if (bytes.size() < header + kBlockBytes) {
    throw EnvelopeError(EnvelopeError::Kind::malformed_envelope,
                        "envelope shorter than magic + iv + one block");
  }
  if (!std::equal(kEnvelopeMagic.begin(), kEnvelopeMagic.end(),
                  bytes.begin())) {
    throw EnvelopeError(EnvelopeError::Kind::malformed_envelope,
                        "envelope magic mismatch");
  }
  const std::size_t ct_size = bytes.size() - header;
  if (ct_size % kBlockBytes != 0) {
    throw EnvelopeError(EnvelopeError::Kind::malformed_envelope,
                        "ciphertext length " + std::to_string(ct_size) +
                            " is not a multiple of 16");
  }
  CbcEnvelope env;
  std::memcpy(env.iv.data(), bytes.data() + kEnvelopeMagic.size(),
              kBlockBytes);
  env.ciphertext.assign(bytes.begin() + header, bytes.end());
  return env;
}

InitializationVector generate_iv(RandomSource& rng) {
  InitializationVector iv;
  rng.fill(iv);
  return iv;
}

std::vector<std::uint8_t> pad_message(std::span<const std::uint8_t> message) {
  const std::size_t pad = kBlockBytes - (message.size() % kBlockBytes);
  std::vector<std::uint8_t> out(message.begin(), message.end());
  out.insert(out.end(), pad, static_cast<std::uint8_t>(pad));
  return out;
}

void unpad_message(std::vector<std::uint8_t>& message) {
  if (message.empty() || message.size() % kBlockBytes != 0) {
    throw EnvelopeError(EnvelopeError::Kind::bad_padding,
                        "padded message length must be a nonzero multiple "
                        "of 16");
  }
  const std::uint8_t pad = message.back();
  if (pad < 1 || pad > kBlockBytes) {
    throw EnvelopeError(EnvelopeError::Kind::bad_padding,
                        "pad length byte out of range");
  }
  for (std::size_t i = message.size() - pad; i < message.size(); ++i) {
    if (message[i] != pad) {
      throw EnvelopeError(EnvelopeError::Kind::bad_padding,
                          "inconsistent padding bytes");
    }
  }
  message.resize(message.size() - pad);
}

CbcEnvelope cbc_encrypt(const QuasigroupTable& qg, const CipherKey& key,
                        const InitializationVector& iv,
                        std::span<const std::uint8_t> message) {
  const std::vector<std::uint8_t> padded = pad_message(message);
  CbcEnvelope env;
  env.iv = iv;
  env.ciphertext.resize(padded.size());

  Block prev;
  std::memcpy(prev.data(), iv.data(), kBlockBytes);
  Block block;
  for (std::size_t off = 0; off < padded.size(); off += kBlockBytes) {
    for (std::size_t i = 0; i < kBlockBytes; ++i) {
      block[i] = padded[off + i] ^ prev[i];
    }
    prev = encrypt_block(qg, key, block);
    std::memcpy(env.ciphertext.data() + off, prev.data(), kBlockBytes);
  }
  return env;
}

std::vector<std::uint8_t> cbc_decrypt(const InverseTable& inv,
                                      const CipherKey& key,
                                      const CbcEnvelope& envelope) {
  const auto& ct = envelope.ciphertext;
  if (ct.empty() || ct.size() % kBlockBytes != 0) {
    throw EnvelopeError(EnvelopeError::Kind::malformed_envelope,
                        "ciphertext length must be a nonzero multiple of 16");
  }
  std::vector<std::uint8_t> plain(ct.size());
  Block prev;
  std::memcpy(prev.data(), envelope.iv.data(), kBlockBytes);
  Block block;
  for (std::size_t off = 0; off < ct.size(); off += kBlockBytes) {
    std::memcpy(block.data(), ct.data() + off, kBlockBytes);
    const Block decrypted = decrypt_block(inv, key, block);
    for (std::size_t i = 0; i < kBlockBytes; ++i) {
      plain[off + i] = decrypted[i] ^ prev[i];
    }
    prev = block;
  }
  unpad_message(plain);
  return plain;
}

}  // namespace qgc
