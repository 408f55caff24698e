#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qgc/block_cipher.hpp"
#include "qgc/rng.hpp"

namespace qgc {

using InitializationVector = std::array<std::uint8_t, kBlockBytes>;

inline constexpr std::array<std::uint8_t, 4> kEnvelopeMagic = {'Q', 'G', 'C',
                                                               '1'};

// CBC wire framing: magic "QGC1", then the 16-byte IV in the clear, then
// the ciphertext (a nonempty multiple of 16 bytes; padding is always
// applied, so plaintext length is recoverable).
struct CbcEnvelope {
  InitializationVector iv{};
  std::vector<std::uint8_t> ciphertext;

  std::vector<std::uint8_t> to_bytes() const;
  static CbcEnvelope from_bytes(std::span<const std::uint8_t> bytes);
};

InitializationVector generate_iv(RandomSource& rng);

// Padding used by every mode in this project: each pad byte equals the
// pad length (1..16), with a full extra block when the message is already
// aligned. Self-describing, so corruption or a wrong key surfaces as
// bad_padding on removal.
std::vector<std::uint8_t> pad_message(std::span<const std::uint8_t> message);
void unpad_message(std::vector<std::uint8_t>& message);

// C0 = E(M0 xor iv), C(n+1) = E(M(n+1) xor Cn). Accepts any message
// length; the message is padded first.
CbcEnvelope cbc_encrypt(const QuasigroupTable& qg, const CipherKey& key,
                        const InitializationVector& iv,
                        std::span<const std::uint8_t> message);

// Exact inverse of cbc_encrypt. Throws EnvelopeError(malformed_envelope)
// for a structurally bad envelope, EnvelopeError(bad_padding) when the
// recovered padding is inconsistent (corruption or wrong key).
std::vector<std::uint8_t> cbc_decrypt(const InverseTable& inv,
                                      const CipherKey& key,
                                      const CbcEnvelope& envelope);

}  // namespace qgc
