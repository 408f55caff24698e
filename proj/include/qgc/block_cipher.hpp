#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgc/quasigroup.hpp"

namespace qgc {

inline constexpr std::size_t kBlockBytes = 16;
inline constexpr std::size_t kKeyBytes = 32;

// Left-rotation distances; round i rotates by kRotationSchedule[i % 4].
// Each distance is odd (coprime to 8), and eight passes over the schedule
// sum to 128: the 32 rounds turn the block through exactly one full
// rotation, which is what ties every output byte to every input byte.
inline constexpr std::array<int, 4> kRotationSchedule = {1, 3, 5, 7};

// 128-bit unit of plaintext/ciphertext. As a bit string, byte 0's most
// significant bit comes first.
using Block = std::array<std::uint8_t, kBlockBytes>;

// 256-bit key: one single-byte seed per round. key_id is an optional
// label (typically naming the table the key was issued for).
struct CipherKey {
  std::array<std::uint8_t, kKeyBytes> seeds{};
  std::string key_id;

  // 64 hex characters.
  static CipherKey from_hex(std::string_view hex);
  std::string to_hex() const;

  // Key file: one line of 64 hex characters; lines starting with '#'
  // before it carry the key_id.
  static CipherKey load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;
};

// Circular rotations of the 128-bit block; bits taken mod 128.
// rotate_left: output bit k = input bit (k + bits) mod 128, so byte 0's
// MSB wraps around to byte 15's LSB when rotating by one.
Block rotate_left(const Block& block, int bits);
Block rotate_right(const Block& block, int bits);

// One cipher round: chained table pass over the 16 bytes seeded by
// `seed`, then circular left rotation by rot_bits. rot_bits = 0 reduces
// the round to the bare stream transform.
void encrypt_round(const QuasigroupTable& qg, std::uint8_t seed, int rot_bits,
                   Block& block);
void decrypt_round(const InverseTable& inv, std::uint8_t seed, int rot_bits,
                   Block& block);

// 32 rounds, consuming key.seeds in order; round i uses
// kRotationSchedule[i % 4]. Requires an order-256 table.
Block encrypt_block(const QuasigroupTable& qg, const CipherKey& key,
                    const Block& plain);
Block decrypt_block(const InverseTable& inv, const CipherKey& key,
                    const Block& cipher);

// Blockwise application over an already-aligned message (length a
// multiple of 16; padding is the caller's job). Every block is processed
// independently, so identical plaintext blocks yield identical
// ciphertext blocks.
std::vector<std::uint8_t> encrypt_message_ecb(const QuasigroupTable& qg,
                                              const CipherKey& key,
                                              std::span<const std::uint8_t> message);
std::vector<std::uint8_t> decrypt_message_ecb(const InverseTable& inv,
                                              const CipherKey& key,
                                              std::span<const std::uint8_t> cipher);

}  // namespace qgc
