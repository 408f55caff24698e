#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qgc {

// Packed bit stream. Bytes are expanded most significant bit first, the
// same convention the block rotation uses.
class BitSequence {
public:
  BitSequence() = default;

  static BitSequence from_bytes(std::span<const std::uint8_t> bytes,
                                std::size_t bit_count) {
    BitSequence seq;
    if (bit_count > bytes.size() * 8) {
      bit_count = bytes.size() * 8;
    }
    seq.bit_count_ = bit_count;
    seq.bytes_.assign(bytes.begin(), bytes.begin() + (bit_count + 7) / 8);
    return seq;
  }

  static BitSequence from_bytes(std::span<const std::uint8_t> bytes) {
    return from_bytes(bytes, bytes.size() * 8);
  }

  // Builds from explicit 0/1 values; handy for fixtures.
  static BitSequence from_bits(std::span<const int> bits) {
    BitSequence seq;
    seq.bit_count_ = bits.size();
    seq.bytes_.assign((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i]) {
        seq.bytes_[i >> 3] |= static_cast<std::uint8_t>(0x80u >> (i & 7));
      }
    }
    return seq;
  }

  std::size_t size() const { return bit_count_; }

  int bit(std::size_t i) const {
    return (bytes_[i >> 3] >> (7 - (i & 7))) & 1;
  }

private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bit_count_ = 0;
};

}  // namespace qgc
