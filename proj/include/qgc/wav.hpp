#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "qgc/cbc.hpp"
#include "qgc/error.hpp"
#include "qgc/quasigroup.hpp"

namespace qgc {

enum class CipherMode { ecb, cbc };

// A 16-bit PCM RIFF/WAVE file split into the byte regions this project
// cares about. The header (everything up to and including the data chunk
// header) and any trailing chunks are preserved verbatim so the file can
// be re-emitted with only the sample payload replaced.
struct WavPayload {
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;

  std::vector<std::uint8_t> header;
  std::vector<std::uint8_t> data;     // sample bytes, or ciphertext
  std::vector<std::uint8_t> trailer;  // chunks after data, untouched

  std::size_t sample_count() const { return data.size() / 2; }
  // Little-endian signed sample.
  std::int16_t sample(std::size_t index) const {
    return static_cast<std::int16_t>(
        static_cast<std::uint16_t>(data[2 * index]) |
        (static_cast<std::uint16_t>(data[2 * index + 1]) << 8));
  }
};

WavPayload read_wav(std::span<const std::uint8_t> bytes);
WavPayload read_wav(const std::filesystem::path& path);

// Serializes with the RIFF and data chunk lengths patched to match the
// (possibly resized) payload.
std::vector<std::uint8_t> wav_bytes(const WavPayload& payload);
void write_wav(const WavPayload& payload, const std::filesystem::path& path);

// Replaces the sample payload with ciphertext; the header stays in the
// clear so the result is still a parseable (and playable) WAV. ECB keeps
// the payload length and requires 16-byte alignment; CBC stores the
// standard envelope (magic, IV, padded ciphertext) as the data chunk.
WavPayload encrypt_wav(const WavPayload& payload, const QuasigroupTable& qg,
                       const CipherKey& key, CipherMode mode,
                       RandomSource& rng);
WavPayload decrypt_wav(const WavPayload& payload, const InverseTable& inv,
                       const CipherKey& key, CipherMode mode);

// One "index,amplitude" line per sample, for external plotting.
void dump_amplitude_csv(const WavPayload& payload, std::ostream& out);
void dump_amplitude_csv(const WavPayload& payload,
                        const std::filesystem::path& path);

}  // namespace qgc
