#include "qgc/wav.hpp"

#include <cstring>
#include <fstream>
#include <ostream>

#include "qgc/block_cipher.hpp"

namespace qgc {

namespace {

constexpr std::uint16_t kFormatPcm = 0x0001;

std::uint32_t read_le32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_le16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] |
                                    (static_cast<std::uint16_t>(p[1]) << 8));
}

void write_le32(std::uint8_t* p, std::uint32_t v) {
  p[0] = static_cast<std::uint8_t>(v);
  p[1] = static_cast<std::uint8_t>(v >> 8);
  p[2] = static_cast<std::uint8_t>(v >> 16);
  p[3] = static_cast<std::uint8_t>(v >> 24);
}

bool chunk_id_is(const std::uint8_t* p, const char* id) {
  return std::memcmp(p, id, 4) == 0;
}

}  // namespace

WavPayload read_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !chunk_id_is(bytes.data(), "RIFF")) {
    throw WavError(WavError::Kind::not_riff, "missing RIFF magic");
  }
  if (!chunk_id_is(bytes.data() + 8, "WAVE")) {
    throw WavError(WavError::Kind::not_riff, "missing WAVE form type");
  }

  WavPayload payload;
  bool have_fmt = false;
  std::size_t offset = 12;
  while (true) {
    if (offset + 8 > bytes.size()) {
      throw WavError(WavError::Kind::truncated_chunk,
                     have_fmt ? "no data chunk before end of file"
                              : "no fmt chunk before end of file");
    }
    const std::uint8_t* chunk = bytes.data() + offset;
    const std::uint32_t size = read_le32(chunk + 4);
    const std::size_t body = offset + 8;

    if (chunk_id_is(chunk, "fmt ")) {
      if (body + size > bytes.size() || size < 16) {
        throw WavError(WavError::Kind::truncated_chunk, "fmt chunk truncated");
      }
      const std::uint16_t format = read_le16(chunk + 8);
      payload.channels = read_le16(chunk + 10);
      payload.sample_rate = read_le32(chunk + 12);
      payload.bits_per_sample = read_le16(chunk + 22);
      if (format != kFormatPcm) {
        throw WavError(WavError::Kind::unsupported_format,
                       "only PCM data is supported, format tag " +
                           std::to_string(format));
      }
      if (payload.bits_per_sample != 16) {
        throw WavError(WavError::Kind::unsupported_format,
                       "only 16-bit samples are supported, got " +
                           std::to_string(payload.bits_per_sample));
      }
      have_fmt = true;
    } else if (chunk_id_is(chunk, "data")) {
      if (!have_fmt) {
        throw WavError(WavError::Kind::unsupported_format,
                       "data chunk precedes fmt chunk");
      }
      if (body + size > bytes.size()) {
        throw WavError(WavError::Kind::truncated_chunk,
                       "data chunk declares " + std::to_string(size) +
                           " bytes but only " +
                           std::to_string(bytes.size() - body) + " remain");
      }
      payload.header.assign(bytes.begin(), bytes.begin() + body);
      payload.data.assign(bytes.begin() + body, bytes.begin() + body + size);
      payload.trailer.assign(bytes.begin() + body + size, bytes.end());
      return payload;
    }

    // Chunk bodies are padded to even length.
    std::size_t advance = 8 + size + (size & 1);
    if (body + size > bytes.size()) {
      throw WavError(WavError::Kind::truncated_chunk,
                     "chunk body extends past end of file");
    }
    offset += advance;
  }
}

WavPayload read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return read_wav(bytes);
}

std::vector<std::uint8_t> wav_bytes(const WavPayload& payload) {
  std::vector<std::uint8_t> out = payload.header;
  out.insert(out.end(), payload.data.begin(), payload.data.end());
  out.insert(out.end(), payload.trailer.begin(), payload.trailer.end());
  // The data chunk header sits at the end of the stored header bytes.
  write_le32(out.data() + payload.header.size() - 4,
             static_cast<std::uint32_t>(payload.data.size()));
  write_le32(out.data() + 4, static_cast<std::uint32_t>(out.size() - 8));
  return out;
}

void write_wav(const WavPayload& payload, const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = wav_bytes(payload);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw IoError("failed writing " + path.string());
  }
}

WavPayload encrypt_wav(const WavPayload& payload, const QuasigroupTable& qg,
                       const CipherKey& key, CipherMode mode,
                       RandomSource& rng) {
  WavPayload out = payload;
  if (mode == CipherMode::ecb) {
    out.data = encrypt_message_ecb(qg, key, payload.data);
  } else {
    const CbcEnvelope env =
        cbc_encrypt(qg, key, generate_iv(rng), payload.data);
    out.data = env.to_bytes();
  }
  return out;
}

WavPayload decrypt_wav(const WavPayload& payload, const InverseTable& inv,
                       const CipherKey& key, CipherMode mode) {
  WavPayload out = payload;
  if (mode == CipherMode::ecb) {
    out.data = decrypt_message_ecb(inv, key, payload.data);
  } else {
    out.data = cbc_decrypt(inv, key, CbcEnvelope::from_bytes(payload.data));
  }
  return out;
}

void dump_amplitude_csv(const WavPayload& payload, std::ostream& out) {
  out << "index,amplitude\n";
  for (std::size_t i = 0; i < payload.sample_count(); ++i) {
    out << i << ',' << payload.sample(i) << '\n';
  }
  if (!out) {
    throw IoError("failed writing amplitude CSV");
  }
}

void dump_amplitude_csv(const WavPayload& payload,
                        const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  dump_amplitude_csv(payload, out);
}

}  // namespace qgc
