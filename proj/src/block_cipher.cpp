#include "qgc/block_cipher.hpp"

#include <cctype>
#include <cstring>
#include <fstream>

namespace qgc {

namespace {

std::uint64_t load_be64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v = (v << 8) | p[i];
  }
  return v;
}

void store_be64(std::uint8_t* p, std::uint64_t v) {
  for (int i = 7; i >= 0; --i) {
    p[i] = static_cast<std::uint8_t>(v);
    v >>= 8;
  }
}

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

void require_cipher_order(int order) {
  if (order != QuasigroupTable::kCipherOrder) {
    throw CipherError(CipherError::Kind::wrong_table_order,
                      "block cipher requires an order-256 table, got order " +
                          std::to_string(order));
  }
}

void require_aligned(std::size_t size) {
  if (size % kBlockBytes != 0) {
    throw CipherError(CipherError::Kind::unaligned_input,
                      "message length " + std::to_string(size) +
                          " is not a multiple of " +
                          std::to_string(kBlockBytes));
  }
}

}  // namespace

CipherKey CipherKey::from_hex(std::string_view hex) {
  if (hex.size() != 2 * kKeyBytes) {
    throw IoError("key must be " + std::to_string(2 * kKeyBytes) +
                  " hex characters, got " + std::to_string(hex.size()));
  }
  CipherKey key;
  for (std::size_t i = 0; i < kKeyBytes; ++i) {
    int hi = hex_nibble(hex[2 * i]);
    int lo = hex_nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw IoError("key contains a non-hex character");
    }
    key.seeds[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return key;
}

std::string CipherKey::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * kKeyBytes);
  for (std::uint8_t b : seeds) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0x0F]);
  }
  return out;
}

CipherKey CipherKey::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  std::string key_id;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    if (line[0] == '#') {
      std::size_t start = line.find_first_not_of("# \t");
      key_id = (start == std::string::npos) ? "" : line.substr(start);
      continue;
    }
    CipherKey key = from_hex(line);
    key.key_id = key_id;
    return key;
  }
  throw IoError("no key material in " + path.string());
}

void CipherKey::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  if (!key_id.empty()) {
    out << "# " << key_id << '\n';
  }
  out << to_hex() << '\n';
  if (!out) {
    throw IoError("failed writing key file " + path.string());
  }
}

Block rotate_left(const Block& block, int bits) {
  const int k = bits & 127;
  const std::uint64_t hi = load_be64(block.data());
  const std::uint64_t lo = load_be64(block.data() + 8);
  std::uint64_t nh, nl;
  if (k == 0) {
    nh = hi;
    nl = lo;
  } else if (k < 64) {
    nh = (hi << k) | (lo >> (64 - k));
    nl = (lo << k) | (hi >> (64 - k));
  } else if (k == 64) {
    nh = lo;
    nl = hi;
  } else {
    const int j = k - 64;
    nh = (lo << j) | (hi >> (64 - j));
    nl = (hi << j) | (lo >> (64 - j));
  }
  Block out;
  store_be64(out.data(), nh);
  store_be64(out.data() + 8, nl);
  return out;
}

Block rotate_right(const Block& block, int bits) {
  return rotate_left(block, 128 - (bits & 127));
}

void encrypt_round(const QuasigroupTable& qg, std::uint8_t seed, int rot_bits,
                   Block& block) {
  stream_encrypt_inplace(qg, seed, block);
  block = rotate_left(block, rot_bits);
}

void decrypt_round(const InverseTable& inv, std::uint8_t seed, int rot_bits,
                   Block& block) {
  block = rotate_right(block, rot_bits);
  stream_decrypt_inplace(inv, seed, block);
}

Block encrypt_block(const QuasigroupTable& qg, const CipherKey& key,
                    const Block& plain) {
  require_cipher_order(qg.order());
  Block block = plain;
  for (std::size_t i = 0; i < kKeyBytes; ++i) {
    encrypt_round(qg, key.seeds[i], kRotationSchedule[i % 4], block);
  }
  return block;
}

Block decrypt_block(const InverseTable& inv, const CipherKey& key,
                    const Block& cipher) {
  require_cipher_order(inv.order());
  Block block = cipher;
  for (std::size_t i = kKeyBytes; i-- > 0;) {
    decrypt_round(inv, key.seeds[i], kRotationSchedule[i % 4], block);
  }
  return block;
}

std::vector<std::uint8_t> encrypt_message_ecb(
    const QuasigroupTable& qg, const CipherKey& key,
    std::span<const std::uint8_t> message) {
  require_cipher_order(qg.order());
  require_aligned(message.size());
  std::vector<std::uint8_t> out(message.size());
  Block block;
  for (std::size_t off = 0; off < message.size(); off += kBlockBytes) {
    std::memcpy(block.data(), message.data() + off, kBlockBytes);
    block = encrypt_block(qg, key, block);
    std::memcpy(out.data() + off, block.data(), kBlockBytes);
  }
  return out;
}

std::vector<std::uint8_t> decrypt_message_ecb(
    const InverseTable& inv, const CipherKey& key,
    std::span<const std::uint8_t> cipher) {
  require_cipher_order(inv.order());
  require_aligned(cipher.size());
  std::vector<std::uint8_t> out(cipher.size());
  Block block;
  for (std::size_t off = 0; off < cipher.size(); off += kBlockBytes) {
    std::memcpy(block.data(), cipher.data() + off, kBlockBytes);
    block = decrypt_block(inv, key, block);
    std::memcpy(out.data() + off, block.data(), kBlockBytes);
  }
  return out;
}

}  // namespace qgc
