#include "qgc/block_cipher.hpp"

#include <filesystem>
#include <numeric>

#include "fixtures.hpp"
#include "qgc/rng.hpp"
#include "test_util.hpp"

using namespace qgc;
using testutil::check;
using testutil::check_throws;

namespace {

// Independent straight-line reimplementation of the 32-round transform,
// kept deliberately different from the production path: bit-at-a-time
// rotation and per-cell table lookups instead of 64-bit word operations
// and raw pointer walks.
namespace oracle {

Block rotl(const Block& in, int k) {
  Block out{};
  for (int bit = 0; bit < 128; ++bit) {
    const int src = (bit + k) % 128;
    const int v = (in[src / 8] >> (7 - src % 8)) & 1;
    if (v) {
      out[bit / 8] = static_cast<std::uint8_t>(out[bit / 8] |
                                               (1u << (7 - bit % 8)));
    }
  }
  return out;
}

Block encrypt(const QuasigroupTable& qg, const CipherKey& key, Block block) {
  const int dist[4] = {1, 3, 5, 7};
  for (int round = 0; round < 32; ++round) {
    std::uint8_t prev = key.seeds[round];
    for (int i = 0; i < 16; ++i) {
      prev = qg.at(prev, block[i]);
      block[i] = prev;
    }
    block = rotl(block, dist[round % 4]);
  }
  return block;
}

}  // namespace oracle

Block random_block(SplitMix64& rng) {
  Block b;
  for (auto& byte : b) byte = static_cast<std::uint8_t>(rng.next());
  return b;
}

CipherKey random_key(SplitMix64& rng) {
  CipherKey k;
  for (auto& s : k.seeds) s = static_cast<std::uint8_t>(rng.next());
  return k;
}

void test_rotation() {
  Block b{};
  b[0] = 0x80;
  Block want{};
  want[15] = 0x01;
  check(rotate_left(b, 1) == want, "MSB wraps to final LSB");
  check(rotate_right(want, 1) == b, "rotate_right mirrors");
  check(rotate_left(b, 0) == b, "rotation by zero is identity");

  SplitMix64 rng(1);
  const Block r = random_block(rng);
  for (int k = 0; k < 128; ++k) {
    if (rotate_right(rotate_left(r, k), k) != r) {
      check(false, "rotate_right does not invert distance " +
                       std::to_string(k));
    }
  }

  // The full schedule walks the block through exactly one turn.
  Block cursor = r;
  int total = 0;
  for (int i = 0; i < 32; ++i) {
    cursor = rotate_left(cursor, kRotationSchedule[i % 4]);
    total += kRotationSchedule[i % 4];
  }
  check(total == 128, "schedule distances sum to 128");
  check(cursor == r, "32 schedule rotations compose to the identity");

  // Byte-level spot check against the bit-at-a-time oracle.
  for (int k : {1, 3, 5, 7, 8, 64, 100, 127}) {
    if (rotate_left(r, k) != oracle::rotl(r, k)) {
      check(false, "rotation disagrees with oracle at " + std::to_string(k));
    }
  }
}

void test_block_round_trip() {
  const QuasigroupTable qg = generate_table(256, 3);
  const InverseTable inv = invert_table(qg);
  SplitMix64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const CipherKey key = random_key(rng);
    const Block plain = random_block(rng);
    const Block cipher = encrypt_block(qg, key, plain);
    if (decrypt_block(inv, key, cipher) != plain) {
      check(false, "block round trip failed");
    }
  }

  const CipherKey key = random_key(rng);
  const Block zero{};
  check(decrypt_block(inv, key, encrypt_block(qg, key, zero)) == zero,
        "all-zero block round trips");
  check(encrypt_block(qg, key, zero) == encrypt_block(qg, key, zero),
        "encryption is deterministic");
}

void test_single_round_reduction() {
  // With rotation disabled a round is exactly the bare stream transform.
  const QuasigroupTable qg = generate_table(256, 9);
  SplitMix64 rng(8);
  Block b = random_block(rng);
  const std::uint8_t seed = 0x5A;
  const auto expect = stream_encrypt(qg, seed, b);
  encrypt_round(qg, seed, 0, b);
  check(std::equal(b.begin(), b.end(), expect.begin(), expect.end()),
        "rotationless round equals the stream transform");
}

void test_dual_implementation_fixture() {
  // Fixed fixture, two independent codings of the round function.
  const QuasigroupTable qg = generate_table(256, 0x2A);
  CipherKey key;
  std::iota(key.seeds.begin(), key.seeds.end(), std::uint8_t{0});
  const Block plain{};

  const Block got = encrypt_block(qg, key, plain);
  const Block want = oracle::encrypt(qg, key, plain);
  check(got == want, "production and oracle transforms agree");

  // Frozen from the oracle so cross-build drift is also caught.
  const Block frozen = {0x5a, 0x28, 0xfb, 0x47, 0xf7, 0x74, 0x46, 0xc9,
                        0x9c, 0x9e, 0x2b, 0xa3, 0xee, 0x12, 0x2b, 0x03};
  check(got == frozen, "fixture ciphertext matches frozen value");

  const InverseTable inv = invert_table(qg);
  check(decrypt_block(inv, key, got) == plain, "fixture decrypts");
}

void test_ecb() {
  const QuasigroupTable qg = generate_table(256, 12);
  const InverseTable inv = invert_table(qg);
  SplitMix64 rng(13);
  const CipherKey key = random_key(rng);

  // Identical plaintext blocks stay identical in ciphertext: the mode is
  // deterministic per block, which is exactly its weakness.
  std::vector<std::uint8_t> message(32 * kBlockBytes, 0xAB);
  const auto ct = encrypt_message_ecb(qg, key, message);
  check(ct.size() == message.size(), "ECB preserves length");
  for (std::size_t off = kBlockBytes; off < ct.size(); off += kBlockBytes) {
    if (!std::equal(ct.begin(), ct.begin() + kBlockBytes,
                    ct.begin() + off)) {
      check(false, "identical plaintext blocks must match in ECB");
    }
  }
  check(decrypt_message_ecb(inv, key, ct) == message, "ECB round trip");

  check(encrypt_message_ecb(qg, key, std::vector<std::uint8_t>{}).empty(),
        "empty message gives empty output");

  check_throws<CipherError>(
      [&] {
        encrypt_message_ecb(qg, key, std::vector<std::uint8_t>(17, 0));
      },
      "unaligned input rejected");
  check_throws<CipherError>(
      [&] {
        decrypt_message_ecb(inv, key, std::vector<std::uint8_t>(15, 0));
      },
      "unaligned ciphertext rejected");

  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint8_t> m((rng.next() % 20) * kBlockBytes);
    for (auto& b : m) b = static_cast<std::uint8_t>(rng.next());
    if (decrypt_message_ecb(inv, key, encrypt_message_ecb(qg, key, m)) != m) {
      check(false, "ECB random round trip failed");
    }
  }
}

void test_sensitivity() {
  const QuasigroupTable qg = generate_table(256, 21);
  SplitMix64 rng(22);
  const CipherKey key = random_key(rng);
  const Block plain = random_block(rng);
  const Block base = encrypt_block(qg, key, plain);

  for (int bit = 0; bit < 128; ++bit) {
    Block flipped = plain;
    flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (7 - bit % 8));
    if (encrypt_block(qg, key, flipped) == base) {
      check(false, "plaintext bit " + std::to_string(bit) +
                       " does not affect the ciphertext");
    }
  }
  for (int bit = 0; bit < 256; ++bit) {
    CipherKey flipped = key;
    flipped.seeds[bit / 8] ^= static_cast<std::uint8_t>(1u << (7 - bit % 8));
    if (encrypt_block(qg, flipped, plain) == base) {
      check(false, "key bit " + std::to_string(bit) +
                       " does not affect the ciphertext");
    }
  }
}

void test_wrong_order() {
  const QuasigroupTable small = fixtures::table_a();
  const InverseTable small_inv = invert_table(small);
  CipherKey key;
  check_throws<CipherError>([&] { encrypt_block(small, key, Block{}); },
                            "encrypt requires order 256");
  check_throws<CipherError>([&] { decrypt_block(small_inv, key, Block{}); },
                            "decrypt requires order 256");
}

void test_key_files() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qgc_key_test";
  fs::create_directories(dir);

  CipherKey key;
  for (std::size_t i = 0; i < key.seeds.size(); ++i) {
    key.seeds[i] = static_cast<std::uint8_t>(3 * i + 1);
  }
  key.key_id = "unit fixture";
  key.save(dir / "k.hex");
  const CipherKey loaded = CipherKey::load(dir / "k.hex");
  check(loaded.seeds == key.seeds, "key bytes round trip");
  check(loaded.key_id == key.key_id, "key label round trips");
  check(CipherKey::from_hex(key.to_hex()).seeds == key.seeds,
        "hex round trip");

  check_throws<IoError>([] { CipherKey::from_hex("abcd"); },
                        "short hex rejected");
  check_throws<IoError>(
      [] {
        CipherKey::from_hex(std::string(63, '0') + "g");
      },
      "non-hex character rejected");

  fs::remove_all(dir);
}

}  // namespace

int main() {
  test_rotation();
  test_block_round_trip();
  test_single_round_reduction();
  test_dual_implementation_fixture();
  test_ecb();
  test_sensitivity();
  test_wrong_order();
  test_key_files();
  return testutil::finish("test_block_cipher");
}
