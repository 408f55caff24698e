#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace qgc {

// SplitMix64 (Steele, Lea, Flood 2014). Used everywhere reproducibility
// across platforms matters: table generation, seeded key/IV streams and
// test fixtures. State advances by the golden-ratio increment; output is
// a bijective mix of the state.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

// Byte source for keys and IVs.
class RandomSource {
public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

// Deterministic source: SplitMix64 words emitted least significant byte
// first. Each fill() consumes whole 64-bit words, so replaying a stream
// requires issuing the same sequence of fill sizes.
class SeededRandom final : public RandomSource {
public:
  explicit SeededRandom(std::uint64_t seed) : rng_(seed) {}

  void fill(std::span<std::uint8_t> out) override {
    for (std::size_t i = 0; i < out.size(); i += 8) {
      std::uint64_t v = rng_.next();
      for (std::size_t j = 0; j < 8 && i + j < out.size(); ++j) {
        out[i + j] = static_cast<std::uint8_t>(v >> (8 * j));
      }
    }
  }

private:
  SplitMix64 rng_;
};

// OS-backed source for production key and IV material.
class SystemRandom final : public RandomSource {
public:
  void fill(std::span<std::uint8_t> out) override {
    for (std::size_t i = 0; i < out.size(); i += 4) {
      std::uint32_t v = static_cast<std::uint32_t>(dev_());
      for (std::size_t j = 0; j < 4 && i + j < out.size(); ++j) {
        out[i + j] = static_cast<std::uint8_t>(v >> (8 * j));
      }
    }
  }

private:
  std::random_device dev_;
};

}  // namespace qgc
