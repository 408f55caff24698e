#include "qgc/cipher_registry.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>

namespace qgc {

namespace {

// Unaligned length on purpose: the round-trip also exercises padding.
constexpr std::size_t kSmokeMessageBytes = 50;

void smoke_test(const BlockCipher& cipher) {
  SeededRandom rng(0x5304E7E57ULL);
  std::vector<std::uint8_t> key(cipher.key_size());
  rng.fill(key);
  std::vector<std::uint8_t> message(kSmokeMessageBytes);
  rng.fill(message);
  try {
    const EncryptResult enc = cipher.encrypt(key, message, rng);
    const std::vector<std::uint8_t> back =
        cipher.decrypt(key, enc.ciphertext, enc.iv);
    if (back != message) {
      throw RegistryError(RegistryError::Kind::smoke_test_failed,
                          "cipher " + cipher.name() +
                              " failed the round-trip smoke test");
    }
  } catch (const RegistryError&) {
    throw;
  } catch (const std::exception& e) {
    throw RegistryError(RegistryError::Kind::smoke_test_failed,
                        "cipher " + cipher.name() +
                            " threw during the smoke test: " + e.what());
  }
}

}  // namespace

void CipherRegistry::add(std::unique_ptr<BlockCipher> cipher) {
  if (cipher->block_size() == 0 || cipher->key_size() == 0) {
    throw RegistryError(RegistryError::Kind::smoke_test_failed,
                        "cipher " + cipher->name() +
                            " reports a zero block or key size");
  }
  for (const auto& existing : ciphers_) {
    if (existing->name() == cipher->name()) {
      throw RegistryError(RegistryError::Kind::duplicate_name,
                          "cipher name already registered: " + cipher->name());
    }
  }
  smoke_test(*cipher);
  ciphers_.push_back(std::move(cipher));
}

const BlockCipher& CipherRegistry::get(std::string_view name) const {
  for (const auto& cipher : ciphers_) {
    if (cipher->name() == name) {
      return *cipher;
    }
  }
  throw RegistryError(RegistryError::Kind::unknown_cipher,
                      "unknown cipher: " + std::string(name));
}

std::vector<std::string> CipherRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(ciphers_.size());
  for (const auto& cipher : ciphers_) {
    out.push_back(cipher->name());
  }
  return out;
}

BenchReport bench_throughput(const CipherRegistry& registry,
                             std::string_view name, std::size_t payload_bytes,
                             int trials, RandomSource& rng) {
  using Clock = std::chrono::steady_clock;
  const BlockCipher& cipher = registry.get(name);

  BenchReport report;
  report.cipher = cipher.name();
  report.payload_bytes = payload_bytes;
  report.trials = trials;
  report.table_memory_bytes = cipher.table_memory_bytes();

  const auto setup_start = Clock::now();
  std::vector<std::uint8_t> key(cipher.key_size());
  rng.fill(key);
  // Payload contents only need to be incompressible noise; expand a seed
  // from the source instead of drawing megabytes through it.
  std::array<std::uint8_t, 8> seed_bytes{};
  rng.fill(seed_bytes);
  std::uint64_t seed = 0;
  for (int i = 7; i >= 0; --i) seed = (seed << 8) | seed_bytes[i];
  SplitMix64 expander(seed);
  std::vector<std::uint8_t> payload(payload_bytes);
  for (std::size_t i = 0; i < payload.size(); i += 8) {
    const std::uint64_t v = expander.next();
    for (std::size_t j = 0; j < 8 && i + j < payload.size(); ++j) {
      payload[i + j] = static_cast<std::uint8_t>(v >> (8 * j));
    }
  }
  report.setup_seconds =
      std::chrono::duration<double>(Clock::now() - setup_start).count();

  std::vector<double> times;
  times.reserve(trials);
  std::size_t ct_bytes = 0;
  for (int t = 0; t < trials; ++t) {
    const auto start = Clock::now();
    const EncryptResult enc = cipher.encrypt(key, payload, rng);
    times.push_back(std::chrono::duration<double>(Clock::now() - start).count());
    ct_bytes = enc.ciphertext.size();
  }
  std::sort(times.begin(), times.end());
  report.seconds = times[times.size() / 2];
  if (report.seconds > 0.0) {
    report.throughput_mb_s =
        static_cast<double>(payload_bytes) / report.seconds / 1.0e6;
  }
  report.working_set_estimate =
      report.table_memory_bytes + payload_bytes + ct_bytes;
  return report;
}

void write_bench_report(const BenchReport& report, std::ostream& out) {
  out << "cipher: " << report.cipher << '\n'
      << "payload-bytes: " << report.payload_bytes << '\n'
      << "trials: " << report.trials << '\n'
      << std::fixed << std::setprecision(6)
      << "median-seconds: " << report.seconds << '\n'
      << std::setprecision(2) << "throughput-mb-s: " << report.throughput_mb_s
      << '\n'
      << std::setprecision(6) << "setup-seconds: " << report.setup_seconds
      << '\n'
      << "table-memory-bytes: " << report.table_memory_bytes << '\n'
      << "working-set-estimate-bytes: " << report.working_set_estimate << '\n';
  out.flags(std::ios::fmtflags{});
}

BatteryComparison compare_battery(const CipherRegistry& registry,
                                  const std::vector<std::string>& names,
                                  std::span<const std::uint8_t> input,
                                  const BatteryConfig& config,
                                  std::uint64_t key_seed,
                                  std::string_view input_label) {
  BatteryComparison comparison;
  for (const auto& name : names) {
    SeededRandom rng(key_seed);
    comparison.summaries.push_back(
        run_battery(registry.get(name), input, config, rng, input_label));
  }

  if (!comparison.summaries.empty()) {
    for (const auto& agg : comparison.summaries.front().aggregates) {
      ComparisonRow row;
      row.test = agg.test;
      for (const auto& summary : comparison.summaries) {
        const TestAggregate* other = summary.find(agg.test);
        row.mean_p.push_back(other != nullptr ? other->mean_p
                                              : std::nan(""));
      }
      if (row.mean_p.size() >= 2) {
        if (row.mean_p[0] == row.mean_p[1]) {
          row.ratio = 100.0;  // covers a cipher compared against itself
        } else {
          row.ratio = 100.0 * row.mean_p[0] / row.mean_p[1];
        }
      }
      comparison.rows.push_back(std::move(row));
    }
  }
  return comparison;
}

void write_comparison(const BatteryComparison& comparison, std::ostream& out) {
  if (comparison.summaries.empty()) {
    return;
  }
  out << "input: " << comparison.summaries.front().input_label
      << "  runs: " << comparison.summaries.front().runs << '\n';
  out << std::left << std::setw(22) << "test";
  for (const auto& summary : comparison.summaries) {
    out << std::right << std::setw(14) << summary.cipher;
  }
  out << std::right << std::setw(12) << "ratio-%" << '\n';
  for (const auto& row : comparison.rows) {
    out << std::left << std::setw(22) << row.test;
    out << std::right << std::fixed << std::setprecision(5);
    for (double p : row.mean_p) {
      out << std::setw(14) << p;
    }
    out << std::setprecision(2) << std::setw(12) << row.ratio << '\n';
  }
  out.flags(std::ios::fmtflags{});
}

}  // namespace qgc
