#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qgc/battery.hpp"
#include "qgc/cipher.hpp"

namespace qgc {

// Named cipher collection feeding the battery and bench commands. Every
// implementation passes an encrypt/decrypt round-trip smoke test at
// registration time; a broken one never becomes reachable. Immutable
// once populated and then shareable across threads.
class CipherRegistry {
public:
  // Throws RegistryError: duplicate_name, smoke_test_failed.
  void add(std::unique_ptr<BlockCipher> cipher);

  // Throws RegistryError(unknown_cipher).
  const BlockCipher& get(std::string_view name) const;

  std::vector<std::string> names() const;

private:
  std::vector<std::unique_ptr<BlockCipher>> ciphers_;
};

struct BenchReport {
  std::string cipher;
  std::size_t payload_bytes = 0;
  int trials = 0;
  double seconds = 0.0;            // median encrypt wall time
  double throughput_mb_s = 0.0;    // payload_bytes / seconds, in MB/s
  double setup_seconds = 0.0;      // key generation, reported separately
  std::size_t table_memory_bytes = 0;
  std::size_t working_set_estimate = 0;
};

// Times steady-state encryption of a random payload; key setup is
// excluded from the timed region and reported on its own.
BenchReport bench_throughput(const CipherRegistry& registry,
                             std::string_view name, std::size_t payload_bytes,
                             int trials, RandomSource& rng);

void write_bench_report(const BenchReport& report, std::ostream& out);

// Side-by-side battery over the same per-run keys (every cipher re-seeds
// an identical key stream). The ratio column is
// 100 * mean_p(first) / mean_p(second), the shape used to compare a
// cipher against a baseline.
struct ComparisonRow {
  std::string test;
  std::vector<double> mean_p;  // one per cipher, registry order of `names`
  double ratio = 0.0;
};

struct BatteryComparison {
  std::vector<BatterySummary> summaries;
  std::vector<ComparisonRow> rows;
};

BatteryComparison compare_battery(const CipherRegistry& registry,
                                  const std::vector<std::string>& names,
                                  std::span<const std::uint8_t> input,
                                  const BatteryConfig& config,
                                  std::uint64_t key_seed,
                                  std::string_view input_label);

void write_comparison(const BatteryComparison& comparison, std::ostream& out);

}  // namespace qgc
