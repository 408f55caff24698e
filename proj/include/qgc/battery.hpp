#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qgc/cipher.hpp"
#include "qgc/sts.hpp"

namespace qgc {

// A run fails a test when its P-value falls below this significance
// level. P-values of exactly 0 or 1 additionally raise the warning flag.
inline constexpr double kSignificance = 0.01;

struct PValueEntry {
  std::string test;
  double p = 0.0;
  bool warning = false;
};

// P-values for one run. Tests whose minimum input size was not met are
// simply absent.
struct PValueReport {
  std::string input_label;
  int run_index = 0;
  std::vector<PValueEntry> values;

  const PValueEntry* find(std::string_view test) const;
};

struct TestAggregate {
  std::string test;
  double mean_p = 0.0;
  int present = 0;   // runs that produced a P-value
  int passes = 0;    // runs with p >= kSignificance
  bool any_warning = false;
};

struct BatterySummary {
  std::string cipher;
  std::string input_label;
  int runs = 0;
  std::size_t stream_bits = 0;
  std::vector<PValueReport> reports;
  std::vector<TestAggregate> aggregates;

  const TestAggregate* find(std::string_view test) const;
};

struct BatteryConfig {
  TestParams params;
  int runs = 20;
  // Bits of ciphertext fed to the tests (capped at what a run produces).
  std::size_t stream_bits = 1'000'000;
};

// Applies every implemented test to one bit sequence.
PValueReport run_tests(const BitSequence& seq, const TestParams& params,
                       std::string_view input_label, int run_index);

// One battery: per run, a fresh random key from `rng` encrypts `input`
// and the ciphertext's leading stream_bits go through every test.
// Chained ciphers draw their IV from the same source, so a seeded rng
// makes the whole battery reproducible.
BatterySummary run_battery(const BlockCipher& cipher,
                           std::span<const std::uint8_t> input,
                           const BatteryConfig& config, RandomSource& rng,
                           std::string_view input_label);

// Human-readable summary table.
void write_summary(const BatterySummary& summary, std::ostream& out);
// Machine-readable records, one line per test per run: name, run, p-value.
void write_records(const BatterySummary& summary, std::ostream& out);

}  // namespace qgc
