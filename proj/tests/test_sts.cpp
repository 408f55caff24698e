#include "qgc/sts.hpp"

#include <cmath>
#include <vector>

#include "qgc/rng.hpp"
#include "sts_expected.hpp"
#include "test_util.hpp"

using namespace qgc;
using testutil::check;
using testutil::check_near;
using testutil::check_throws;

namespace {

BitSequence alternating(std::size_t n) {
  std::vector<int> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<int>(i & 1);
  return BitSequence::from_bits(bits);
}

BitSequence constant(std::size_t n, int value) {
  std::vector<int> bits(n, value);
  return BitSequence::from_bits(bits);
}

// The fixed streams the oracle was run on: SplitMix64 words, least
// significant byte first.
BitSequence oracle_stream(std::uint64_t seed, std::size_t bytes) {
  SplitMix64 rng(seed);
  std::vector<std::uint8_t> data(bytes);
  for (std::size_t i = 0; i < bytes; i += 8) {
    std::uint64_t v = rng.next();
    for (std::size_t j = 0; j < 8 && i + j < bytes; ++j) {
      data[i + j] = static_cast<std::uint8_t>(v >> (8 * j));
    }
  }
  return BitSequence::from_bytes(data);
}

void test_frequency_cases() {
  check(test_frequency(alternating(1000)) == 1.0,
        "balanced sequence scores exactly 1");
  check(test_frequency(constant(1000, 1)) < 1e-20,
        "all-ones is maximally biased");
  check_throws<StsError>([] { test_frequency(constant(99, 0)); },
                         "frequency minimum length");
}

void test_block_frequency_cases() {
  // Every 128-bit block of the alternating stream is balanced: chi^2 = 0.
  check(test_block_frequency(alternating(4096), 128) == 1.0,
        "alternating blocks are balanced");
  check(test_block_frequency(constant(4096, 1), 128) < 1e-10,
        "all-ones blocks are degenerate");
  check_throws<StsError>([] { test_block_frequency(alternating(4096), 0); },
                         "nonpositive block length rejected");
}

void test_runs_cases() {
  check(test_runs(alternating(1000)) < 1e-10,
        "alternating has maximal run count");
  // "1100" x 25: 100 bits, half ones, exactly 50 runs = 2 n pi (1-pi),
  // the expected count; the statistic's numerator is zero.
  std::vector<int> bits;
  for (int i = 0; i < 25; ++i) {
    bits.insert(bits.end(), {1, 1, 0, 0});
  }
  check(test_runs(BitSequence::from_bits(bits)) == 1.0,
        "expected run count scores exactly 1");
  check(test_runs(constant(1000, 1)) == 0.0,
        "frequency precondition failure reports 0");
}

void test_longest_run_cases() {
  check(test_longest_run(constant(1000, 1)) < 1e-10,
        "all-ones longest run is degenerate (8-bit blocks)");
  check(test_longest_run(alternating(10000)) < 1e-10,
        "alternating longest run is degenerate (128-bit blocks)");
  check_throws<StsError>([] { test_longest_run(constant(127, 0)); },
                         "longest run needs 128 bits");
}

void test_cusum_cases() {
  check(test_cumulative_sums(alternating(1000), CusumDirection::forward) >
            0.99,
        "alternating stays within excursion 1");
  check(test_cumulative_sums(constant(1000, 1), CusumDirection::forward) <
            1e-10,
        "all-ones is one long excursion");
  check(test_cumulative_sums(constant(1000, 0), CusumDirection::reverse) <
            1e-10,
        "all-zeros reverse direction");
}

void test_fft_cases() {
  check(test_fft(constant(1024, 1)) < 1e-4, "constant spectrum degenerate");
  check_near(test_fft(alternating(1024)), sts_expected::kFftAlternating1024,
             1e-12, "alternating 1024-bit spectrum matches the oracle");
  check_throws<StsError>([] { test_fft(constant(999, 0)); },
                         "fft needs 1000 bits");
}

void test_rank_cases() {
  check(test_rank(constant(38912, 0)) < 1e-4,
        "all-zero matrices all rank zero");
  check_throws<StsError>([] { test_rank(constant(38911, 0)); },
                         "rank needs 38 matrices");
}

void test_serial_cases() {
  const auto [p1, p2] = test_serial(alternating(std::size_t{1} << 19), 16);
  check(p1 < 1e-10 && p2 < 1e-10,
        "period-2 stream has a degenerate 16-gram distribution");
  const auto [c1, c2] = test_serial(constant(std::size_t{1} << 19, 0), 16);
  check(c1 < 1e-10 && c2 < 1e-10,
        "constant stream has a degenerate 16-gram distribution");

  // m = 1 collapses the first psi-squared difference to the frequency
  // statistic.
  const BitSequence stream = oracle_stream(0x9999, 125);
  const auto [q1, q2] = test_serial(stream, 1);
  check_near(q1, test_frequency(stream), 1e-12,
             "serial m=1 equals the frequency P-value");
  check(q2 >= 0.0 && q2 <= 1.0, "serial-2 in range at m=1");

  check_throws<StsError>(
      [] { test_serial(constant(100, 0), 16); },
      "serial length gate for m=16");
}

void test_apen_cases() {
  check(test_approximate_entropy(constant(1 << 17, 1), 10) < 1e-10,
        "constant sequence has zero entropy gain");
  check(test_approximate_entropy(alternating(1 << 17), 10) < 1e-10,
        "alternating sequence is fully predictable");
  check_throws<StsError>(
      [] { test_approximate_entropy(constant(1 << 10, 0), 10); },
      "approximate entropy length gate");
}

void test_oracle_streams() {
  // Cross-implementation agreement with the frozen numpy/scipy values on
  // the fixed 10^6-bit streams.
  for (const auto& expected : sts_expected::kStreams) {
    const BitSequence seq = oracle_stream(expected.seed, 125000);
    check(seq.size() == 1'000'000, "stream is a million bits");
    const double tol = 1e-6;
    check_near(test_approximate_entropy(seq, 10), expected.approximate_entropy,
               tol, "approximate-entropy vs oracle");
    check_near(test_block_frequency(seq, 128), expected.block_frequency, tol,
               "block-frequency vs oracle");
    check_near(test_cumulative_sums(seq, CusumDirection::forward),
               expected.cusum_forward, tol, "cusum-forward vs oracle");
    check_near(test_cumulative_sums(seq, CusumDirection::reverse),
               expected.cusum_reverse, tol, "cusum-reverse vs oracle");
    check_near(test_fft(seq), expected.fft, tol, "fft vs oracle");
    check_near(test_frequency(seq), expected.frequency, tol,
               "frequency vs oracle");
    check_near(test_longest_run(seq), expected.longest_run, tol,
               "longest-run vs oracle");
    check_near(test_rank(seq), expected.rank, tol, "rank vs oracle");
    check_near(test_runs(seq), expected.runs, tol, "runs vs oracle");
    const auto [p1, p2] = test_serial(seq, 16);
    check_near(p1, expected.serial_1, tol, "serial-1 vs oracle");
    check_near(p2, expected.serial_2, tol, "serial-2 vs oracle");
  }
}

}  // namespace

int main() {
  test_frequency_cases();
  test_block_frequency_cases();
  test_runs_cases();
  test_longest_run_cases();
  test_cusum_cases();
  test_fft_cases();
  test_rank_cases();
  test_serial_cases();
  test_apen_cases();
  test_oracle_streams();
  return testutil::finish("test_sts");
}
