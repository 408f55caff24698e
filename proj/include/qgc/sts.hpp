#pragma once

#include <utility>

#include "qgc/bit_sequence.hpp"
#include "qgc/error.hpp"

namespace qgc {

// Block lengths for the parameterised tests. linear_complexity_m and
// template_m are accepted for configuration compatibility; no implemented
// test consumes them.
struct TestParams {
  int block_frequency_m = 128;
  int approximate_entropy_m = 10;
  int serial_m = 16;
  int linear_complexity_m = 500;
  int template_m = 9;
};

enum class CusumDirection { forward, reverse };

// NIST SP 800-22 statistics (the sts-2.1.2 reference semantics, including
// its parameter switch points and integer-arithmetic loop bounds). Each
// function returns a P-value in [0,1] and throws
// StsError(sequence_too_short) below the test's minimum input size.

double test_frequency(const BitSequence& seq);
double test_block_frequency(const BitSequence& seq, int m = 128);
double test_runs(const BitSequence& seq);
double test_longest_run(const BitSequence& seq);
double test_cumulative_sums(const BitSequence& seq, CusumDirection direction);
double test_fft(const BitSequence& seq);
double test_rank(const BitSequence& seq);
std::pair<double, double> test_serial(const BitSequence& seq, int m = 16);
double test_approximate_entropy(const BitSequence& seq, int m = 10);

}  // namespace qgc
