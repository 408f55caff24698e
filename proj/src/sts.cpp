#include "qgc/sts.hpp"

#include <gsl/gsl_cdf.h>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_fft_real.h>
#include <gsl/gsl_sf_gamma.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

namespace qgc {

namespace {

[[maybe_unused]] const int kGslHandlerDisabled = [] {
  gsl_set_error_handler_off();
  return 0;
}();

double clamp01(double p) { return std::min(1.0, std::max(0.0, p)); }

// Regularized upper incomplete gamma Q(a, x). Underflow means the
// statistic is astronomically far in the tail; report 0.
double igamc(double a, double x) {
  gsl_sf_result r;
  const int status = gsl_sf_gamma_inc_Q_e(a, x, &r);
  if (status == GSL_EUNDRFLW) {
    return 0.0;
  }
  if (status != GSL_SUCCESS) {
    return clamp01(r.val);
  }
  return r.val;
}

double normal_cdf(double x) { return gsl_cdf_ugaussian_P(x); }

void require_bits(const BitSequence& seq, std::size_t min_bits,
                  const char* test) {
  if (seq.size() < min_bits) {
    throw StsError(StsError::Kind::sequence_too_short,
                   std::string(test) + " needs at least " +
                       std::to_string(min_bits) + " bits, got " +
                       std::to_string(seq.size()));
  }
}

void require_positive_m(int m, const char* test) {
  if (m < 1) {
    throw StsError(StsError::Kind::bad_parameter,
                   std::string(test) + " block length must be positive");
  }
}

// Counts every cyclic m-bit window of the sequence. Index = the window
// bits read MSB-first.
std::vector<std::uint32_t> cyclic_window_counts(const BitSequence& seq,
                                                int m) {
  const std::size_t n = seq.size();
  std::vector<std::uint32_t> counts(std::size_t{1} << m, 0);
  const std::uint32_t mask = static_cast<std::uint32_t>((1u << m) - 1);
  std::uint32_t window = 0;
  for (int j = 0; j < m; ++j) {
    window = (window << 1) | static_cast<std::uint32_t>(seq.bit(j % n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    ++counts[window & mask];
    window = (window << 1) | static_cast<std::uint32_t>(seq.bit((i + m) % n));
  }
  return counts;
}

// psi-squared statistic over cyclic m-grams; 0 for m <= 0.
double psi_squared(const BitSequence& seq, int m) {
  if (m <= 0) {
    return 0.0;
  }
  const double n = static_cast<double>(seq.size());
  const auto counts = cyclic_window_counts(seq, m);
  double sum = 0.0;
  for (std::uint32_t c : counts) {
    sum += static_cast<double>(c) * static_cast<double>(c);
  }
  return sum * std::ldexp(1.0, m) / n - n;
}

double cusum_p_value(long z, std::size_t n_bits) {
  // Loop bounds deliberately use integer division truncating toward zero,
  // matching the reference tool.
  const long n = static_cast<long>(n_bits);
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  double sum1 = 0.0;
  for (long k = (-n / z + 1) / 4; k <= (n / z - 1) / 4; ++k) {
    sum1 += normal_cdf(static_cast<double>((4 * k + 1) * z) / sqrt_n);
    sum1 -= normal_cdf(static_cast<double>((4 * k - 1) * z) / sqrt_n);
  }
  double sum2 = 0.0;
  for (long k = (-n / z - 3) / 4; k <= (n / z - 1) / 4; ++k) {
    sum2 += normal_cdf(static_cast<double>((4 * k + 3) * z) / sqrt_n);
    sum2 -= normal_cdf(static_cast<double>((4 * k + 1) * z) / sqrt_n);
  }
  return clamp01(1.0 - sum1 + sum2);
}

// Rank distribution for 32x32 binary matrices:
// p_r = 2^(r(64-r)-1024) * prod_{i=0}^{r-1} (1-2^(i-32))^2 / (1-2^(i-r)).
double rank_probability(int r) {
  double product = 1.0;
  for (int i = 0; i < r; ++i) {
    const double a = 1.0 - std::pow(2.0, i - 32);
    product *= (a * a) / (1.0 - std::pow(2.0, i - r));
  }
  return std::pow(2.0, static_cast<double>(r * (64 - r) - 1024)) * product;
}

int gf2_rank_32x32(std::array<std::uint32_t, 32>& rows) {
  int rank = 0;
  for (int col = 0; col < 32 && rank < 32; ++col) {
    const std::uint32_t bit = 1u << col;
    int pivot = -1;
    for (int r = rank; r < 32; ++r) {
      if (rows[r] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < 32; ++r) {
      if (r != rank && (rows[r] & bit)) {
        rows[r] ^= rows[rank];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

double test_frequency(const BitSequence& seq) {
  require_bits(seq, 100, "frequency");
  const std::size_t n = seq.size();
  long long sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += 2 * seq.bit(i) - 1;
  }
  const double s_obs =
      std::fabs(static_cast<double>(sum)) / std::sqrt(static_cast<double>(n));
  return clamp01(std::erfc(s_obs / std::sqrt(2.0)));
}

double test_block_frequency(const BitSequence& seq, int m) {
  require_positive_m(m, "block frequency");
  require_bits(seq, 100, "block frequency");
  const std::size_t n = seq.size();
  const std::size_t blocks = n / static_cast<std::size_t>(m);
  if (blocks == 0) {
    throw StsError(StsError::Kind::sequence_too_short,
                   "block frequency needs at least one full block");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < blocks; ++i) {
    long ones = 0;
    for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j) {
      ones += seq.bit(i * m + j);
    }
    const double v = static_cast<double>(ones) / m - 0.5;
    sum += v * v;
  }
  const double chi_squared = 4.0 * m * sum;
  return clamp01(igamc(static_cast<double>(blocks) / 2.0, chi_squared / 2.0));
}

double test_runs(const BitSequence& seq) {
  require_bits(seq, 100, "runs");
  const std::size_t n = seq.size();
  long ones = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ones += seq.bit(i);
  }
  const double pi = static_cast<double>(ones) / static_cast<double>(n);
  if (std::fabs(pi - 0.5) > 2.0 / std::sqrt(static_cast<double>(n))) {
    // Frequency precondition failed; the reference tool reports 0.
    return 0.0;
  }
  long v = 1;
  for (std::size_t k = 1; k < n; ++k) {
    if (seq.bit(k) != seq.bit(k - 1)) {
      ++v;
    }
  }
  const double product = pi * (1.0 - pi);
  const double arg = std::fabs(static_cast<double>(v) - 2.0 * n * product) /
                     (2.0 * product * std::sqrt(2.0 * n));
  return clamp01(std::erfc(arg));
}

double test_longest_run(const BitSequence& seq) {
  require_bits(seq, 128, "longest run");
  const std::size_t n = seq.size();

  int k_categories;
  std::size_t block_len;
  std::array<int, 7> v_bounds{};
  std::array<double, 7> pi{};
  if (n < 6272) {
    k_categories = 3;
    block_len = 8;
    v_bounds = {1, 2, 3, 4, 0, 0, 0};
    pi = {0.21484375, 0.3671875, 0.23046875, 0.1875, 0, 0, 0};
  } else if (n < 750000) {
    k_categories = 5;
    block_len = 128;
    v_bounds = {4, 5, 6, 7, 8, 9, 0};
    pi = {0.1174035788, 0.242955959, 0.249363483,
          0.17517706,   0.102701071, 0.112398847, 0};
  } else {
    k_categories = 6;
    block_len = 10000;
    v_bounds = {10, 11, 12, 13, 14, 15, 16};
    pi = {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727};
  }

  const std::size_t blocks = n / block_len;
  std::array<long, 7> nu{};
  for (std::size_t i = 0; i < blocks; ++i) {
    int longest = 0;
    int run = 0;
    for (std::size_t j = 0; j < block_len; ++j) {
      if (seq.bit(i * block_len + j)) {
        ++run;
        longest = std::max(longest, run);
      } else {
        run = 0;
      }
    }
    if (longest < v_bounds[0]) {
      ++nu[0];
    }
    for (int j = 0; j <= k_categories; ++j) {
      if (longest == v_bounds[j]) {
        ++nu[j];
      }
    }
    if (longest > v_bounds[k_categories]) {
      ++nu[k_categories];
    }
  }

  double chi_squared = 0.0;
  for (int i = 0; i <= k_categories; ++i) {
    const double expected = static_cast<double>(blocks) * pi[i];
    const double diff = static_cast<double>(nu[i]) - expected;
    chi_squared += diff * diff / expected;
  }
  return clamp01(igamc(k_categories / 2.0, chi_squared / 2.0));
}

double test_cumulative_sums(const BitSequence& seq, CusumDirection direction) {
  require_bits(seq, 100, "cumulative sums");
  const std::size_t n = seq.size();
  long s = 0;
  long sup = 0;
  long inf = 0;
  for (std::size_t k = 0; k < n; ++k) {
    s += seq.bit(k) ? 1 : -1;
    sup = std::max(sup, s);
    inf = std::min(inf, s);
  }
  // Maximum excursion of the forward walk / of the reversed walk.
  const long z = std::max(sup, -inf);
  const long z_rev = std::max(s - inf, sup - s);
  return cusum_p_value(direction == CusumDirection::forward ? z : z_rev, n);
}

double test_fft(const BitSequence& seq) {
  require_bits(seq, 1000, "fft");
  const std::size_t n = seq.size() & ~std::size_t{1};  // even length
  std::vector<double> data(n);
  for (std::size_t i = 0; i < n; ++i) {
    data[i] = 2.0 * seq.bit(i) - 1.0;
  }

  using WaveTable =
      std::unique_ptr<gsl_fft_real_wavetable,
                      decltype(&gsl_fft_real_wavetable_free)>;
  using Workspace = std::unique_ptr<gsl_fft_real_workspace,
                                    decltype(&gsl_fft_real_workspace_free)>;
  WaveTable table(gsl_fft_real_wavetable_alloc(n),
                  gsl_fft_real_wavetable_free);
  Workspace work(gsl_fft_real_workspace_alloc(n),
                 gsl_fft_real_workspace_free);
  gsl_fft_real_transform(data.data(), 1, n, table.get(), work.get());

  // Half-complex layout: data[0] is the DC term, then re/im pairs for
  // frequencies 1..n/2-1. The count covers frequencies 0..n/2-1, matching
  // the reference tool.
  const double bound = std::sqrt(2.995732274 * static_cast<double>(n));
  std::size_t count = std::fabs(data[0]) < bound ? 1 : 0;
  for (std::size_t k = 1; k < n / 2; ++k) {
    const double mag = std::hypot(data[2 * k - 1], data[2 * k]);
    if (mag < bound) {
      ++count;
    }
  }

  const double n_l = static_cast<double>(count);
  const double n_o = 0.95 * static_cast<double>(n) / 2.0;
  const double d =
      (n_l - n_o) / std::sqrt(static_cast<double>(n) / 4.0 * 0.95 * 0.05);
  return clamp01(std::erfc(std::fabs(d) / std::sqrt(2.0)));
}

double test_rank(const BitSequence& seq) {
  // 38 matrices of 32x32 bits.
  require_bits(seq, 38912, "rank");
  const std::size_t matrices = seq.size() / 1024;

  const double p32 = rank_probability(32);
  const double p31 = rank_probability(31);
  const double p30 = 1.0 - (p32 + p31);

  long f32 = 0;
  long f31 = 0;
  std::array<std::uint32_t, 32> rows;
  for (std::size_t k = 0; k < matrices; ++k) {
    for (int i = 0; i < 32; ++i) {
      std::uint32_t row = 0;
      for (int j = 0; j < 32; ++j) {
        if (seq.bit(k * 1024 + static_cast<std::size_t>(i) * 32 + j)) {
          row |= 1u << j;
        }
      }
      rows[i] = row;
    }
    const int rank = gf2_rank_32x32(rows);
    if (rank == 32) ++f32;
    if (rank == 31) ++f31;
  }
  const double f30 = static_cast<double>(matrices) - (f32 + f31);
  const double nm = static_cast<double>(matrices);

  const double chi_squared = (f32 - nm * p32) * (f32 - nm * p32) / (nm * p32) +
                             (f31 - nm * p31) * (f31 - nm * p31) / (nm * p31) +
                             (f30 - nm * p30) * (f30 - nm * p30) / (nm * p30);
  return clamp01(std::exp(-chi_squared / 2.0));
}

std::pair<double, double> test_serial(const BitSequence& seq, int m) {
  require_positive_m(m, "serial");
  if (m > 24) {
    throw StsError(StsError::Kind::bad_parameter,
                   "serial block length too large");
  }
  // SP 800-22 asks for m < floor(log2 n) - 2.
  const std::size_t min_bits = std::size_t{1} << (m + 3);
  require_bits(seq, min_bits, "serial");

  const double psi_m0 = psi_squared(seq, m);
  const double psi_m1 = psi_squared(seq, m - 1);
  const double psi_m2 = psi_squared(seq, m - 2);
  const double del1 = psi_m0 - psi_m1;
  const double del2 = psi_m0 - 2.0 * psi_m1 + psi_m2;
  const double p1 = clamp01(igamc(std::ldexp(1.0, m - 2), del1 / 2.0));
  const double p2 = clamp01(igamc(std::ldexp(1.0, m - 3), del2 / 2.0));
  return {p1, p2};
}

double test_approximate_entropy(const BitSequence& seq, int m) {
  require_positive_m(m, "approximate entropy");
  if (m > 23) {
    throw StsError(StsError::Kind::bad_parameter,
                   "approximate entropy block length too large");
  }
  // SP 800-22 asks for m < floor(log2 n) - 5.
  const std::size_t min_bits = std::size_t{1} << (m + 6);
  require_bits(seq, min_bits, "approximate entropy");

  const double n = static_cast<double>(seq.size());
  double phi[2];
  for (int r = 0; r < 2; ++r) {
    const auto counts = cyclic_window_counts(seq, m + r);
    double sum = 0.0;
    for (std::uint32_t c : counts) {
      if (c > 0) {
        sum += static_cast<double>(c) * std::log(static_cast<double>(c) / n);
      }
    }
    phi[r] = sum / n;
  }
  const double apen = phi[0] - phi[1];
  const double chi_squared = 2.0 * n * (std::log(2.0) - apen);
  return clamp01(igamc(std::ldexp(1.0, m - 1), chi_squared / 2.0));
}

}  // namespace qgc
