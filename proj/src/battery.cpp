#include "qgc/battery.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace qgc {

namespace {

bool p_warning(double p) { return p <= 0.0 || p >= 1.0; }

}  // namespace

const PValueEntry* PValueReport::find(std::string_view test) const {
  for (const auto& v : values) {
    if (v.test == test) {
      return &v;
    }
  }
  return nullptr;
}

const TestAggregate* BatterySummary::find(std::string_view test) const {
  for (const auto& a : aggregates) {
    if (a.test == test) {
      return &a;
    }
  }
  return nullptr;
}

PValueReport run_tests(const BitSequence& seq, const TestParams& params,
                       std::string_view input_label, int run_index) {
  PValueReport report;
  report.input_label = std::string(input_label);
  report.run_index = run_index;

  const auto add = [&report](const char* name, auto&& compute) {
    try {
      const double p = compute();
      report.values.push_back({name, p, p_warning(p)});
    } catch (const StsError&) {
      // Too short for this test; recorded as absent, not as a failure.
    }
  };

  add("approximate-entropy",
      [&] { return test_approximate_entropy(seq, params.approximate_entropy_m); });
  add("block-frequency",
      [&] { return test_block_frequency(seq, params.block_frequency_m); });
  add("cusum-forward",
      [&] { return test_cumulative_sums(seq, CusumDirection::forward); });
  add("cusum-reverse",
      [&] { return test_cumulative_sums(seq, CusumDirection::reverse); });
  add("fft", [&] { return test_fft(seq); });
  add("frequency", [&] { return test_frequency(seq); });
  add("longest-run", [&] { return test_longest_run(seq); });
  add("rank", [&] { return test_rank(seq); });
  add("runs", [&] { return test_runs(seq); });
  try {
    const auto [p1, p2] = test_serial(seq, params.serial_m);
    report.values.push_back({"serial-1", p1, p_warning(p1)});
    report.values.push_back({"serial-2", p2, p_warning(p2)});
  } catch (const StsError&) {
  }
  return report;
}

static void aggregate(BatterySummary& summary) {
  summary.aggregates.clear();
  for (const auto& report : summary.reports) {
    for (const auto& value : report.values) {
      TestAggregate* agg = nullptr;
      for (auto& a : summary.aggregates) {
        if (a.test == value.test) {
          agg = &a;
          break;
        }
      }
      if (agg == nullptr) {
        summary.aggregates.push_back(TestAggregate{value.test, 0.0, 0, 0, false});
        agg = &summary.aggregates.back();
      }
      agg->mean_p += value.p;
      agg->present += 1;
      agg->passes += value.p >= kSignificance ? 1 : 0;
      agg->any_warning = agg->any_warning || value.warning;
    }
  }
  for (auto& a : summary.aggregates) {
    if (a.present > 0) {
      a.mean_p /= a.present;
    }
  }
  std::sort(summary.aggregates.begin(), summary.aggregates.end(),
            [](const TestAggregate& a, const TestAggregate& b) {
              return a.test < b.test;
            });
}

BatterySummary run_battery(const BlockCipher& cipher,
                           std::span<const std::uint8_t> input,
                           const BatteryConfig& config, RandomSource& rng,
                           std::string_view input_label) {
  BatterySummary summary;
  summary.cipher = cipher.name();
  summary.input_label = std::string(input_label);
  summary.runs = config.runs;
  summary.stream_bits = config.stream_bits;

  std::vector<std::uint8_t> key(cipher.key_size());
  for (int run = 0; run < config.runs; ++run) {
    rng.fill(key);
    const EncryptResult enc = cipher.encrypt(key, input, rng);
    const BitSequence seq =
        BitSequence::from_bytes(enc.ciphertext, config.stream_bits);
    summary.reports.push_back(run_tests(seq, config.params, input_label, run));
  }
  aggregate(summary);
  return summary;
}

void write_summary(const BatterySummary& summary, std::ostream& out) {
  out << "cipher: " << summary.cipher << "  input: " << summary.input_label
      << "  runs: " << summary.runs << "  stream-bits: " << summary.stream_bits
      << '\n';
  out << std::left << std::setw(22) << "test" << std::right << std::setw(10)
      << "mean-p" << std::setw(8) << "pass" << std::setw(8) << "n"
      << "  flags" << '\n';
  for (const auto& a : summary.aggregates) {
    out << std::left << std::setw(22) << a.test << std::right << std::setw(10)
        << std::fixed << std::setprecision(5) << a.mean_p << std::setw(8)
        << a.passes << std::setw(8) << a.present
        << (a.any_warning ? "  extreme-p" : "") << '\n';
  }
  out.flags(std::ios::fmtflags{});
}

void write_records(const BatterySummary& summary, std::ostream& out) {
  out << "# cipher=" << summary.cipher << " input=" << summary.input_label
      << " runs=" << summary.runs << " stream-bits=" << summary.stream_bits
      << '\n';
  out << std::setprecision(10);
  for (const auto& report : summary.reports) {
    for (const auto& value : report.values) {
      out << value.test << ' ' << report.run_index << ' ' << value.p << '\n';
    }
  }
}

}  // namespace qgc
