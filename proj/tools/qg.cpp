#include <CLI11.hpp>
#include <sstream>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "qgc/aes_cipher.hpp"
#include "qgc/battery.hpp"
#include "qgc/cbc.hpp"
#include "qgc/cipher_registry.hpp"
#include "qgc/latin_count.hpp"
#include "qgc/qg_cipher.hpp"
#include "qgc/quasigroup.hpp"
#include "qgc/wav.hpp"

namespace {

// Exit codes: 0 success, 1 usage, 2 data/format, 3 internal.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw qgc::IoError("cannot open " + path + " for reading");
  }
  return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw qgc::IoError("cannot open " + path + " for writing");
  }
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) {
    throw qgc::IoError("failed writing " + path);
  }
}

std::unique_ptr<qgc::RandomSource> make_rng(
    const std::optional<std::uint64_t>& seed) {
  if (seed.has_value()) {
    return std::make_unique<qgc::SeededRandom>(*seed);
  }
  return std::make_unique<qgc::SystemRandom>();
}

qgc::CipherMode parse_mode(const std::string& mode) {
  return mode == "ecb" ? qgc::CipherMode::ecb : qgc::CipherMode::cbc;
}

struct TableChoice {
  std::string path;
  std::uint64_t gen_seed = 1;

  qgc::QuasigroupTable load() const {
    if (!path.empty()) {
      return qgc::load_table(std::filesystem::path(path));
    }
    return qgc::generate_table(qgc::QuasigroupTable::kCipherOrder, gen_seed);
  }
};

void add_table_options(CLI::App* cmd, TableChoice& choice) {
  cmd->add_option("--table", choice.path, "quasigroup table file");
  cmd->add_option("--table-seed", choice.gen_seed,
                  "generate the order-256 table from this seed instead")
      ->default_val(1);
}

qgc::CipherRegistry make_registry(const TableChoice& choice) {
  qgc::CipherRegistry registry;
  qgc::QuasigroupTable table = choice.load();
  registry.add(std::make_unique<qgc::QgEcbCipher>(table));
  registry.add(std::make_unique<qgc::QgCbcCipher>(std::move(table)));
  registry.add(std::make_unique<qgc::Aes256EcbCipher>());
  registry.add(std::make_unique<qgc::Aes256CbcCipher>());
  return registry;
}

std::vector<std::uint8_t> battery_input(const std::string& preset,
                                        const std::string& file,
                                        std::size_t bytes) {
  if (preset == "zeros") {
    return std::vector<std::uint8_t>(bytes, 0x00);
  }
  if (preset == "ones") {
    return std::vector<std::uint8_t>(bytes, 0xFF);
  }
  if (file.empty()) {
    throw qgc::IoError("--input file requires --file");
  }
  return read_file(file);
}

int default_battery_runs() {
  if (const char* env = std::getenv("QG_BATTERY_RUNS")) {
    const int value = std::atoi(env);
    if (value >= 1) {
      return value;
    }
  }
  return 20;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw qgc::IoError("cannot open " + path + " for writing");
  }
  out << text;
}

int run(int argc, char** argv) {
  CLI::App app{"Quasigroup block cipher toolkit"};
  app.require_subcommand(1);

  // gen-table
  auto* gen = app.add_subcommand("gen-table", "generate a quasigroup table");
  int gen_order = 256;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  bool gen_binary = false;
  gen->add_option("--order", gen_order, "table order")->default_val(256);
  gen->add_option("--seed", gen_seed, "generator seed")->default_val(1);
  gen->add_option("--out", gen_out, "output file")->required();
  gen->add_flag("--binary", gen_binary, "write the binary format");

  // keygen
  auto* keygen = app.add_subcommand("keygen", "generate a 256-bit key file");
  std::string keygen_out;
  std::optional<std::uint64_t> keygen_seed;
  std::string keygen_id;
  keygen->add_option("--out", keygen_out, "output file")->required();
  keygen->add_option("--seed", keygen_seed,
                     "deterministic seed (default: system randomness)");
  keygen->add_option("--key-id", keygen_id, "label stored with the key");

  // encrypt / decrypt
  std::string enc_table, enc_key, enc_in, enc_out, enc_mode = "cbc";
  std::optional<std::uint64_t> enc_rng_seed;
  auto* encrypt = app.add_subcommand("encrypt", "encrypt a file");
  encrypt->add_option("--table", enc_table, "table file")->required();
  encrypt->add_option("--key", enc_key, "key file")->required();
  encrypt->add_option("--mode", enc_mode, "ecb or cbc")
      ->check(CLI::IsMember({"ecb", "cbc"}));
  encrypt->add_option("--in", enc_in, "plaintext file")->required();
  encrypt->add_option("--out", enc_out, "ciphertext file")->required();
  encrypt->add_option("--rng-seed", enc_rng_seed,
                      "deterministic IV seed (default: system randomness)");

  std::string dec_table, dec_key, dec_in, dec_out, dec_mode = "cbc";
  auto* decrypt = app.add_subcommand("decrypt", "decrypt a file");
  decrypt->add_option("--table", dec_table, "table file")->required();
  decrypt->add_option("--key", dec_key, "key file")->required();
  decrypt->add_option("--mode", dec_mode, "ecb or cbc")
      ->check(CLI::IsMember({"ecb", "cbc"}));
  decrypt->add_option("--in", dec_in, "ciphertext file")->required();
  decrypt->add_option("--out", dec_out, "plaintext file")->required();

  // battery
  auto* battery = app.add_subcommand(
      "battery", "run the randomness test battery over fresh-key runs");
  std::string bat_cipher = "qg-cbc";
  std::string bat_input = "zeros";
  std::string bat_file;
  int bat_runs = default_battery_runs();
  std::size_t bat_bits = 1'000'000;
  std::optional<std::uint64_t> bat_key_seed;
  std::string bat_out, bat_records;
  TableChoice bat_table;
  battery->add_option("--cipher", bat_cipher, "registered cipher name")
      ->default_val("qg-cbc");
  battery->add_option("--input", bat_input, "zeros, ones or file")
      ->check(CLI::IsMember({"zeros", "ones", "file"}));
  battery->add_option("--file", bat_file, "input file for --input file");
  battery->add_option("--runs", bat_runs, "independent runs")
      ->default_val(default_battery_runs());
  battery->add_option("--bits", bat_bits, "bits tested per run")
      ->default_val(1'000'000);
  battery->add_option("--key-seed", bat_key_seed,
                      "deterministic key stream seed");
  battery->add_option("--out", bat_out, "summary table file (default stdout)");
  battery->add_option("--records", bat_records, "per-run record file");
  add_table_options(battery, bat_table);

  // bench
  auto* bench = app.add_subcommand("bench", "measure encryption throughput");
  std::string bench_cipher;
  std::size_t bench_payload = 16 * 1024 * 1024;
  int bench_trials = 5;
  TableChoice bench_table;
  bench->add_option("--cipher", bench_cipher, "registered cipher name")
      ->required();
  bench->add_option("--payload", bench_payload, "payload bytes")
      ->default_val(16 * 1024 * 1024);
  bench->add_option("--trials", bench_trials, "timing trials")->default_val(5);
  add_table_options(bench, bench_table);

  // compare
  auto* compare = app.add_subcommand(
      "compare", "side-by-side battery for two or more ciphers");
  std::vector<std::string> cmp_ciphers;
  std::string cmp_input = "zeros";
  std::string cmp_file;
  int cmp_runs = default_battery_runs();
  std::size_t cmp_bits = 1'000'000;
  std::uint64_t cmp_key_seed = 1;
  std::string cmp_out;
  TableChoice cmp_table;
  compare->add_option("--ciphers", cmp_ciphers, "cipher names (two or more)")
      ->required()
      ->expected(2, 8);
  compare->add_option("--input", cmp_input, "zeros, ones or file")
      ->check(CLI::IsMember({"zeros", "ones", "file"}));
  compare->add_option("--file", cmp_file, "input file for --input file");
  compare->add_option("--runs", cmp_runs, "independent runs")
      ->default_val(default_battery_runs());
  compare->add_option("--bits", cmp_bits, "bits tested per run")
      ->default_val(1'000'000);
  compare->add_option("--key-seed", cmp_key_seed,
                      "shared per-run key stream seed")
      ->default_val(1);
  compare->add_option("--out", cmp_out, "output file (default stdout)");
  add_table_options(compare, cmp_table);

  // count-reduced
  auto* count = app.add_subcommand(
      "count-reduced", "count reduced Latin squares exhaustively");
  int count_order = 0;
  count->add_option("--order", count_order, "order (1..6)")->required();

  // audio
  std::string wav_table, wav_key, wav_in, wav_out, wav_mode = "cbc";
  std::optional<std::uint64_t> wav_rng_seed;
  auto* audio_encrypt =
      app.add_subcommand("audio-encrypt", "encrypt a PCM-16 WAV payload");
  audio_encrypt->add_option("--table", wav_table, "table file")->required();
  audio_encrypt->add_option("--key", wav_key, "key file")->required();
  audio_encrypt->add_option("--mode", wav_mode, "ecb or cbc")
      ->check(CLI::IsMember({"ecb", "cbc"}));
  audio_encrypt->add_option("--in", wav_in, "input WAV")->required();
  audio_encrypt->add_option("--out", wav_out, "output WAV")->required();
  audio_encrypt->add_option("--rng-seed", wav_rng_seed,
                            "deterministic IV seed");

  std::string dwav_table, dwav_key, dwav_in, dwav_out, dwav_mode = "cbc";
  auto* audio_decrypt =
      app.add_subcommand("audio-decrypt", "decrypt a PCM-16 WAV payload");
  audio_decrypt->add_option("--table", dwav_table, "table file")->required();
  audio_decrypt->add_option("--key", dwav_key, "key file")->required();
  audio_decrypt->add_option("--mode", dwav_mode, "ecb or cbc")
      ->check(CLI::IsMember({"ecb", "cbc"}));
  audio_decrypt->add_option("--in", dwav_in, "input WAV")->required();
  audio_decrypt->add_option("--out", dwav_out, "output WAV")->required();

  std::string csv_in, csv_out;
  auto* audio_csv = app.add_subcommand(
      "audio-csv", "dump WAV amplitudes as index,amplitude CSV");
  audio_csv->add_option("--in", csv_in, "input WAV")->required();
  audio_csv->add_option("--out", csv_out, "output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every other parse problem is a usage error.
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  if (gen->parsed()) {
    const qgc::QuasigroupTable table = qgc::generate_table(gen_order, gen_seed);
    qgc::save_table(table, std::filesystem::path(gen_out),
                    gen_binary ? qgc::TableFormat::binary
                               : qgc::TableFormat::text);
    return kExitOk;
  }

  if (keygen->parsed()) {
    auto rng = make_rng(keygen_seed);
    qgc::CipherKey key;
    rng->fill(key.seeds);
    key.key_id = keygen_id;
    key.save(keygen_out);
    return kExitOk;
  }

  if (encrypt->parsed()) {
    const qgc::QuasigroupTable table =
        qgc::load_table(std::filesystem::path(enc_table));
    const qgc::CipherKey key = qgc::CipherKey::load(enc_key);
    const auto message = read_file(enc_in);
    if (parse_mode(enc_mode) == qgc::CipherMode::ecb) {
      if (message.size() % qgc::kBlockBytes != 0) {
        throw qgc::CipherError(
            qgc::CipherError::Kind::unaligned_input,
            "input is not a multiple of 16 bytes; use --mode cbc or pad "
            "the input yourself");
      }
      write_file(enc_out, qgc::encrypt_message_ecb(table, key, message));
    } else {
      auto rng = make_rng(enc_rng_seed);
      const qgc::CbcEnvelope env =
          qgc::cbc_encrypt(table, key, qgc::generate_iv(*rng), message);
      write_file(enc_out, env.to_bytes());
    }
    return kExitOk;
  }

  if (decrypt->parsed()) {
    const qgc::QuasigroupTable table =
        qgc::load_table(std::filesystem::path(dec_table));
    const qgc::InverseTable inverse = qgc::invert_table(table);
    const qgc::CipherKey key = qgc::CipherKey::load(dec_key);
    const auto cipher_bytes = read_file(dec_in);
    if (parse_mode(dec_mode) == qgc::CipherMode::ecb) {
      write_file(dec_out,
                 qgc::decrypt_message_ecb(inverse, key, cipher_bytes));
    } else {
      const qgc::CbcEnvelope env = qgc::CbcEnvelope::from_bytes(cipher_bytes);
      write_file(dec_out, qgc::cbc_decrypt(inverse, key, env));
    }
    return kExitOk;
  }

  if (battery->parsed()) {
    const qgc::CipherRegistry registry = make_registry(bat_table);
    const auto input = battery_input(bat_input, bat_file, (bat_bits + 7) / 8);
    qgc::BatteryConfig config;
    config.runs = bat_runs;
    config.stream_bits = bat_bits;
    auto rng = make_rng(bat_key_seed);
    const qgc::BatterySummary summary = qgc::run_battery(
        registry.get(bat_cipher), input, config, *rng, bat_input);
    std::ostringstream table_text;
    qgc::write_summary(summary, table_text);
    emit(bat_out, table_text.str());
    if (!bat_records.empty()) {
      std::ostringstream records_text;
      qgc::write_records(summary, records_text);
      emit(bat_records, records_text.str());
    }
    return kExitOk;
  }

  if (bench->parsed()) {
    const qgc::CipherRegistry registry = make_registry(bench_table);
    qgc::SystemRandom rng;
    const qgc::BenchReport report = qgc::bench_throughput(
        registry, bench_cipher, bench_payload, bench_trials, rng);
    qgc::write_bench_report(report, std::cout);
    return kExitOk;
  }

  if (compare->parsed()) {
    const qgc::CipherRegistry registry = make_registry(cmp_table);
    const auto input = battery_input(cmp_input, cmp_file, (cmp_bits + 7) / 8);
    qgc::BatteryConfig config;
    config.runs = cmp_runs;
    config.stream_bits = cmp_bits;
    const qgc::BatteryComparison comparison = qgc::compare_battery(
        registry, cmp_ciphers, input, config, cmp_key_seed, cmp_input);
    std::ostringstream text;
    qgc::write_comparison(comparison, text);
    emit(cmp_out, text.str());
    return kExitOk;
  }

  if (count->parsed()) {
    std::cout << qgc::count_reduced_latin_squares(count_order) << '\n';
    return kExitOk;
  }

  if (audio_encrypt->parsed()) {
    const qgc::QuasigroupTable table =
        qgc::load_table(std::filesystem::path(wav_table));
    const qgc::CipherKey key = qgc::CipherKey::load(wav_key);
    const qgc::WavPayload payload =
        qgc::read_wav(std::filesystem::path(wav_in));
    auto rng = make_rng(wav_rng_seed);
    const qgc::WavPayload encrypted =
        qgc::encrypt_wav(payload, table, key, parse_mode(wav_mode), *rng);
    qgc::write_wav(encrypted, std::filesystem::path(wav_out));
    return kExitOk;
  }

  if (audio_decrypt->parsed()) {
    const qgc::QuasigroupTable table =
        qgc::load_table(std::filesystem::path(dwav_table));
    const qgc::InverseTable inverse = qgc::invert_table(table);
    const qgc::CipherKey key = qgc::CipherKey::load(dwav_key);
    const qgc::WavPayload payload =
        qgc::read_wav(std::filesystem::path(dwav_in));
    const qgc::WavPayload decrypted =
        qgc::decrypt_wav(payload, inverse, key, parse_mode(dwav_mode));
    qgc::write_wav(decrypted, std::filesystem::path(dwav_out));
    return kExitOk;
  }

  if (audio_csv->parsed()) {
    const qgc::WavPayload payload =
        qgc::read_wav(std::filesystem::path(csv_in));
    qgc::dump_amplitude_csv(payload, std::filesystem::path(csv_out));
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qgc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
