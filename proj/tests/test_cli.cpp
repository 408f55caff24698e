#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "wav_fixture.hpp"

namespace fs = std::filesystem;
using testutil::check;

namespace {

std::string g_cli;
fs::path g_dir;

int run(const std::string& args, const std::string& stdout_file = "") {
  std::string cmd = g_cli + " " + args;
  if (!stdout_file.empty()) {
    cmd += " > " + (g_dir / stdout_file).string();
  }
  cmd += " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::string at(const std::string& file) { return (g_dir / file).string(); }

void test_keygen() {
  check(run("keygen --seed 11 --out " + at("a.hex")) == 0, "keygen exits 0");
  check(run("keygen --seed 11 --out " + at("b.hex")) == 0, "keygen repeats");
  const std::string a = slurp(g_dir / "a.hex");
  check(a == slurp(g_dir / "b.hex"), "seeded keygen is reproducible");
  check(a.size() == 65 && a.back() == '\n', "key file is 64 hex chars");
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    check(std::isxdigit(static_cast<unsigned char>(a[i])) != 0,
          "key file is hex");
  }
  check(run("keygen --out " + at("r1.hex")) == 0, "random keygen");
  check(run("keygen --out " + at("r2.hex")) == 0, "random keygen again");
  check(slurp(g_dir / "r1.hex") != slurp(g_dir / "r2.hex"),
        "random keys differ");
}

void test_gen_table() {
  check(run("gen-table --seed 5 --out " + at("t1.qg")) == 0, "gen-table");
  check(run("gen-table --seed 5 --out " + at("t2.qg")) == 0,
        "gen-table again");
  check(slurp(g_dir / "t1.qg") == slurp(g_dir / "t2.qg"),
        "same seed gives byte-identical table files");
  check(slurp(g_dir / "t1.qg").starts_with("qg 256\n"),
        "default order is 256");
  check(run("gen-table --order 300 --seed 5 --out " + at("t3.qg")) != 0,
        "order 300 fails");
  check(run("gen-table --seed 5 --binary --out " + at("t1.qgb")) == 0,
        "binary table format");
  check(slurp(g_dir / "t1.qgb").starts_with("qgb 256\n"),
        "binary header format");
}

void test_encrypt_decrypt() {
  spit(g_dir / "m.bin", "attack at dawn, but quietly");
  const std::string table = " --table " + at("t1.qg") + " --key " + at("a.hex");
  check(run("encrypt" + table + " --in " + at("m.bin") + " --out " +
            at("m.enc") + " --rng-seed 3") == 0,
        "cbc encrypt");
  check(slurp(g_dir / "m.enc").starts_with("QGC1"),
        "ciphertext starts with the envelope magic");
  check(run("decrypt" + table + " --in " + at("m.enc") + " --out " +
            at("m.dec")) == 0,
        "cbc decrypt");
  check(slurp(g_dir / "m.dec") == slurp(g_dir / "m.bin"),
        "cbc file round trip");

  check(run("encrypt" + table + " --mode ecb --in " + at("m.bin") +
            " --out " + at("m2.enc")) == 2,
        "ecb rejects unaligned input with a data error");

  spit(g_dir / "m16.bin", std::string(32, 'x'));
  check(run("encrypt" + table + " --mode ecb --in " + at("m16.bin") +
            " --out " + at("m16.enc")) == 0,
        "ecb accepts aligned input");
  check(run("decrypt" + table + " --mode ecb --in " + at("m16.enc") +
            " --out " + at("m16.dec")) == 0,
        "ecb decrypt");
  check(slurp(g_dir / "m16.dec") == slurp(g_dir / "m16.bin"),
        "ecb file round trip");

  // Binary table format drives the same pipeline.
  check(run("encrypt --table " + at("t1.qgb") + " --key " + at("a.hex") +
            " --in " + at("m.bin") + " --out " + at("m3.enc") +
            " --rng-seed 3") == 0,
        "binary table loads");
  check(slurp(g_dir / "m3.enc") == slurp(g_dir / "m.enc"),
        "text and binary tables encrypt identically");
}

void test_count_reduced() {
  check(run("count-reduced --order 5", "count.txt") == 0, "count-reduced");
  check(slurp(g_dir / "count.txt") == "56\n", "order 5 prints 56");
  check(run("count-reduced --order 9") != 0, "order 9 fails");
}

void test_battery_and_compare() {
  const std::string common =
      " --runs 1 --bits 60000 --key-seed 4 --table-seed 1";
  check(run("battery --cipher qg-cbc" + common + " --out " + at("bat.txt") +
            " --records " + at("bat.rec")) == 0,
        "battery runs");
  check(run("battery --cipher qg-cbc" + common + " --out " + at("bat2.txt") +
            " --records " + at("bat2.rec")) == 0,
        "battery repeats");
  check(slurp(g_dir / "bat.rec") == slurp(g_dir / "bat2.rec"),
        "seeded battery is bit-reproducible");
  check(slurp(g_dir / "bat.txt").find("cipher: qg-cbc") != std::string::npos,
        "battery names the cipher");

  // Environment override of the default run count.
  const int env_status = std::system(
      ("QG_BATTERY_RUNS=2 " + g_cli +
       " battery --cipher qg-cbc --bits 60000 --key-seed 4 --table-seed 1"
       " --out " + at("bat3.txt") + " 2> /dev/null")
          .c_str());
  check(WIFEXITED(env_status) && WEXITSTATUS(env_status) == 0,
        "battery honors QG_BATTERY_RUNS");
  check(slurp(g_dir / "bat3.txt").find("runs: 2") != std::string::npos,
        "QG_BATTERY_RUNS sets the default run count");

  check(run("compare --ciphers qg-cbc qg-cbc" + common + " --out " +
            at("cmp.txt")) == 0,
        "self comparison runs");
  const std::string cmp = slurp(g_dir / "cmp.txt");
  std::istringstream lines(cmp);
  std::string line;
  std::getline(lines, line);  // header
  std::getline(lines, line);  // column names
  int rows = 0;
  while (std::getline(lines, line)) {
    check(line.find("100.00") != std::string::npos,
          "self-comparison ratio is 100: " + line);
    ++rows;
  }
  check(rows > 0, "comparison produced rows");
}

void test_audio() {
  const auto wav = wav_fixture::build_wav(wav_fixture::chirp_samples(1024),
                                          11025);
  std::ofstream out(g_dir / "in.wav", std::ios::binary);
  out.write(reinterpret_cast<const char*>(wav.data()),
            static_cast<std::streamsize>(wav.size()));
  out.close();

  const std::string table = " --table " + at("t1.qg") + " --key " + at("a.hex");
  check(run("audio-encrypt" + table + " --in " + at("in.wav") + " --out " +
            at("enc.wav") + " --rng-seed 6") == 0,
        "audio encrypt");
  check(run("audio-decrypt" + table + " --in " + at("enc.wav") + " --out " +
            at("dec.wav")) == 0,
        "audio decrypt");
  check(slurp(g_dir / "dec.wav") == slurp(g_dir / "in.wav"),
        "audio file round trip");

  check(run("audio-csv --in " + at("in.wav") + " --out " + at("amp.csv")) ==
            0,
        "audio csv");
  check(slurp(g_dir / "amp.csv").starts_with("index,amplitude\n"),
        "csv header line");
}

void test_usage_errors() {
  check(run("definitely-not-a-subcommand") == 1, "unknown subcommand exits 1");
  check(run("") == 1, "missing subcommand exits 1");
  check(run("--help") == 0, "--help exits 0");
  check(run("encrypt --mode xyz --table x --key y --in z --out w") == 1,
        "bad mode value exits 1");
  check(run("decrypt --table " + at("t1.qg") + " --key " + at("a.hex") +
            " --in " + at("count.txt") + " --out " + at("junk.bin")) == 2,
        "garbage ciphertext exits 2");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-qg-binary>\n");
    return 2;
  }
  g_cli = argv[1];
  g_dir = fs::temp_directory_path() / "qgc_cli_test";
  fs::remove_all(g_dir);
  fs::create_directories(g_dir);

  test_keygen();
  test_gen_table();
  test_encrypt_decrypt();
  test_count_reduced();
  test_battery_and_compare();
  test_audio();
  test_usage_errors();

  fs::remove_all(g_dir);
  return testutil::finish("test_cli");
}
