// End-to-end checks against the installed binary; STAIRCASE_CLI names
// its path (ctest sets it).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

std::string cli() {
  const char* p = std::getenv("STAIRCASE_CLI");
  REQUIRE_MESSAGE(p != nullptr, "STAIRCASE_CLI must point at the binary");
  return p;
}

struct run_result {
  int code = -1;
  std::string out;
};

run_result run(const std::string& args) {
  run_result r;
  const std::string cmd = cli() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct temp_dir {
  fs::path path;
  temp_dir() {
    std::string tmpl =
        (fs::temp_directory_path() / "staircase-test-XXXXXX").string();
    char* got = mkdtemp(tmpl.data());
    REQUIRE(got != nullptr);
    path = got;
  }
  ~temp_dir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::vector<std::uint8_t> read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
}

void write_all(const fs::path& p, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(p, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("split and reconstruct roundtrip a small file") {
  temp_dir dir;
  std::mt19937_64 rng(6);
  std::vector<std::uint8_t> data(1000);
  for (auto& b : data) b = static_cast<std::uint8_t>(rng());
  write_all(dir.path / "data.bin", data);

  auto split = run("split " + (dir.path / "data.bin").string() +
                   " --n 4 --k 1 --z 1 --kind universal --out " +
                   dir.path.string());
  REQUIRE_MESSAGE(split.code == 0, split.out);

  std::string shares;
  for (int i : {0, 2, 3}) {
    char name[32];
    std::snprintf(name, sizeof name, "data.bin.share%03d", i);
    shares += " " + (dir.path / name).string();
  }
  auto rec = run("reconstruct" + shares + " --out " +
                 (dir.path / "back.bin").string());
  REQUIRE_MESSAGE(rec.code == 0, rec.out);
  CHECK(read_all(dir.path / "back.bin") == data);
  CHECK(rec.out.find("CO=1/2 unit") != std::string::npos);
}

TEST_CASE("split handles the empty file with one padded block") {
  temp_dir dir;
  write_all(dir.path / "empty", {});
  auto split = run("split " + (dir.path / "empty").string() +
                   " --n 3 --k 1 --z 1 --kind fixed --d 2 --out " +
                   dir.path.string());
  REQUIRE_MESSAGE(split.code == 0, split.out);
  auto ins = run("inspect " + (dir.path / "empty.share000").string());
  REQUIRE(ins.code == 0);
  CHECK(ins.out.find("secret bytes: 0") != std::string::npos);
  CHECK(ins.out.find("blocks: 1") != std::string::npos);

  auto rec = run("reconstruct " + (dir.path / "empty.share000").string() +
                 " " + (dir.path / "empty.share001").string() + " --out " +
                 (dir.path / "empty.back").string());
  REQUIRE_MESSAGE(rec.code == 0, rec.out);
  CHECK(read_all(dir.path / "empty.back").empty());
}

TEST_CASE("parameter errors exit with code 2") {
  temp_dir dir;
  write_all(dir.path / "x", {1, 2, 3});
  auto r = run("split " + (dir.path / "x").string() +
               " --n 2 --k 2 --z 1 --kind universal --out " +
               dir.path.string());
  CHECK(r.code == 2);
  auto r2 = run("split " + (dir.path / "x").string() +
                " --n 4 --k 1 --z 1 --kind fixed --out " + dir.path.string());
  CHECK(r2.code == 2);
  auto r3 = run("plan 1 --n 4 --k 1 --z 1 --kind universal");
  CHECK(r3.code == 3);
}

TEST_CASE("plan prints the read plan") {
  auto r = run("plan 3 --n 4 --k 1 --z 1 --kind universal");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("read 3 symbols/party, CO=1/2 unit") != std::string::npos);

  auto r2 = run("plan 2 --n 4 --k 1 --z 1 --kind fixed --d 3");
  REQUIRE(r2.code == 0);
  CHECK(r2.out.find("read 2 symbols/party, CO=1 unit") != std::string::npos);
}

TEST_CASE("inspect reports scheme and overhead tables") {
  temp_dir dir;
  write_all(dir.path / "f", {9, 9, 9, 9});
  auto split = run("split " + (dir.path / "f").string() +
                   " --n 4 --k 1 --z 1 --kind universal --out " +
                   dir.path.string());
  REQUIRE(split.code == 0);
  auto ins = run("inspect " + (dir.path / "f.share001").string());
  REQUIRE(ins.code == 0);
  CHECK(ins.out.find("supported d: 4 3 2") != std::string::npos);
  CHECK(ins.out.find("d=4: read 2 symbols/party, CO=1/3 unit") !=
        std::string::npos);
  CHECK(ins.out.find("d=3: read 3 symbols/party, CO=1/2 unit") !=
        std::string::npos);
  CHECK(ins.out.find("d=2: read 6 symbols/party, CO=1 unit") !=
        std::string::npos);
  CHECK(ins.out.find("t'=3: keep 3 symbols/block, SC=1/2 unit") !=
        std::string::npos);

  auto bad = run("inspect " + (dir.path / "nonexistent").string());
  CHECK(bad.code == 5);

  // Truncating the file payload makes it malformed.
  auto bytes = read_all(dir.path / "f.share001");
  bytes.pop_back();
  write_all(dir.path / "trunc", bytes);
  auto ins2 = run("inspect " + (dir.path / "trunc").string());
  CHECK(ins2.code == 4);
}

TEST_CASE("rethreshold truncates and refuses lowering") {
  temp_dir dir;
  std::vector<std::uint8_t> data(100, 0x42);
  write_all(dir.path / "d", data);
  auto split = run("split " + (dir.path / "d").string() +
                   " --n 4 --k 1 --z 1 --kind universal --out " +
                   dir.path.string());
  REQUIRE(split.code == 0);

  const auto before = fs::file_size(dir.path / "d.share000");
  for (int i = 0; i < 4; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "d.share%03d", i);
    auto rt = run("rethreshold " + (dir.path / name).string() +
                  " 3 --in-place");
    REQUIRE_MESSAGE(rt.code == 0, rt.out);
  }
  const auto after = fs::file_size(dir.path / "d.share000");
  CHECK(after < before);

  auto ins = run("inspect " + (dir.path / "d.share000").string());
  CHECK(ins.out.find("current threshold: 3") != std::string::npos);
  CHECK(ins.out.find("symbols per block: 3") != std::string::npos);

  // Lowering back to 2 is refused.
  auto lower = run("rethreshold " + (dir.path / "d.share000").string() +
                   " 2 --in-place");
  CHECK(lower.code == 2);

  // Two shares are no longer enough; three still decode.
  auto rec2 = run("reconstruct " + (dir.path / "d.share000").string() + " " +
                  (dir.path / "d.share001").string() + " --out " +
                  (dir.path / "no.bin").string());
  CHECK(rec2.code == 3);
  auto rec3 = run("reconstruct " + (dir.path / "d.share000").string() + " " +
                  (dir.path / "d.share001").string() + " " +
                  (dir.path / "d.share002").string() + " --out " +
                  (dir.path / "yes.bin").string());
  REQUIRE_MESSAGE(rec3.code == 0, rec3.out);
  CHECK(read_all(dir.path / "yes.bin") == data);
}

TEST_CASE("mixed share sets are rejected") {
  temp_dir dir;
  write_all(dir.path / "a", std::vector<std::uint8_t>(10, 1));
  write_all(dir.path / "b", std::vector<std::uint8_t>(10, 2));
  REQUIRE(run("split " + (dir.path / "a").string() +
              " --n 3 --k 1 --z 1 --kind universal --out " +
              dir.path.string())
              .code == 0);
  REQUIRE(run("split " + (dir.path / "b").string() +
              " --n 3 --k 1 --z 2 --kind universal --out " +
              dir.path.string())
              .code == 0);
  auto rec = run("reconstruct " + (dir.path / "a.share000").string() + " " +
                 (dir.path / "b.share001").string() + " --out " +
                 (dir.path / "out").string());
  CHECK(rec.code == 4);

  auto dupe = run("reconstruct " + (dir.path / "a.share000").string() + " " +
                  (dir.path / "a.share000").string() + " --out " +
                  (dir.path / "out").string());
  CHECK(dupe.code == 4);
}

TEST_CASE("a header lying about its length is rejected") {
  temp_dir dir;
  write_all(dir.path / "x", std::vector<std::uint8_t>(50, 7));
  REQUIRE(run("split " + (dir.path / "x").string() +
              " --n 3 --k 1 --z 1 --kind universal --out " +
              dir.path.string())
              .code == 0);
  // Rewrite share 0 with blocks=0, an empty payload, and the original
  // nonzero secret length; the length check alone would pass.
  auto bytes = read_all(dir.path / "x.share000");
  const std::size_t blocks_off = 19 + 2 + 2 + 2 + 8;  // after delta count
  bytes[blocks_off + 0] = 0;
  bytes[blocks_off + 1] = 0;
  bytes[blocks_off + 2] = 0;
  bytes[blocks_off + 3] = 0;
  bytes.resize(blocks_off + 4);
  write_all(dir.path / "x.share000", bytes);
  auto lying = read_all(dir.path / "x.share001");
  // Patch the sibling the same way so the set stays self-consistent.
  lying.resize(blocks_off + 4);
  for (int i = 0; i < 4; ++i) lying[blocks_off + i] = 0;
  write_all(dir.path / "x.share001", lying);
  auto rec = run("reconstruct " + (dir.path / "x.share000").string() + " " +
                 (dir.path / "x.share001").string() + " --out " +
                 (dir.path / "y").string());
  CHECK(rec.code == 4);
}

TEST_CASE("selftest passes and detects injected faults") {
  auto st = run("selftest --max-n 4");
  REQUIRE_MESSAGE(st.code == 0, st.out);
  CHECK(st.out.find("all checks passed") != std::string::npos);

  auto inj = run("selftest --max-n 3 --inject-fault");
  REQUIRE_MESSAGE(inj.code == 0, inj.out);
  CHECK(inj.out.find("injected layout fault is detected") !=
        std::string::npos);
}

TEST_SUITE_END();
