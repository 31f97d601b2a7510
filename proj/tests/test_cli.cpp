#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = sring::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
  return out;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("sring_cli_" + std::to_string(counter()++))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path() const { return path_.string(); }

 private:
  static int& counter() {
    static int c = 0;
    return c;
  }
  fs::path path_;
};

const char* kZ24 = R"({"ring":{"type":"zmod","n":24},"mult_set":{"generators":[2]}})";

}  // namespace

TEST_CASE("check s-reduced prints the certificate") {
  TempDir dir;
  const auto file = dir.write("z24.json", kZ24);
  const Run r = run({"check", "s-reduced", file});
  CHECK(r.code == sring::cli::kOk);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 2);
  CHECK(out[0]["manifest"]["inputs"][0]["sha256"] == sring::cli::sha256_file(file));
  CHECK(out[1]["predicate"] == "s-reduced");
  CHECK(out[1]["verdict"] == true);
  CHECK(out[1]["witnesses"]["uniform"] == 4);
}

TEST_CASE("spectrum and localize on Z24") {
  TempDir dir;
  const auto file = dir.write("z24.json", kZ24);
  const auto spec = lines(run({"spectrum", file}).out);
  REQUIRE(spec.size() == 2);
  CHECK(spec[1]["spectrum"].size() == 4);
  CHECK(spec[1]["intersection"] == json::array({0}));
  const auto loc = lines(run({"localize", file}).out);
  CHECK(loc[1]["localized_size"] == 3);
  CHECK(loc[1]["field"] == true);
  CHECK(loc[1]["torsion"] == json::array({0, 3, 6, 9, 12, 15, 18, 21}));
}

TEST_CASE("missing mult_set means S = {1}") {
  TempDir dir;
  const auto file = dir.write("z30.json", R"({"ring":{"type":"zmod","n":30}})");
  const auto d = lines(run({"describe", file}).out);
  CHECK(d[1]["multiplicative_set"] == json::array({1}));
  CHECK(d[1]["ideals"] == 8);
}

TEST_CASE("exit codes") {
  TempDir dir;
  const auto zero = dir.write("z4.json", R"({"ring":{"type":"zmod","n":4},"mult_set":{"generators":[2]}})");
  const auto broken = dir.write("bad.json", "{\"ring\": {\"type\":\"zmod\",\n \"n\": }");
  const auto wrong_key = dir.write("key.json", R"({"ring":{"type":"product","factors":[{"type":"zmod"}]}})");
  const auto modulus = dir.write("one.json", R"({"ring":{"type":"zmod","n":1}})");
  const auto big = dir.write("big.json", R"({"ring":{"type":"zmod","n":5000}})");
  const auto good = dir.write("z24.json", kZ24);

  CHECK(run({"check", "s-reduced", zero}).code == sring::cli::kZeroInClosure);
  CHECK(run({"--allow-zero", "check", "s-reduced", zero}).code == sring::cli::kOk);

  const Run parse = run({"check", "s-reduced", broken});
  CHECK(parse.code == sring::cli::kUsage);
  CHECK(parse.err.find("line 2") != std::string::npos);
  const Run key = run({"describe", wrong_key});
  CHECK(key.code == sring::cli::kUsage);
  CHECK(key.err.find("ring.factors[0]") != std::string::npos);
  CHECK(run({"describe", modulus}).code == sring::cli::kUsage);
  CHECK(run({"describe", dir.path() + "/absent.json"}).code == sring::cli::kUsage);

  CHECK(run({"describe", big}).code == sring::cli::kSizeCap);
  CHECK(run({"--size-cap", "10", "describe", good}).code == sring::cli::kSizeCap);

  // Unknown names are rejected before any computation.
  const Run unknown = run({"check", "s-bogus", good});
  CHECK(unknown.code == sring::cli::kUsage);
  CHECK(unknown.out.empty());
  CHECK(run({"verify", "--statement", "NOPE"}).code == sring::cli::kUsage);
  CHECK(run({"verify"}).code == sring::cli::kUsage);
  CHECK(run({"search", "--statement", "SPECTRUM_S_ZERO", "--variant", "sideways"}).code ==
        sring::cli::kUsage);
  CHECK(run({}).code == sring::cli::kUsage);
  CHECK(run({"--help"}).code == sring::cli::kOk);

  // Exhaustive Armendariz over Z24 at degree 1 needs 24^4 pairs.
  CHECK(run({"check", "s-armendariz", good, "--degree", "1", "--budget", "1000"}).code ==
        sring::cli::kComputation);
}

TEST_CASE("sha256 of a known file") {
  TempDir dir;
  const auto file = dir.write("abc.txt", "abc");
  CHECK(sring::cli::sha256_file(file) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sring::cli::sha256_file(dir.path() + "/missing").empty());
}

TEST_CASE("verify output is byte-identical across runs") {
  const std::vector<std::string> args = {"verify", "--statement", "SPECTRUM_S_ZERO",
                                         "--statement", "PRODUCT_OF_FIELDS", "--seed", "42"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == sring::cli::kOk);
  CHECK(a.out == b.out);
  const auto out = lines(a.out);
  CHECK(out[0]["manifest"]["seed"] == 42);
  CHECK_FALSE(out[0]["manifest"].contains("wall_clock_seconds"));
  CHECK_FALSE(out[1].contains("runtime_seconds"));
  // The summary table goes to stderr while reports use stdout.
  CHECK(a.err.find("SPECTRUM_S_ZERO") != std::string::npos);

  const auto timed = lines(run({"--timings", "verify", "--statement", "NILS_S_ZERO"}).out);
  CHECK(timed[0]["manifest"].contains("wall_clock_seconds"));
  CHECK(timed[1].contains("runtime_seconds"));
}

TEST_CASE("verify over a corpus directory and into a file") {
  TempDir dir;
  dir.write("a_z24.json", kZ24);
  dir.write("b_z30.json", R"({"ring":{"type":"zmod","n":30}})");
  TempDir out_dir;
  const std::string target = out_dir.path() + "/reports.jsonl";
  const Run r = run({"verify", "--all", "--corpus", dir.path(), "--output", target});
  CHECK(r.code == sring::cli::kOk);
  CHECK(r.out.find("PRODUCT_OF_FIELDS") != std::string::npos);
  std::ifstream in(target);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto out = lines(buf.str());
  REQUIRE(out.size() == 1 + 18 * 2);
  CHECK(out[0]["manifest"]["inputs"].size() == 2);
  CHECK(out[1]["instance"] == "Z24 S=<2>");
  CHECK(out[2]["instance"] == "Z30 S={1}");
}

TEST_CASE("search reports a shrunk counterexample") {
  const Run r = run({"search", "--statement", "S_RADICAL_QUOTIENT", "--variant", "drop-hypothesis"});
  CHECK(r.code == sring::cli::kOk);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 2);
  CHECK(out[1]["found"] == true);
  CHECK(out[1]["counterexample"]["instance"] == "Z6 S=<2>");
  CHECK(out[1]["counterexample"]["input"]["ring"]["n"] == 6);
}
