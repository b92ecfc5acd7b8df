#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using diskflow::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

size_t lines(const std::string& s) {
  size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "diskflow_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("count") {
  auto r = call({"count", "--nodes", "8", "--enumerate"});
  CHECK(r.code == 0);
  CHECK(r.out == "formula=216 census=216 OK\n");
  r = call({"count", "--nodes", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "formula=1\n");
  CHECK(call({"count", "--nodes", "7"}).code == 2);
  CHECK(call({"count"}).code == 2);
  CHECK(call({"count", "--nodes", "20", "--enumerate"}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({}).code == 2);
}

TEST_CASE("enumerate") {
  auto r = call({"enumerate", "--nodes", "4", "--out", "-"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 4);
  CHECK(r.err.find("wrote 4") != std::string::npos);

  const auto file = scratch() / "c10.jsonl";
  r = call({"enumerate", "--nodes", "10", "--out", file.string()});
  CHECK(r.code == 0);
  CHECK(lines(slurp(file)) == 1890);

  const auto six = scratch() / "c6.jsonl";
  CHECK(call({"enumerate", "--nodes", "6", "--out", six.string()}).code == 0);
  CHECK(lines(slurp(six)) == 27);
}

TEST_CASE("enumerate output is identical across worker counts") {
  const auto one = call({"enumerate", "-n", "12", "-o", "-", "-w", "1"});
  const auto four = call({"enumerate", "-n", "12", "-o", "-", "-w", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(lines(one.out) == 17496);
}

TEST_CASE("output directory from the environment") {
  const auto dir = scratch() / "outdir";
  fs::create_directories(dir);
  ::setenv("DISKFLOW_OUTPUT_DIR", dir.c_str(), 1);
  const auto r = call({"enumerate", "-n", "6", "-o", "rel.jsonl"});
  ::unsetenv("DISKFLOW_OUTPUT_DIR");
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "rel.jsonl"));
}

TEST_CASE("unwritable output") {
  const auto r = call({"enumerate", "-n", "6", "-o", "/nonexistent-dir/x.jsonl"});
  CHECK(r.code == 1);
}

TEST_CASE("graph") {
  auto r = call({"graph", "--nodes", "6", "--format", "dot", "--sense", "compat"});
  CHECK(r.code == 0);
  size_t edges = 0;
  for (size_t pos = r.out.find(" -- "); pos != std::string::npos; pos = r.out.find(" -- ", pos + 1)) ++edges;
  CHECK(edges == 27);
  r = call({"graph", "--nodes", "8", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["vertices"].size() == 48);
  r = call({"graph", "--nodes", "4", "--format", "dot", "--sense", "conflict"});
  edges = 0;
  for (size_t pos = r.out.find(" -- "); pos != std::string::npos; pos = r.out.find(" -- ", pos + 1)) ++edges;
  CHECK(edges == 6);
  CHECK(call({"graph", "--nodes", "6", "--format", "png"}).code == 2);
}

TEST_CASE("orbits") {
  auto r = call({"orbits", "--nodes", "6", "--group", "full"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("orbits=4\n", 0) == 0);
  CHECK(r.out.find("burnside=4 OK") != std::string::npos);
  r = call({"orbits", "--nodes", "6", "--group", "rot"});
  CHECK(r.out.rfind("orbits=6\n", 0) == 0);
  r = call({"orbits", "--nodes", "4"});
  CHECK(r.out.rfind("orbits=1\n", 0) == 0);
  r = call({"orbits", "--nodes", "8", "--json"});
  CHECK(nlohmann::json::parse(r.out)["orbits"] == 15);
  CHECK(call({"orbits", "--nodes", "16"}).code == 2);
}

TEST_CASE("verify") {
  auto r = call({"verify", "--suite", "identities", "--max-n", "40"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["first_failure"].is_null());

  r = call({"verify", "--suite", "census", "--max-n", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle equivalence n=10") != std::string::npos);

  r = call({"verify", "--suite", "graph", "--max-n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("K33") != std::string::npos);
  CHECK(r.out.find("degree support") != std::string::npos);

  CHECK(call({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("render") {
  const auto six = scratch() / "r6.jsonl";
  REQUIRE(call({"enumerate", "-n", "6", "-o", six.string()}).code == 0);
  const auto svg = scratch() / "r6.svg";
  auto r = call({"render", "--in", six.string(), "--index", "0", "--out", svg.string()});
  CHECK(r.code == 0);
  CHECK(slurp(svg).find("<svg") != std::string::npos);
  CHECK(call({"render", "--in", six.string(), "--index", "27"}).code == 2);
  CHECK(call({"render", "--in", six.string(), "--index", "-1"}).code == 2);
  CHECK(call({"render", "--in", (scratch() / "missing.jsonl").string(), "--index", "0"}).code == 1);

  const auto bad = scratch() / "bad.jsonl";
  std::ofstream(bad) << "{\"n\":6,\"lines\":[[1,3,5],[1,3,3]]}\n";
  r = call({"render", "--in", bad.string(), "--index", "0"});
  CHECK(r.code == 1);
  CHECK(r.err.find("rule 1a violation") != std::string::npos);
}

TEST_CASE("bench") {
  auto r = call({"bench", "--nodes", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("count=4 ") != std::string::npos);
  r = call({"bench", "--nodes", "12", "--workers", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("workers=2 count=17496") != std::string::npos);
}
