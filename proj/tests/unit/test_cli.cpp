#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ordwalk/json_io.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "ordwalk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = ordwalk::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli ordinal commands") {
  CHECK(call({"ord", "parse", "5 + w"}).out == "w\n");
  CHECK(call({"ord", "cmp", "w", "w"}).out == "equal\n");
  CHECK(call({"ord", "add", "w + 3", "w^2"}).out == "w^2\n");
  CHECK(call({"ord", "succ", "w"}).out == "w + 1\n");
  CHECK(call({"ord", "islimit", "w*2"}).out == "true\n");
  const Result bad = call({"ord", "parse", "w^"});
  CHECK(bad.status == 2);
  CHECK(bad.err.rfind("error: syntax:", 0) == 0);
  CHECK(call({"ord", "parse", "99999999999999999999"}).status == 3);
}

TEST_CASE("cli walks") {
  CHECK(call({"walk", "rho2", "--alpha", "0", "--beta", "w^2"}).out == "3\n");
  const Result rev = call({"walk", "rho2", "--alpha", "w", "--beta", "3"});
  CHECK(rev.status == 1);
  CHECK(rev.err.rfind("error: domain:", 0) == 0);
  const Result j = call({"--format", "json", "walk", "trace", "--alpha", "2", "--beta", "w*2"});
  REQUIRE(j.status == 0);
  const auto rec = ordwalk::Json::parse(j.out);
  CHECK(rec.at("rho2") == 3);
  CHECK(rec.at("points") == ordwalk::Json::parse(R"(["w*2","w + 1","w","2"])"));
  CHECK(call({"--step-guard", "2", "walk", "rho2", "--alpha", "0", "--beta", "w^(w)"}).status == 3);
}

TEST_CASE("cli usage errors") {
  CHECK(call({}).status == 2);
  CHECK(call({"walk", "rho2", "--alpha", "0"}).status == 2);
  CHECK(call({"--format", "yaml", "ord", "parse", "w"}).status == 2);
  CHECK(call({"nosuch"}).status == 2);
}

TEST_CASE("cli ladder commands") {
  CHECK(call({"ladder", "pair", "0", "1"}).out == "2\n");
  const Result csv = call({"--format", "csv", "ladder", "fiber", "--gamma", "w + 1", "--alpha",
                           "w", "--prefix", "3"});
  REQUIRE(csv.status == 0);
  CHECK(csv.out.rfind("alpha,prefix,value,count\n", 0) == 0);
  CHECK(call({"ladder", "fiber", "--gamma", "w", "--alpha", "w", "--prefix", "3"}).status == 1);
}

TEST_CASE("cli json output is deterministic and --out writes a file") {
  const std::vector<std::string> args{"--format", "json", "--seed", "5", "space", "extract",
                                      "--set", "w,w^2,w^3", "--alpha", "w^(w)", "--m", "3"};
  const Result a = call(args);
  const Result b = call(args);
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);

  const auto path = std::filesystem::temp_directory_path() / "ordwalk_cli_out.json";
  std::filesystem::remove(path);
  auto with_out = args;
  with_out.insert(with_out.begin(), {"--out", path.string()});
  REQUIRE(call(with_out).status == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == a.out);
  std::filesystem::remove(path);
}
