#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "epgap/cli.hpp"

using nlohmann::json;
namespace cli = epgap::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "epgap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("parse_limit") {
  CHECK(cli::parse_limit("1000") == 1000);
  CHECK(cli::parse_limit("1e6") == 1000000);
  CHECK(cli::parse_limit("25e2") == 2500);
  CHECK_THROWS_AS(cli::parse_limit("1e20"), std::range_error);
  CHECK_THROWS_AS(cli::parse_limit("99999999999999999999"), std::range_error);
  CHECK_THROWS_AS(cli::parse_limit("abc"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_limit(""), std::invalid_argument);
}

TEST_CASE("sieve and gaps emit csv") {
  auto r = call({"sieve", "--limit", "30"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.rfind("n,p\n1,2\n2,3\n3,5\n", 0) == 0);
  CHECK(r.out.find("10,29\n") != std::string::npos);
  r = call({"gaps", "--limit", "20"});
  CHECK(r.out == "n,p,d\n2,3,1\n3,5,2\n4,7,2\n5,11,4\n6,13,2\n7,17,4\n8,19,2\n");
  r = call({"sieve", "--limit", "30", "--format", "json"});
  CHECK(json::parse(r.out)["count"] == 10);
}

TEST_CASE("form reports") {
  auto r = call({"form", "--coeffs", "1,-1", "--limit", "1000"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["classification"] == "ONE_SIGNED");
  CHECK(j["sign_changes"] == 0);

  r = call({"form", "--coeffs", "-1,2,-1", "--limit", "1e5"});
  j = json::parse(r.out);
  CHECK(j["classification"] == "MIXED_SIGN");
  CHECK(j["erdos_easy"] == true);
  CHECK(j["sign_changes"].get<int>() >= 100);

  r = call({"form", "--coeffs", "1,1", "--limit", "100"});
  CHECK(json::parse(r.out)["classification"] == "NOT_ZERO_SUM");
}

TEST_CASE("records and superdominant") {
  auto r = call({"records", "--limit", "1e6", "--c1", "0"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["count"] == 12);
  CHECK(j["revalidated"] == true);
  CHECK(j["records"].back()["p"] == 838349);
  r = call({"records", "--limit", "1e4", "--format", "csv"});
  CHECK(r.out.rfind("m,p,d,ratio_num,ratio_den,normalized\n", 0) == 0);
  r = call({"superdominant", "--limit", "1e6"});
  CHECK(json::parse(r.out)["count"] == 15395);
}

TEST_CASE("tuple checks") {
  auto j = json::parse(call({"tuple", "--h", "0,2,4"}).out);
  CHECK(j["admissible"] == false);
  CHECK(j["witness"] == 3);
  j = json::parse(call({"tuple", "--h", "0,2,6"}).out);
  CHECK(j["admissible"] == true);
  auto r = call({"tuple", "--h", "0,10", "--w", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"prime\": 5") != std::string::npos);
}

TEST_CASE("ept subcommands") {
  auto r = call({"ept", "params", "--ell", "1"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["L"] == 3);
  CHECK(j["m"] == 153);
  CHECK(j["J"] == 79);
  CHECK(j["k"] == 4898);

  r = call({"ept", "verify", "--ell", "1"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["ok"] == true);

  r = call({"ept", "simulate", "--toy", "3,2,2,2", "--exhaustive"});
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["trials_run"] == 256);
  CHECK(j["selections"] == 256);
}

TEST_CASE("simulate trace is line delimited") {
  auto r = call({"ept", "simulate", "--ell", "1", "--trials", "25", "--seed", "4", "--trace"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  json last;
  while (std::getline(in, line)) {
    last = json::parse(line);
    ++lines;
  }
  CHECK(lines == 26);
  CHECK(last["trials_run"] == 25);
}

TEST_CASE("repeated runs are byte identical") {
  const std::vector<std::vector<std::string>> cmds = {
      {"ept", "simulate", "--ell", "1", "--trials", "300", "--seed", "9"},
      {"ept", "simulate", "--ell", "1", "--trials", "300", "--seed", "9", "--threads", "3"},
      {"form", "--coeffs", "2,-3,1", "--limit", "5e4"},
      {"records", "--limit", "2e5", "--ell", "2"},
  };
  for (const auto& c : cmds) CHECK(call(c).out == call(c).out);
  CHECK(call(cmds[0]).out == call(cmds[1]).out);
}

TEST_CASE("errors and usage") {
  auto r = call({"sieve", "--bogus"});
  CHECK(r.code == cli::kExitUsage);
  r = call({});
  CHECK(r.code == cli::kExitUsage);
  r = call({"sieve", "--limit", "1e30"});
  CHECK(r.code == cli::kExitError);
  auto j = json::parse(r.err);
  CHECK(j["error"] == "range_error");
  r = call({"form", "--coeffs", "1", "--limit", "100"});
  CHECK(r.code == cli::kExitError);
  r = call({"tuple", "--h", "0,4,2"});
  CHECK(r.code == cli::kExitError);
  CHECK(json::parse(r.err)["error"] == "invalid_argument");
  r = call({"ept", "simulate", "--ell", "1", "--exhaustive"});
  CHECK(r.code == cli::kExitError);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "epgap_cli_out_test.csv";
  auto r = call({"gaps", "--limit", "20", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == call({"gaps", "--limit", "20"}).out);
  std::filesystem::remove(path);
}
