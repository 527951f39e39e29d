#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dunkl/cli.hpp"
#include "dunkl/report_io.hpp"

using dunkl::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "dunkl_cli");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("ranges") {
  CHECK(dunkl::cli::parse_range("1:2:3") == std::vector<double>{1.0, 1.5, 2.0});
  CHECK(dunkl::cli::parse_range("1:2:0").empty());
  CHECK(dunkl::cli::parse_range("0.5, 2") == std::vector<double>{0.5, 2.0});
  CHECK_THROWS(dunkl::cli::parse_range("1:x:2"));
}

TEST_CASE("bp-check report") {
  const Outcome o = call({"bp-check", "--weight", "power:-0.5", "--p", "2"});
  REQUIRE(o.code == 0);
  const auto j = dunkl::io::Json::parse(o.out);
  CHECK(j["verdict"] == "member");
  CHECK(j["sup"].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(j["version"] == dunkl::cli::kVersion);
  CHECK(j["config"]["weight"] == "power:-0.5");
  CHECK(call({"bp-check", "--weight", "power:-0.5", "--expect", "member"}).code == 0);
  CHECK(call({"bp-check", "--weight", "power:2", "--expect", "member"}).code == 1);
}

TEST_CASE("pitt-verify exit codes") {
  const Outcome ok = call({"pitt-verify", "--d", "3", "--gamma", "0", "--p", "2", "--q", "2", "--alpha", "-1",
                           "--beta", "1", "--family", "gaussian"});
  REQUIRE(ok.code == 0);
  const auto j = dunkl::io::Json::parse(ok.out);
  CHECK(j["pitt_index"]["admissible"] == true);
  CHECK(j["verdict"] == "finite");
  const Outcome bad = call({"pitt-verify", "--d", "3", "--p", "2", "--q", "2", "--alpha", "-1", "--beta", "2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("index constraint") != std::string::npos);
  CHECK(call({"pitt-verify", "--p", "two"}).code == 2);
  CHECK(call({"no-such-command"}).code == 2);
  CHECK(call({"pitt-verify", "--family", "triangle"}).code == 2);
}

TEST_CASE("divergence is a report field") {
  const Outcome o = call({"rearrange", "--family", "power", "--a", "1"});
  CHECK(o.code == 0);
  CHECK(dunkl::io::Json::parse(o.out)["verdict"] == "divergent");
}

TEST_CASE("config file, flags win") {
  const std::string path = "cli_test.cfg";
  {
    std::ofstream f(path);
    f << "# pitt example\ncommand = pitt-verify\nalpha=-1\nbeta=2\n";
  }
  CHECK(call({"--config", path}).code == 2);
  const Outcome o = call({"--config", path, "--beta", "1"});
  REQUIRE(o.code == 0);
  CHECK(dunkl::io::Json::parse(o.out)["config"]["beta"] == "1");
  CHECK(call({"--config", "missing.cfg", "bp-check"}).code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  for (int i = 0; i < 2; ++i) {
    const std::string k = std::to_string(i);
    REQUIRE(call({"thm1-verify", "--family", "indicator", "--out", "thm1_" + k + ".json", "--csv",
                  "thm1_" + k + ".csv"})
                .code == 0);
  }
  CHECK(slurp("thm1_0.json") == slurp("thm1_1.json"));
  CHECK(slurp("thm1_0.csv") == slurp("thm1_1.csv"));
  CHECK(!slurp("thm1_0.json").empty());
}

TEST_CASE("sweeps") {
  REQUIRE(call({"sweep", "--alpha", "0:1:0", "--csv", "empty.csv"}).code == 0);
  CHECK(slurp("empty.csv") == "index,p,q,alpha,beta,admissible,constraint_residual,lhs,rhs,ratio,status\n");

  REQUIRE(call({"sweep", "--target", "thm1", "--alpha", "-2,-1", "--beta", "1,2", "--csv", "thm1.csv",
                "--expect", "consistent"})
              .code == 0);
  std::istringstream rows(slurp("thm1.csv"));
  std::string line;
  int n = 0;
  int inadmissible = 0;
  std::getline(rows, line);
  while (std::getline(rows, line)) {
    ++n;
    if (line.find(",false,") != std::string::npos) ++inadmissible;
  }
  CHECK(n == 4);
  CHECK(inadmissible == 2);

  const Outcome solved = call({"sweep", "--alpha", "-2:-0.5:4", "--solve", "beta", "--expect", "bounded"});
  CHECK(solved.code == 0);
  CHECK(call({"sweep", "--p", "1.5,2", "--q", "2,3", "--alpha", "-1,-2"}).code == 2);
}
