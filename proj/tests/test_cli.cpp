#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = tasep::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) {
  std::size_t count = 0;
  for (char c : s) count += c == '\n' ? 1 : 0;
  return count;
}

}  // namespace

TEST_CASE("enumerate") {
  const Result two = run({"enumerate", "--n", "2", "--format", "text"});
  CHECK(two.code == 0);
  CHECK(lines(two.out) == 5);
  CHECK(two.out.rfind("(((LL)L)L) 00 mu=a^2\n", 0) == 0);

  CHECK(lines(run({"enumerate", "--n", "3", "--marked", "--format", "text"}).out) == 20);

  const Result zero = run({"enumerate", "--n", "0", "--format", "csv"});
  CHECK(zero.out == "tree,config,l,r\n(LL),,0,0\n");

  const auto json = nlohmann::json::parse(run({"enumerate", "--n", "2", "--format", "json"}).out);
  REQUIRE(json.size() == 5);
  CHECK(json[2]["tree"] == "((LL)(LL))");
  CHECK(json[2]["config"] == "01");

  CHECK(run({"enumerate", "--n", "0", "--marked"}).code == 2);
  CHECK(run({"enumerate", "--n", "-1"}).code == 2);
  CHECK(run({"enumerate", "--n", "14"}).code == 2);
  CHECK(run({"enumerate"}).code == 2);
  CHECK(run({"enumerate", "--n", "2", "--format", "yaml"}).code == 2);
}

TEST_CASE("stationary") {
  const Result sym = run({"stationary", "--n", "2", "--symbolic", "--format", "text"});
  CHECK(sym.code == 0);
  CHECK(sym.out == "00  a^2\n10  b + a\n01  a*b\n11  b^2\nZ  b + b^2 + a + a*b + a^2\n");

  const auto weights = nlohmann::json::parse(run({"stationary", "--n", "2", "--symbolic", "--format", "json"}).out);
  CHECK(weights["n"] == 2);
  CHECK(weights["weights"][1]["config"] == "10");
  CHECK(weights["weights"][1]["poly"].size() == 2);
  CHECK(weights["Z"].size() == 5);
  CHECK(weights["Z"][0] == nlohmann::json{{"l", 0}, {"r", 1}, {"c", 1}});

  const Result num = run({"stationary", "--n", "2", "--alpha", "1/1", "--beta", "1/1", "--format", "csv"});
  CHECK(num.out == "config,probability\n00,1/5\n10,2/5\n01,1/5\n11,1/5\n");

  const Result half = run({"stationary", "--n", "1", "--alpha", "1/2", "--beta", "1/2", "--format", "text"});
  CHECK(half.out.find("1  1/2\n") != std::string::npos);
  CHECK(half.out.find("density  1/2") != std::string::npos);

  const auto prof = nlohmann::json::parse(
      run({"stationary", "--n", "2", "--format", "json", "--decimals", "3"}).out);
  CHECK(prof["density"] == nlohmann::json{"3/5", "2/5"});
  CHECK(prof["distribution"][1]["decimal"] == "0.400");

  CHECK(run({"stationary", "--n", "2", "--alpha", "3/2"}).code == 2);
  CHECK(run({"stationary", "--n", "2", "--alpha", "0.5"}).code == 2);
}

TEST_CASE("verify") {
  const Result all = run({"verify", "--n", "3", "--checks", "all", "--format", "text"});
  CHECK(all.code == 0);
  CHECK(all.out.find("5 cycles of length 4") != std::string::npos);

  const Result counts = run({"verify", "--n", "2", "--checks", "counts", "--format", "text"});
  CHECK(counts.out.find("|T_2| = 5, |T^_2| = 6") != std::string::npos);

  const auto oracle = nlohmann::json::parse(
      run({"verify", "--n", "4", "--checks", "oracle", "--grid", "1/2:1/3,1/1:1/10", "--format", "json"}).out);
  CHECK(oracle["passed"] == true);
  CHECK(oracle["checks"].size() == 2);

  CHECK(run({"verify", "--n", "2", "--checks", "nonsense"}).code == 2);
  CHECK(run({"verify", "--n", "2", "--grid", "1/2"}).code == 2);
}

TEST_CASE("simulate") {
  const std::vector<std::string> args = {"simulate", "--n",  "3",     "--alpha", "1/1",    "--beta",
                                         "1/1",      "--events", "1000000", "--seed", "7", "--format", "json"};
  const Result first = run(args);
  CHECK(first.code == 0);
  const auto json = nlohmann::json::parse(first.out);
  CHECK(std::stod(json["tv"].get<std::string>()) < 0.02);
  CHECK(run(args).out == first.out);

  const auto one = nlohmann::json::parse(
      run({"simulate", "--n", "1", "--alpha", "1/2", "--beta", "1/4", "--events", "200000", "--format", "json"}).out);
  CHECK(std::stod(one["states"][1]["empirical"].get<std::string>()) == doctest::Approx(2.0 / 3.0).epsilon(0.03));

  CHECK(run({"simulate", "--n", "3", "--events", "0"}).code == 2);
  CHECK(run({"simulate", "--n", "3", "--events", "10", "--burn-in", "10"}).code == 2);
}

TEST_CASE("tableaux") {
  const auto one = nlohmann::json::parse(run({"tableaux", "--tree", "(L(LL))", "--format", "json"}).out);
  CHECK(one[0]["shape"] == nlohmann::json{2});
  CHECK(one[0]["fill"] == nlohmann::json{{0, 1}});
  CHECK(one[0]["index"] == 2);

  const Result table = run({"tableaux", "--n", "2", "--format", "text"});
  CHECK(table.code == 0);
  CHECK(table.out.find("5 tableaux of index 3, 5 valid") != std::string::npos);

  const Result bad = run({"tableaux", "--tree", "(LL"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("malformed tree") != std::string::npos);
}
