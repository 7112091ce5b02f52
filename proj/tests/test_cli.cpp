#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "degen/cli.hpp"
#include "degen/combinatorics.hpp"
#include "degen/json_io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "degen-bernstein");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = degen::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "bernstein", "--dist", "det:1", "--k", "1", "--n", "2", "--x", "1/2",
                "--lambda", "1/7"});
  CHECK(r.code == 0);
  const auto j = degen::Json::parse(r.out);
  CHECK(j["value"] == "1/2");
  CHECK(j["family"] == "bernstein");
  CHECK(j["query"]["dist"] == "det:1");

  r = run({"eval", "bernstein", "--k", "3", "--n", "2", "--x", "1/2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("k must not exceed n") != std::string::npos);
  CHECK(lines(r.err) == 1);

  r = run({"eval", "sum-moment", "--dist", "bernoulli:p=1/3", "--k", "2", "--m", "1",
           "--lambda", "3/4"});
  CHECK(degen::Json::parse(r.out)["value"] == "2/3");
  r = run({"eval", "moment", "--dist", "poisson:a=2", "--n", "2", "--lambda", "1/2"});
  CHECK(degen::Json::parse(r.out)["value"] == "5");
  r = run({"eval", "bernoulli", "--n", "2"});
  CHECK(degen::Json::parse(r.out)["value"] == "1/6");
  r = run({"eval", "euler", "--n", "1"});
  CHECK(degen::Json::parse(r.out)["value"] == "-1/2");
  r = run({"eval", "bell", "--n", "3", "--x", "1"});
  CHECK(degen::Json::parse(r.out)["value"] == "5");
  r = run({"eval", "stirling2", "--n", "4", "--k", "2"});
  CHECK(degen::Json::parse(r.out)["value"] == "7");
}

TEST_CASE("usage errors are one line with exit code 2") {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"frobnicate"},
      {"eval", "bernstein", "--k", "1", "--n", "2", "--x", "1/0"},
      {"eval", "bernstein", "--k", "1", "--n", "2", "--x", "abc"},
      {"eval", "bernstein", "--k", "1", "--n", "2", "--dist", "gamma:k=1"},
      {"eval", "bernstein", "--k", "1"},
      {"eval", "nonsense", "--n", "1"},
      {"eval", "bernoulli", "--n", "2", "--dist", "discrete:-1:1/2,1:1/2"},
      {"table", "--kind", "third"},
      {"table", "--format", "xml"},
      {"series", "mgf", "--order", "-1"},
      {"verify"},
      {"verify", "--theorem", "T9"},
      {"verify", "--theorem", "T2.8", "--p", "1/3"},
      {"verify", "--theorem", "T2.1", "--alpha", "1", "--p", "1/2"},
      {"mc", "--dist", "poisson:a=1", "--n", "9"},
      {"mc", "--dist", "poisson:a=1"},
  };
  for (const auto& args : bad) {
    const auto r = run(args);
    CAPTURE(r.err);
    CHECK(r.code == 2);
    CHECK(lines(r.err) == 1);
    CHECK(r.out.empty());
  }
}

TEST_CASE("table csv round trips") {
  const auto r = run({"table", "--kind", "degenerate-second", "--nmax", "6", "--lambda", "2/3",
                      "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,k,value");
  int rows = 0;
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const int n = std::stoi(line.substr(0, c1));
    const int k = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
    CHECK(degen::Rational::parse(line.substr(c2 + 1)) ==
          degen::degenerate_stirling2(n, k, degen::Rational(2, 3)));
    ++rows;
  }
  CHECK(rows == 28);

  const auto j = degen::Json::parse(
      run({"table", "--kind", "prob-second", "--dist", "bernoulli:p=1/2", "--nmax", "3"}).out);
  CHECK(j["rows"][3][3] == "1/8");
}

TEST_CASE("series") {
  auto r = run({"series", "degenerate-exp", "--x", "1", "--order", "3"});
  auto j = degen::Json::parse(r.out);
  CHECK(j["order"] == 3);
  CHECK(j["coefficients"] == degen::Json::array({"1", "1", "1/2", "1/6"}));
  r = run({"series", "mgf", "--dist", "poisson:a=1", "--order", "2"});
  CHECK(degen::Json::parse(r.out)["coefficients"] == degen::Json::array({"1", "1", "1"}));
  r = run({"series", "bernoulli", "--order", "4"});
  CHECK(degen::Json::parse(r.out)["coefficients"] ==
        degen::Json::array({"1", "-1/2", "1/12", "0", "-1/720"}));
}

TEST_CASE("verify") {
  auto r = run({"verify", "--theorem", "T2.8", "--alpha", "1", "--nmax", "6"});
  CHECK(r.code == 0);
  auto j = degen::Json::parse(r.out);
  CHECK(j["verdict"] == "pass");
  CHECK(j["law"] == "poisson:a=1");

  r = run({"verify", "--theorem", "T2.6", "--dist", "det:1", "--nmax", "4"});
  CHECK(r.code == 0);
  CHECK(degen::Json::parse(r.out)["verdict"] == "pass-with-erratum");

  r = run({"verify", "--theorem", "T2.11", "--m", "3", "--p", "1/2", "--nmax", "4"});
  CHECK(degen::Json::parse(r.out)["law"] == "binomial:m=3,p=1/2");

  r = run({"verify", "--theorem", "T2.1", "--nmax", "3"});
  CHECK(r.code == 0);
  CHECK(degen::Json::parse(r.out)["reports"].size() == 5);

  r = run({"verify", "--theorem", "T2.1", "--p", "1/3", "--nmax", "4", "--perturb",
           "drop-last-term"});
  CHECK(r.code == 1);
  j = degen::Json::parse(r.out);
  CHECK(j["verdict"] == "fail");
  CHECK_FALSE(j["witnesses"].empty());
}

TEST_CASE("mc") {
  const std::vector<std::string> args = {"mc", "--dist", "poisson:a=2", "--n", "2", "--lambda",
                                         "1/2", "--seed", "5", "--samples", "50000"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = degen::Json::parse(a.out);
  CHECK(j["exact"] == "5");
  CHECK(std::abs(std::stod(j["z"].get<std::string>())) <= 4.0);
  const auto p = degen::Json::parse(run({"mc", "--dist", "det:1", "--n", "2", "--precision", "2"}).out);
  CHECK(p["estimate"] == "1.00");
  CHECK(p["stderr"] == "0.00");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"verify", "--theorem", "T2.4", "--dist", "poisson",
                                         "--nmax", "4"};
  CHECK(run(args).out == run(args).out);
}
