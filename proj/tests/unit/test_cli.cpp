#include <doctest.h>

#include <sstream>
#include <vector>

#include <json.hpp>

#include "capdist/cli/commands.hpp"

using namespace capdist::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "capdist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("show") {
  Result r = invoke({"show", "212"});
  CHECK(r.code == 0);
  CHECK(r.out.find("capacity: 1\n") != std::string::npos);
  CHECK(r.out.find("sigma: 5\n") != std::string::npos);
  CHECK(r.out.find("#~#\n###\n") != std::string::npos);

  CHECK(invoke({"show", "1111"}).out.find("capacity: 0\n") != std::string::npos);

  r = invoke({"show", "3,1,2", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["capacity"] == 1);
  CHECK(j["sigma"].is_null());

  r = invoke({"show", "2x2"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("dist") {
  CHECK(invoke({"dist", "6"}).out == "10 + 2y + y^2\n");
  CHECK(invoke({"dist", "0"}).out == "1\n");
  CHECK(invoke({"dist", "6", "--vars", "ypq"}).out ==
        "p^4q + p^2q^4 + p^4q^2 + p^6 + p^4q^3 + p^2q^6 + p^4q^4 + yp^2q^5 + q^9 + p^4q^5 + p^2q^8 + yp^2q^7 + "
        "y^2p^2q^6\n");
  CHECK(invoke({"dist", "301"}).code == 2);
  CHECK(invoke({"dist", "31", "--vars", "ypq"}).code == 2);
  CHECK(invoke({"dist", "6", "--vars", "z"}).code == 2);
}

TEST_CASE("seq") {
  CHECK(invoke({"seq", "d", "--n-max", "5"}).out == "1,1,2,3,5,7\n");
  CHECK(invoke({"seq", "signbal", "--n-max", "6"}).out == "1,1,2,3,5,6,9\n");
  CHECK(invoke({"seq", "totcap", "--n-max", "6"}).out == "0,0,0,0,0,1,4\n");
  CHECK(invoke({"seq", "lucas", "--n-max", "4"}).out == "1,3,4,7\n");
  CHECK(invoke({"seq", "nope"}).code == 2);

  // The three renderings carry the same numbers.
  const std::string text = invoke({"seq", "fib", "--n-max", "8"}).out;
  const auto j = nlohmann::json::parse(invoke({"--format", "json", "seq", "fib", "--n-max", "8"}).out);
  const std::string csv = invoke({"seq", "fib", "--n-max", "8", "--format", "csv"}).out;
  std::string from_json, from_csv;
  for (const auto& v : j["values"]) from_json += (from_json.empty() ? "" : ",") + v.get<std::string>();
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,value");
  while (std::getline(lines, line)) from_csv += (from_csv.empty() ? "" : ",") + line.substr(line.find(',') + 1);
  CHECK(text == from_json + "\n");
  CHECK(text == from_csv + "\n");
}

TEST_CASE("table") {
  const std::string wnk = invoke({"table", "wnk", "--n-max", "9", "--format", "csv"}).out;
  CHECK(wnk.rfind("n,k,value\n", 0) == 0);
  CHECK(wnk.find("\n9,3,7\n") != std::string::npos);
  CHECK(wnk.find("\n9,6,0\n") != std::string::npos);
  const std::string bnkj = invoke({"table", "bnkj", "--n-max", "9", "--format", "csv"}).out;
  CHECK(bnkj.find("\n9,3,3,4\n") != std::string::npos);
  CHECK(invoke({"table", "xyz"}).code == 2);
}

TEST_CASE("verify") {
  Result r = invoke({"verify", "--n-max", "10", "dist3way"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS dist3way", 0) == 0);
  CHECK(invoke({"verify", "nope"}).code == 2);

  r = invoke({"verify", "all", "--n-max", "10", "--format", "json", "--no-timing"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 17);
  CHECK(r.out == invoke({"verify", "all", "--n-max", "10", "--format", "json", "--no-timing", "--threads", "3"}).out);
}

TEST_CASE("gf") {
  const std::string d = invoke({"gf", "gf.d", "--n-max", "4"}).out;
  CHECK(d.find("x^4: 5\n") != std::string::npos);
  CHECK(invoke({"gf", "gf.F", "--n-max", "6"}).out.find("x^6: 10 + 2y + y^2\n") != std::string::npos);
  CHECK(invoke({"gf", "gf.wk", "--n-max", "6"}).code == 2);
  CHECK(invoke({"gf", "gf.wk", "--k", "1", "--n-max", "6"}).out.find("x^5: 1\n") != std::string::npos);
  CHECK(invoke({"gf", "gf.nope"}).code == 2);
  const auto j = nlohmann::json::parse(invoke({"gf", "gf.F2check", "--n-max", "8", "--format", "json"}).out);
  for (const auto& c : j["coefficients"]) CHECK(c["text"] == "0");
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"--format", "xml", "seq", "fib"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}
