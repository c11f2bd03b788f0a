#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using Json = nlohmann::ordered_json;

namespace {
struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = periodlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}
}  // namespace

TEST_CASE("envelope shape") {
  const Json j = run_json({"jacobi", "--p", "5", "--k1", "1", "--k2", "1", "--format", "json"});
  std::vector<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "params", "rows", "errors", "version"});
  CHECK(j["command"] == "jacobi");
  CHECK(j["version"] == "1.0.0");
  CHECK(j["errors"].empty());
  REQUIRE(j["rows"].size() == 1);
  const auto& row = j["rows"][0];
  CHECK(row["norm"] == 5);
  CHECK(row["J"] == Json::array({-1, -2}));
  CHECK(row["residual"].get<double>() < 1e-8);
}

TEST_CASE("tau of y^2 = x^3 - x") {
  const Json j = run_json({"tau", "--curve", "-1,0"});
  const auto& row = j["rows"][0];
  CHECK(std::abs(row["tau_re"].get<double>()) < 1e-9);
  CHECK(std::abs(row["tau_im"].get<double>() - 1.0) < 1e-9);
  CHECK(row["matrix"] == Json::array({1, 0, 0, 1}));
}

TEST_CASE("usage errors name the flag") {
  const auto r = run({"count", "--p", "4", "--curve", "1,1"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("--p") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const auto bad_curve = run({"periods", "--curve", "1,x"});
  CHECK(bad_curve.code == 2);
  CHECK(bad_curve.err.find("--curve") != std::string::npos);
  const auto fmt = run({"gauss", "--p", "5", "--format", "xml"});
  CHECK(fmt.code == 2);
  CHECK(fmt.err.find("--format") != std::string::npos);
  CHECK(run({"veneziano", "--s", "2"}).code == 2);
  CHECK(run({"delta", "--p", "3", "--x", "1", "--rule", "sum"}).code == 2);
  CHECK(run({"delta", "--p", "3", "--x", "1", "--precision", "65"}).code == 2);
  CHECK(run({"gauss", "--help"}).code == 0);
}

TEST_CASE("domain errors exit 1 with the error in the envelope") {
  const auto r = run({"count", "--p", "7", "--curve", "0,0"});
  CHECK(r.code == 1);
  const Json j = Json::parse(r.out);
  REQUIRE(j["errors"].size() == 1);
  CHECK(j["errors"][0].get<std::string>().rfind("SingularCurve", 0) == 0);
  CHECK(j["rows"].empty());
  CHECK(run({"apjacobi", "--p", "7"}).code == 1);
  CHECK(run({"periodmap", "--t", "1"}).code == 1);
  CHECK(run({"poles", "--t", "2"}).code == 1);
  const auto csv = run({"apjacobi", "--p", "7", "--format", "csv"});
  CHECK(csv.code == 1);
  CHECK(csv.out.empty());
  CHECK(csv.err.find("BadCongruence") != std::string::npos);
}

TEST_CASE("default formats") {
  CHECK(run({"catalog"}).out.rfind("# catalog", 0) == 0);
  CHECK(run({"correspond", "--p", "5"}).out.rfind("# correspond", 0) == 0);
  CHECK(run({"gauss", "--p", "5"}).out.front() == '{');
}

TEST_CASE("csv quoting and header") {
  const auto r = run({"correspond", "--p", "5", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("section,k1,k2,m,J,norm_ok", 0) == 0);
  CHECK(r.out.find("\"B(alpha, beta) = Gamma(alpha) Gamma(beta) / Gamma(alpha + beta)\"") != std::string::npos);
  CHECK(r.out.find("\"[-1,-2]\"") != std::string::npos);
}

TEST_CASE("numbers carry at most 15 significant digits") {
  const Json j = run_json({"catalog", "--n", "2", "--format", "json"});
  CHECK(j["rows"][0]["value"].dump() == "3.14159265358979");
  const Json v = run_json({"veneziano", "--s", "1", "--t", "2.5"});
  CHECK(v["rows"][0]["A"] == "inf");
  CHECK(v["rows"][0]["at_pole"] == true);
  CHECK(v["rows"][0]["n"] == 0);
}

TEST_CASE("exact rationals and residues") {
  const Json t = run_json({"tau", "--curve", "-0.25,0"});
  CHECK(t["rows"][0]["a"] == "-1/4");
  // 1/2 mod 7 = 4.
  const Json c = run_json({"count", "--p", "7", "--curve", "1/2,1"});
  CHECK(c["rows"][0]["a"] == 4);
}

TEST_CASE("output is independent of --jobs") {
  const std::vector<std::vector<std::string>> cmds = {
      {"gauss", "--p", "97"},
      {"count", "--p", "10007", "--curve", "3,5"},
      {"count", "--p", "31", "--curve", "3,5", "--n", "2"},
      {"zeta", "--p", "101", "--curve", "1,1"},
      {"apjacobi", "--p", "97"},
      {"periodmap", "--t", "1/5,2/5,3/5,4/5,1/7"},
      {"correspond", "--p", "31", "--grid", "0.5,1,2", "--format", "json"},
  };
  for (const auto& base : cmds) {
    auto serial = base;
    serial.insert(serial.end(), {"--jobs", "1"});
    const auto ref = run(serial);
    REQUIRE(ref.code == 0);
    for (const char* jobs : {"0", "2", "4"}) {
      auto par = base;
      par.insert(par.end(), {"--jobs", jobs});
      CHECK(run(par).out == ref.out);
    }
    CHECK(run(base).out == ref.out);
  }
}

TEST_CASE("every JSON reply re-parses with stable field types") {
  const std::vector<std::vector<std::string>> cmds = {
      {"gauss", "--p", "11"},         {"jacobi", "--p", "13", "--k1", "3", "--k2", "6"},
      {"count", "--p", "11", "--curve", "1,1"}, {"zeta", "--p", "11", "--curve", "1,1"},
      {"apjacobi", "--p", "17"},      {"periods", "--curve", "-4,0"},
      {"tau", "--curve", "-7,3"},     {"periodmap"},
      {"catalog", "--format", "json"}, {"veneziano", "--grid", "0.5,1"},
      {"beta", "--s", "1", "--t", "2"}, {"poles", "--t", "1.5"},
      {"correspond", "--p", "7", "--format", "json"}, {"delta", "--p", "7", "--x", "12", "--y", "5"},
  };
  for (const auto& c : cmds) {
    const Json a = run_json(c), b = run_json(c);
    CHECK(a == b);
    CHECK(a["params"].is_object());
    CHECK(a["rows"].is_array());
    for (const auto& row : a["rows"]) {
      CHECK(row.is_object());
      for (const auto& [k, v] : row.items()) CHECK(v.type() == b["rows"][0][k].type());
      break;
    }
  }
}

TEST_CASE("integers with leading zeros are decimal") {
  const Json d = run_json({"delta", "--p", "5", "--precision", "4", "--x", "010"});
  CHECK(d["rows"][0]["x"] == "10");
  const Json e = run_json({"delta", "--p", "5", "--precision", "4", "--x", "+7"});
  CHECK(e["rows"][0]["x"] == "7");
  const Json t = run_json({"tau", "--curve", "-01/03,+0.037"});
  CHECK(t["rows"][0]["a"] == "-1/3");
  CHECK(t["rows"][0]["b"] == "37/1000");
}
