#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "diagschur/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = diagschur::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json golden(const std::string& name) {
  std::ifstream f(std::string(DIAGSCHUR_GOLDEN_DIR) + "/" + name);
  REQUIRE(f);
  return json::parse(f);
}

}  // namespace

TEST_CASE("indices") {
  auto r = run({"indices"}, R"(["1","1","1","1"])");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"indices\":[1],\"mu\":[1],\"nu\":[1],\"regular\":true}\n");
  CHECK(r.err.empty());
  // Object form and integer entries are accepted too.
  CHECK(run({"indices"}, R"({"moments":[1,1,1,1]})").out == r.out);
}

TEST_CASE("golden fixtures") {
  for (const char* name : {"delta1.json", "delta1_delta2.json"}) {
    CAPTURE(name);
    json g = golden(name);
    std::string moments = g["moments"].dump();
    auto s = run({"schur", "--parity", g["parity"]}, moments);
    REQUIRE(s.code == 0);
    CHECK(json::parse(s.out) == g["schur"]);
    // schur output feeds resolvent and expand unchanged.
    auto w = run({"resolvent"}, s.out);
    REQUIRE(w.code == 0);
    CHECK(json::parse(w.out) == g["resolvent"]);
    auto w2 = run({"resolvent"}, moments);
    CHECK(w2.out == w.out);
    auto e = run({"expand", "--order", "4"}, s.out);
    REQUIRE(e.code == 0);
    CHECK(json::parse(e.out)["series"]["coeffs"] == g["expand"]);
  }
}

TEST_CASE("schur on (1,1)") {
  auto r = run({"schur", "--parity", "even"}, R"(["1","1"])");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["atoms"][0]["m"] == json::array({"1/1"}));
  CHECK(j["atoms"][0]["l"] == json::array({"1/1"}));
  CHECK(j["tail_contract"] == "o(1)");
  auto odd = json::parse(run({"schur", "--parity", "odd"}, R"(["1","1","1"])").out);
  CHECK(odd["tail_contract"] == "o(z)");
  CHECK_FALSE(odd["atoms"][0].contains("l"));
}

TEST_CASE("input errors exit 2 with a position") {
  auto r = run({"schur"}, "[\"1\",\n  \"2\" oops]");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  auto j = json::parse(r.err);
  CHECK(j["error"] == "InputError");
  CHECK(j["line"] == 2);
  CHECK(j["column"].get<int>() > 1);

  CHECK(run({"schur"}, "[1.5, 2]").code == 2);
  CHECK(run({"schur"}, "{\"nothing\": 1}").code == 2);
  CHECK(run({"frobnicate"}, "[]").code == 2);
  CHECK(run({"schur", "--parity", "sideways"}, "[1]").code == 2);
  CHECK(run({"schur", "/nonexistent/file.json"}, "").code == 2);
}

TEST_CASE("domain errors exit 1 with a structured body") {
  auto r = run({"schur"}, R"(["1","0","0","0"])");
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  auto j = json::parse(r.err);
  CHECK(j["error"] == "SingularStep");
  CHECK(j["level"] == 2);

  auto z = json::parse(run({"schur"}, R"(["0","0"])").err);
  CHECK(z["error"] == "NoNormalIndex");
  auto t = json::parse(run({"schur"}, R"(["0","1"])").err);
  CHECK(t["error"] == "Truncated");
}

TEST_CASE("determinism and output files") {
  std::string input = R"(["2","3","5","9","17","33"])";
  auto a = run({"schur", "--parity", "odd"}, input);
  auto b = run({"schur", "--parity", "odd"}, input);
  CHECK(a.out == b.out);
  auto path = std::filesystem::temp_directory_path() / "diagschur_cli_test.json";
  auto c = run({"schur", "--parity", "odd", "-o", path.string()}, input);
  CHECK(c.code == 0);
  CHECK(c.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == a.out);
  std::filesystem::remove(path);
}

TEST_CASE("decompose pipes into schur") {
  std::string tensor = R"({"n":2,"max_degree":3,"entries":[
      {"idx":[0,0],"val":"1"},{"idx":[1,1],"val":"1"},{"idx":[2,2],"val":"1"},{"idx":[3,3],"val":"1"},
      {"idx":[1,0],"val":"2"},{"idx":[2,1],"val":"1"}]})";
  auto d = run({"decompose"}, tensor);
  REQUIRE(d.code == 0);
  auto dj = json::parse(d.out);
  REQUIRE(dj["diagonals"].size() == 2);
  CHECK(dj["diagonals"][0]["key"] == json::array({0, 0}));
  CHECK(dj["diagonals"][0]["moments"] == json::array({"1/1", "2/1", "6/1", "20/1"}));
  CHECK(dj["diagonals"][1]["key"] == json::array({1, 0}));
  CHECK(dj["diagonals"][1]["moments"] == json::array({"2/1", "3/1", "0/1"}));

  auto s = run({"schur", "--parity", "odd"}, d.out);
  REQUIRE(s.code == 0);
  auto sj = json::parse(s.out);
  REQUIRE(sj["diagonals"].size() == 2);
  CHECK(sj["diagonals"][0]["key"] == json::array({0, 0}));
  CHECK(sj["diagonals"][1]["key"] == json::array({1, 0}));

  auto one = run({"decompose", "--key", "1,0"}, tensor);
  CHECK(json::parse(one.out)["diagonals"].size() == 1);

  auto solved = run({"solve", "--parity", "odd"}, tensor);
  REQUIRE(solved.code == 0);
  CHECK(json::parse(solved.out)["reassembly"]["agree"] == true);
}

TEST_CASE("indeterminacy and verify") {
  auto r = run({"indeterminacy"}, R"(["2","3","5","9"])");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["ml"]["sumM"] == "5/1");
  CHECK(j["ml"]["sumL"] == "3/2");
  CHECK(j["ab"]["verdict"] == "exhausted");
  auto d0 = json::parse(run({"indeterminacy", "--depth", "0"}, R"(["2","3","5","9"])").out);
  CHECK(d0["ml"]["sumM"] == "0/1");
  CHECK(d0["ab"]["sumP"] == "0/1");

  auto v = run({"verify"}, R"({"n":1,"atoms":[{"node":["1"],"weight":"1"},{"node":["2"],"weight":"1"}]})");
  REQUIRE(v.code == 0);
  auto vj = json::parse(v.out);
  CHECK(vj["agree"] == true);
  CHECK(vj["levels"] == 2);
  CHECK(vj["compared"] == 4);
  CHECK(run({"verify"}, R"({"n":1,"atoms":[{"node":["1"],"weight":"1"},{"node":["1"],"weight":"2"}]})").code == 2);
}
