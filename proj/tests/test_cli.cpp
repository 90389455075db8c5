#include <doctest.h>

#include <sstream>

#include "homfly/cli.hpp"
#include "homfly/codec.hpp"
#include "homfly/corpus.hpp"
#include "homfly/exactpoly.hpp"

using namespace homfly;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTrefoil = "U1- O2- U3- O1- U2- O3-\n";

}  // namespace

TEST_CASE("homfly command") {
  for (const char* method : {"statesum", "ascending", "skein", "both"}) {
    const Run r = run({"homfly", "-", "--method", method}, kTrefoil);
    CHECK(r.code == kExitOk);
    CHECK(r.out == "+2*a^2*z^0 +1*a^2*z^2 -1*a^4*z^0\n");
  }
  Run r = run({"homfly", "-"}, ".\n.\n");
  CHECK(r.code == kExitOk);
  CHECK(r.out == "-1*a^-1*z^-1 +1*a^1*z^-1\n");

  r = run({"homfly", "-", "--format", "json", "--threads", "4"}, kTrefoil);
  CHECK(r.out == "{\"terms\":[[2,0,2],[2,2,1],[4,0,-1]]}\n");

  const std::string pd = to_json(standard_pd_codes()[2].second).dump();
  CHECK(run({"homfly", "-"}, pd).out == "+2*a^2*z^0 +1*a^2*z^2 -1*a^4*z^0\n");
  CHECK(run({"homfly", "-", "--input-format", "gauss"}, pd).code == kExitInput);
}

TEST_CASE("input errors") {
  Run r = run({"homfly", "-"}, "O1+ O1+ U1+\n");
  CHECK(r.code == kExitInput);
  CHECK(r.err == "error: -:1:5: arrow 1 appears twice as O\n");
  r = run({"homfly", "/nonexistent/file"});
  CHECK(r.code == kExitInput);
  CHECK(run({"homfly"}).code == kExitInput);
  CHECK(run({"homfly", "-", "--method", "magic"}, kTrefoil).code == kExitInput);
  CHECK(run({"pkl", "-"}, kTrefoil).code == kExitInput);
  CHECK(run({"bogus"}).code == kExitInput);
  CHECK(run({"gen-akl", "--k", "0", "--l", "-1"}).code == kExitInput);
}

TEST_CASE("states command") {
  const Run r = run({"states", "-"}, to_gauss_code(reference_trefoil()));
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "{} +1*a^2*z^0\n"
        "{1} +1*a^2*z^0 -1*a^4*z^0\n"
        "{2} 0\n"
        "{3} 0\n"
        "{1,2} +1*a^2*z^2\n"
        "{1,3} 0\n"
        "{2,3} 0\n"
        "{1,2,3} 0\n");
}

TEST_CASE("pkl command") {
  CHECK(run({"pkl", "-", "--k", "1", "--l", "2"}, kTrefoil).out == "2\n");
  CHECK(run({"pkl", "-", "--k", "3", "--l", "0", "--verify"}, kTrefoil).out == "-8\n");
  const Run r = run({"pkl", "-", "--max-degree", "2", "--verify"}, kTrefoil);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("p(0,0) = 1\n") != std::string::npos);
  CHECK(r.out.find("p(0,2) = 1\n") != std::string::npos);
  CHECK(r.out.find("p(2,0) = -4\n") != std::string::npos);
  CHECK(r.out.find("p(1,0) = 0\n") != std::string::npos);
  const Run j = run({"pkl", "-", "--k", "1", "--l", "2", "--format", "json"}, kTrefoil);
  CHECK(j.out == "{\"values\":[{\"k\":1,\"l\":2,\"value\":\"2/1\"}]}\n");
}

TEST_CASE("gen-akl command") {
  Run r = run({"gen-akl", "--k", "0", "--l", "2", "--unsigned"});
  CHECK(r.code == kExitOk);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["coeff"] == "1");
  CHECK(j["terms"][0]["signed"] == false);

  r = run({"gen-akl", "--k", "2", "--l", "0"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["terms"].size() == 4);

  r = run({"gen-akl", "--k", "1", "--l", "2", "--unsigned"});
  CHECK(nlohmann::json::parse(r.out)["terms"].size() == 7);
  CHECK(run({"gen-akl", "--k", "1", "--l", "2", "--keep-isolated"}).out == run({"gen-akl", "--k", "1", "--l", "2"}).out);
}

TEST_CASE("series and canon commands") {
  CHECK(run({"series", "-", "--cutoff", "1"}, kTrefoil).out == "h^0*z^0 1\nh^0*z^2 1\nh^1*z^2 2\n");
  CHECK(run({"series", "-", "--cutoff", "0", "--format", "json"}, kTrefoil).out ==
        "{\"cutoff\":0,\"terms\":[[0,0,\"1/1\"],[0,2,\"1/1\"]]}\n");
  const Run a = run({"canon", "-"}, "U7+ O3+ O7+ U3+\n");
  const Run b = run({"canon", "-"}, "U1+ O2+ O1+ U2+\n");
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.substr(a.out.find('\n') + 1) == "U1+ O2+ O1+ U2+\n");
}

TEST_CASE("fuzz command is deterministic") {
  const Run a = run({"fuzz", "--seed", "7", "--iters", "30", "--probes", "20"});
  const Run b = run({"fuzz", "--seed", "7", "--iters", "30", "--probes", "20"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed 7\n") == 0);
  CHECK(a.out.find("failures: 0\nvassiliev probes:") != std::string::npos);
}
