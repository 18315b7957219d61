#include <doctest.h>

#include <sstream>

#include "threedist/cli.hpp"
#include "threedist/json_io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = threedist::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("decompose") {
    auto r = run({"decompose", "--alpha", "log2_3_frac", "--n", "11"});
    REQUIRE(r.code == 0);
    auto doc = threedist::json::Json::parse(r.out);
    CHECK(doc["case"] == "general");
    CHECK(doc["pair"]["b"] == 7);
    CHECK(doc["pair"]["d"] == 5);
    CHECK(doc["counts"] == threedist::json::Json::array({5, 7, 0}));
    auto uniform = run({"decompose", "--alpha", "1/2", "--n", "3"});
    REQUIRE(uniform.code == 0);
    auto u = threedist::json::Json::parse(uniform.out);
    CHECK(u["case"] == "uniform");
    CHECK(u["q"] == 2);
    auto text = run({"--format", "text", "decompose", "--alpha", "1/2", "--n", "3"});
    CHECK(text.code == 0);
    CHECK_FALSE(text.out.empty());
  }

  TEST_CASE("gaps and farey") {
    auto r = run({"gaps", "--alpha", "log2_3_frac", "--beta", "3/10"});
    REQUIRE(r.code == 0);
    auto doc = threedist::json::Json::parse(r.out);
    CHECK(doc["b"] == 2);
    CHECK(doc["d"] == 3);
    auto f = run({"farey", "--n", "3"});
    REQUIRE(f.code == 0);
    CHECK(threedist::json::Json::parse(f.out)["sequence"].size() == 5);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"decompose", "--alpha", "abc", "--n", "3"}).code == threedist::cli::kValidation);
    CHECK(run({"decompose", "--alpha", "1/2"}).code == threedist::cli::kValidation);
    CHECK(run({"bogus"}).code == threedist::cli::kValidation);
    auto precision = run({"--precision", "8", "decompose", "--alpha", "phi_frac", "--n", "100000"});
    CHECK(precision.code == threedist::cli::kPrecision);
    CHECK(threedist::json::Json::parse(precision.err)["error"] == "PrecisionInsufficient");
    CHECK(run({"--scan-cap", "100", "gaps", "--alpha", "phi_frac", "--beta", "1/100000"}).code ==
          threedist::cli::kSearch);
    CHECK(run({"gaps", "--alpha", "1/3", "--beta", "1/10"}).code == threedist::cli::kSearch);
  }

  TEST_CASE("verify") {
    CHECK(run({"verify", "--alpha", "phi_frac", "--n", "200"}).code == 0);
    CHECK(run({"verify", "--alpha", "117/200", "--n", "40"}).code == 0);
    CHECK(run({"verify", "--alpha", "117/200", "--n", "500"}).code == 0);
    CHECK(run({"verify", "--alpha", "log2_3_frac", "--beta", "3/10", "--N", "5000"}).code == 0);
    CHECK(run({"verify", "--alpha", "sqrt2_frac"}).code == threedist::cli::kValidation);
  }
}
