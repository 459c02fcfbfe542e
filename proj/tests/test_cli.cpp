#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <complex>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "planch/degrees.hpp"
#include "planch/density.hpp"
#include "planch/io.hpp"

using namespace planch;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& content) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream f(p);
  f << content;
  f.close();
  return p.string();
}

const char* kIwahori2 =
    R"({"q": 2, "cuspidals": [{"m": 1, "e": 2, "r": 1, "d": "derive", "delta": 0, "f_self": 0}]})";
const char* kIwahori3 =
    R"({"q": 2, "cuspidals": [{"m": 1, "e": 3, "r": 1, "d": "derive", "delta": 0, "f_self": 0}]})";
const char* kTwoBlocks = R"({
  "q": 3,
  "cuspidals": [
    {"m": 1, "e": 2, "r": 1, "d": "derive", "delta": 0, "f_self": 0},
    {"m": 1, "e": 2, "r": 1, "d": "derive", "delta": 0, "f_self": 0}
  ],
  "cross_conductors": [[0, 1], [1, 0]]
})";

}  // namespace

TEST_CASE("components command") {
  std::string in = write_file("cli_iwahori2.json", kIwahori2);
  RunResult r = run({"components", in});
  REQUIRE(r.code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc.at("components").size() == 2);
  CHECK(doc.at("components")[0].at("selector") == "2");
  CHECK(doc.at("components")[1].at("selector") == "1+1");

  SUBCASE("catalog sizes") {
    std::string in5 = write_file(
        "cli_iwahori5.json",
        R"({"q": 2, "cuspidals": [{"m": 1, "e": 5, "r": 1, "d": "derive", "delta": 0, "f_self": 0}]})");
    Json d5 = Json::parse(run({"components", in5}).out);
    CHECK(d5.at("components").size() == 7);

    std::string in22 = write_file("cli_two_blocks.json", kTwoBlocks);
    Json d22 = Json::parse(run({"components", in22}).out);
    CHECK(d22.at("components").size() == 4);
  }

  SUBCASE("deterministic output") {
    RunResult again = run({"components", in});
    CHECK(again.out == r.out);
    CHECK(again.code == 0);
  }
}

TEST_CASE("density command") {
  std::string in = write_file("cli_iwahori2.json", kIwahori2);

  SUBCASE("document shape") {
    RunResult r = run({"density", in, "--component", "1+1"});
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc.at("selector") == "1+1");
    CHECK(doc.at("constant") == "(q + 1)/(q)");
    CHECK(doc.at("formal_degree") == "1");
    REQUIRE(doc.at("factors").size() == 2);
    CHECK(!doc.contains("values"));
  }

  SUBCASE("point evaluation at q") {
    RunResult r = run({"density", in, "--component", "1+1", "--q", "2", "--point", "0,0.5"});
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc.at("q") == 2.0);
    REQUIRE(doc.at("values").size() == 1);
    // z = (1, -1): (q+1)/q * |1-(-1)|^2 / |1+1/q|^2 = (3/2)*4/(9/4) = 8/3
    CHECK(doc.at("values")[0].at("density").get<double>() ==
          doctest::Approx(8.0 / 3.0).epsilon(1e-12));
  }

  SUBCASE("serialized reports evaluate like the library") {
    RunResult r = run({"density", in, "--component", "1+1"});
    ParsedDensity parsed = parse_density_json(r.out);

    FundamentalInvariants inv = parse_invariants_json(kIwahori2);
    DensityReport rep = density(ComponentSpec(inv, {Partition({1, 1})}));
    FactoredFn direct(rep.constant, rep.factors);
    FactoredFn reparsed(parsed.constant, parsed.factors);
    for (double t : {0.17, 0.31, 0.62}) {
      std::vector<std::complex<double>> z = {
          {1.0, 0.0}, std::polar(1.0, 6.283185307179586 * t)};
      CHECK(reparsed.eval_real(2.0, z) * parsed.formal_degree.eval_at_q(2.0) ==
            doctest::Approx(direct.eval_real(2.0, z) * rep.formal_degree.eval_at_q(2.0))
                .epsilon(1e-12));
    }
  }

  SUBCASE("error paths") {
    CHECK(run({"density", in, "--component", "3"}).code == 4);
    CHECK(run({"density", in, "--component", "x+y"}).code == 4);
    CHECK(run({"density", in, "--component", "1+1", "--point", "0,0.5"}).code == 3);
    CHECK(run({"density", in, "--component", "1+1", "--q", "2", "--point", "0"}).code == 3);
    CHECK(run({"density", in}).code == 2);  // --component is required
  }
}

TEST_CASE("verify command") {
  SUBCASE("text report") {
    RunResult r = run({"verify", "--only", "poincare"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS] poincare") != std::string::npos);
  }

  SUBCASE("json report") {
    RunResult r = run({"verify", "--only", "lambda", "--only", "macdonald", "--json"});
    CHECK(r.code == 0);
    Json doc = Json::parse(r.out);
    REQUIRE(doc.at("suites").size() == 2);
    CHECK(doc.at("all_pass") == true);
  }

  SUBCASE("unknown suite") {
    RunResult r = run({"verify", "--only", "bogus"});
    CHECK(r.code == 3);
    CHECK(r.err.find("bogus") != std::string::npos);
  }
}

TEST_CASE("integrate command") {
  std::string in = write_file("cli_iwahori2.json", kIwahori2);

  SUBCASE("unit mass of the principal component") {
    RunResult r = run({"integrate", in, "--component", "1+1", "--q", "2", "--grid", "128"});
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc.at("mass").get<double>() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(doc.at("convergence_delta").get<double>()) < 1e-6);
  }

  SUBCASE("singular q") {
    CHECK(run({"integrate", in, "--component", "1+1", "--q", "1.0"}).code == 5);
  }
}

TEST_CASE("transfer command") {
  std::string in = write_file("cli_iwahori2.json", kIwahori2);

  SUBCASE("division algebra of degree 2") {
    RunResult r = run({"transfer", in, "--component", "2", "--d", "2"});
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc.at("d") == 2);
    CHECK(doc.at("n_prime") == 1);
    CHECK(doc.at("lambda") == "1/(q - 1)");
    CHECK(doc.at("constant") == "1/(q - 1)");
  }

  SUBCASE("kappa for the Iwahori datum is one") {
    RunResult r = run({"transfer", in, "--component", "1+1", "--kappa"});
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc.at("kappa") == "1");
    CHECK(doc.at("iwahori_volume_ref") == "1/(q + 1)");
    CHECK(doc.at("normalized_volume") == "1/(q + 1)");
  }

  SUBCASE("d must divide n") {
    CHECK(run({"transfer", in, "--component", "2", "--d", "3"}).code == 3);
  }

  SUBCASE("kappa needs a single cuspidal block") {
    std::string two = write_file("cli_two_blocks.json", kTwoBlocks);
    CHECK(run({"transfer", two, "--component", "2|1+1", "--kappa"}).code == 3);
  }
}

TEST_CASE("input handling") {
  SUBCASE("missing file") {
    CHECK(run({"components", "/nonexistent/planch.json"}).code == 2);
  }

  SUBCASE("malformed json") {
    std::string bad = write_file("cli_bad.json", "{\"q\": 2,");
    CHECK(run({"components", bad}).code == 2);
  }

  SUBCASE("validation failure names the violation") {
    std::string bad = write_file(
        "cli_invalid.json",
        R"({"q": 2, "cuspidals": [{"m": 3, "e": 1, "r": 2, "d": "derive", "delta": 0}]})");
    RunResult r = run({"components", bad});
    CHECK(r.code == 3);
    CHECK(r.err.find("R_DIVIDES_M") != std::string::npos);
  }

  SUBCASE("help exits cleanly") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"density", "--help"}).code == 0);
  }

  SUBCASE("no subcommand") {
    CHECK(run({}).code == 2);
  }
}

TEST_CASE("three-segment density through the pipeline") {
  std::string in = write_file("cli_iwahori3.json", kIwahori3);
  RunResult r = run({"density", in, "--component", "2+1", "--q", "2"});
  REQUIRE(r.code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc.at("selector") == "2+1");
  REQUIRE(doc.at("factors").size() == 2);
  CHECK(doc.at("factors")[0].at("q_exp") == "-3/2");
  CHECK(doc.at("factors")[1].at("q_exp") == "-1/2");

  QRatio gamma = gamma_factor(LeviShape({2, 1}));
  CHECK(doc.at("constant") == (gamma * QRatio::q_pow(HalfInt(1))).str());
  CHECK(doc.at("mu_constant") ==
        (gamma * gamma * QRatio::q_pow(HalfInt(1))).str());
  CHECK(doc.at("formal_degree") == steinberg_fd(2).str());
}
