// Acceptance gate: one line per criterion, exit code = number of failures.
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "json.hpp"
#include "planch/groupdata.hpp"
#include "planch/verify.hpp"

using namespace planch;
using Json = nlohmann::ordered_json;

namespace {

int failures = 0;

void report(int n, const std::string& desc, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << desc;
  if (!pass && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!pass) ++failures;
}

void criterion_suite(int n, const std::string& desc, const std::string& suite) {
  try {
    SuiteResult r = run_suite(suite);
    report(n, desc, r.pass, r.detail);
  } catch (const std::exception& e) {
    report(n, desc, false, e.what());
  }
}

// The two-segment unramified component of GL(3), checked through the CLI so
// the serialized display is what gets compared: prefactor gamma^2 * q and
// one squared-modulus ratio with exponents -1/2 over -3/2.
void criterion_gl3_display(int n, const std::string& desc) {
  try {
    std::filesystem::path input =
        std::filesystem::temp_directory_path() / "planch_acceptance_gl3.json";
    {
      std::ofstream f(input);
      f << R"({"q": 2, "cuspidals": [{"m": 1, "e": 3, "r": 1, "d": "derive", "delta": 0, "f_self": 0}]})";
    }
    std::ostringstream out, err;
    int code = run_cli({"density", input.string(), "--component", "2+1"}, out, err);
    if (code != 0) {
      report(n, desc, false, "cli exit code " + std::to_string(code) + ": " + err.str());
      return;
    }
    Json doc = Json::parse(out.str());

    QRatio gamma = gamma_factor(LeviShape({2, 1}));
    std::string mu_want = (gamma * gamma * QRatio::q_pow(HalfInt(1))).str();
    bool ok = doc.at("mu_constant").get<std::string>() == mu_want;
    ok = ok && doc.at("constant").get<std::string>() ==
                   (gamma * QRatio::q_pow(HalfInt(1))).str();
    ok = ok && doc.at("factors").size() == 2;
    if (ok) {
      const Json& den = doc.at("factors")[0];
      const Json& num = doc.at("factors")[1];
      ok = num.at("i") == 1 && num.at("j") == 2 && num.at("q_exp") == "-1/2" &&
           num.at("exp") == 1 && den.at("q_exp") == "-3/2" && den.at("exp") == -1;
    }
    report(n, desc, ok, ok ? "" : "serialized display does not match: " + out.str());
  } catch (const std::exception& e) {
    report(n, desc, false, e.what());
  }
}

void criterion_all_suites(int n, const std::string& desc) {
  try {
    bool all = true;
    std::string detail;
    for (const SuiteResult& r : run_suites()) {
      if (!r.pass && all) detail = r.name + ": " + r.detail;
      all = all && r.pass;
    }
    report(n, desc, all, detail);
  } catch (const std::exception& e) {
    report(n, desc, false, e.what());
  }
}

}  // namespace

int main() {
  criterion_suite(1, "Poincare polynomials match general linear group orders for n <= 12",
                  "poincare");
  criterion_suite(2, "gamma factors agree across both derivation routes for every Levi shape of GL(n), n <= 8",
                  "gamma");
  criterion_suite(3, "segment overlap combinatorics and pair conductors match brute-force oracles",
                  "combinatorics");
  criterion_gl3_display(4, "the two-segment GL(3) density display is reproduced through the CLI");
  criterion_suite(5, "formal-degree forms agree across the (m, e, r, delta) grid",
                  "degrees");
  criterion_suite(6, "Hecke-normalized densities equal their closed product form for all partitions of n <= 6",
                  "hecke");
  criterion_suite(7, "the mu and j functions close into the gamma and c constants",
                  "closure");
  criterion_suite(8, "quadrature masses match exact values and the Fourier series oracle",
                  "quadrature");
  criterion_suite(9, "division-algebra transfer constants satisfy the cancellation identity",
                  "lambda");
  criterion_suite(10, "the reference comparison constant is partition-independent",
                  "kappa");
  criterion_suite(11, "unramified principal densities equal the Macdonald form for n <= 6",
                  "macdonald");
  criterion_all_suites(12, "no p-adic group oracle exists at desk scale; every formula is instead cross-checked by an independent derivation path, and all identity suites pass");

  if (failures == 0)
    std::cout << "acceptance: all 12 criteria pass\n";
  else
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
  return failures;
}
