#include "cli.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "planch/density.hpp"
#include "planch/errors.hpp"
#include "planch/io.hpp"
#include "planch/transfer.hpp"
#include "planch/verify.hpp"

namespace planch {

namespace {

using Json = nlohmann::ordered_json;

// Selector failures get their own exit code.
struct SelectorError : Error {
  using Error::Error;
};

// Validation failures carry the violation list.
struct ValidationFailure : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FundamentalInvariants load_invariants(const std::string& path) {
  FundamentalInvariants inv = parse_invariants_json(read_file(path));
  std::vector<Violation> bad = validate(inv);
  if (!bad.empty()) {
    std::ostringstream os;
    os << "input fails validation:";
    for (const Violation& v : bad) {
      os << "\n  [" << v.code << "]";
      if (v.cuspidal >= 0) os << " cuspidal " << v.cuspidal;
      os << ": " << v.message;
    }
    throw ValidationFailure(os.str());
  }
  return inv;
}

ComponentSpec select_component(const FundamentalInvariants& inv, const std::string& selector) {
  std::vector<Partition> parts;
  std::stringstream blocks(selector);
  std::string block;
  try {
    while (std::getline(blocks, block, '|')) {
      std::vector<int> lens;
      std::stringstream items(block);
      std::string item;
      while (std::getline(items, item, '+')) lens.push_back(std::stoi(item));
      std::sort(lens.rbegin(), lens.rend());
      parts.emplace_back(lens);
    }
    if (parts.size() != inv.cuspidals.size())
      throw SelectorError("selector has " + std::to_string(parts.size()) + " blocks, input has " +
                          std::to_string(inv.cuspidals.size()));
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i].total() != inv.cuspidals[i].e)
        throw SelectorError("selector block " + std::to_string(i + 1) + " does not sum to e");
    return ComponentSpec(inv, parts);
  } catch (const SelectorError&) {
    throw;
  } catch (const std::exception& e) {
    throw SelectorError("cannot parse component selector \"" + selector + "\": " + e.what());
  }
}

std::vector<std::complex<double>> parse_point(const std::string& text, int dim) {
  std::vector<std::complex<double>> z;
  std::stringstream parts(text);
  std::string item;
  while (std::getline(parts, item, ',')) {
    double turns = 0.0;
    try {
      std::size_t used = 0;
      turns = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("cannot parse torus point coordinate \"" + item + "\"");
    }
    z.push_back(std::polar(1.0, 2.0 * std::numbers::pi * turns));
  }
  if (static_cast<int>(z.size()) != dim)
    throw InputError("point has " + std::to_string(z.size()) + " coordinates, component torus has " +
                     std::to_string(dim));
  return z;
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

int cmd_components(const std::string& input, bool pretty, std::ostream& out) {
  FundamentalInvariants inv = load_invariants(input);
  out << components_json(inv, pretty) << "\n";
  return 0;
}

int cmd_density(const std::string& input, const std::string& selector, double q_val,
                const std::vector<std::string>& points, bool pretty, std::ostream& out) {
  FundamentalInvariants inv = load_invariants(input);
  ComponentSpec spec = select_component(inv, selector);
  DensityReport rep = density(spec);

  Json doc = Json::parse(density_report_json(rep));
  if (q_val > 0.0) {
    doc["q"] = q_val;
    doc["constant_value"] = rep.constant.eval_at_q(q_val);
    doc["formal_degree_value"] = rep.formal_degree.eval_at_q(q_val);
    Json evals = Json::array();
    FactoredFn full(rep.constant, rep.factors);
    for (const std::string& p : points) {
      std::vector<std::complex<double>> z = parse_point(p, rep.torus_dim);
      Json rec = Json::object();
      rec["point"] = p;
      rec["density"] = full.eval_real(q_val, z) * rep.formal_degree.eval_at_q(q_val);
      evals.push_back(std::move(rec));
    }
    if (!evals.empty()) doc["values"] = std::move(evals);
  } else if (!points.empty()) {
    throw InputError("--point requires --q");
  }
  out << dump(doc, pretty) << "\n";
  return 0;
}

int cmd_verify(const std::vector<std::string>& only, bool as_json, bool pretty, std::ostream& out) {
  std::vector<SuiteResult> results = run_suites(only);
  bool all = true;
  for (const SuiteResult& r : results) all = all && r.pass;
  if (as_json) {
    Json doc = Json::parse(verify_report_json(results));
    out << dump(doc, pretty) << "\n";
  } else {
    for (const SuiteResult& r : results) {
      out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
      if (!r.pass) out << ": " << r.detail;
      out << "\n";
    }
  }
  return all ? 0 : 1;
}

int cmd_integrate(const std::string& input, const std::string& selector, double q_val, int grid,
                  bool pretty, std::ostream& out) {
  FundamentalInvariants inv = load_invariants(input);
  ComponentSpec spec = select_component(inv, selector);
  double mass = integrate(spec, q_val, grid);
  double half = integrate(spec, q_val, std::max(8, grid / 2));
  Json doc = Json::object();
  doc["selector"] = spec.selector();
  doc["q"] = q_val;
  doc["grid"] = grid;
  doc["mass"] = mass;
  doc["convergence_delta"] = mass - half;
  out << dump(doc, pretty) << "\n";
  return 0;
}

int cmd_transfer(const std::string& input, const std::string& selector, int d, bool want_kappa,
                 bool pretty, std::ostream& out) {
  FundamentalInvariants inv = load_invariants(input);
  ComponentSpec spec = select_component(inv, selector);

  Json doc = Json::object();
  if (want_kappa) {
    KappaResult k = kappa(spec);
    doc["selector"] = spec.selector();
    doc["kappa"] = k.kappa.str();
    doc["iwahori_volume_ref"] = k.iwahori_volume_ref.str();
    doc["normalized_volume"] = k.normalized_volume.str();
  } else {
    int n = inv.total_n();
    if (d < 1 || n % d != 0)
      throw InputError("division algebra degree must divide n = " + std::to_string(n));
    int n_prime = n / d;
    DensityReport moved = transfer_density(density(spec), d, n_prime);
    doc = Json::parse(density_report_json(moved));
    doc["d"] = d;
    doc["n_prime"] = n_prime;
    doc["lambda"] = lambda_DF(d, n_prime).str();
  }
  out << dump(doc, pretty) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Plancherel densities for the Bernstein components of GL(n)"};
  app.require_subcommand(1);

  std::string input, selector;
  double q_val = 0.0;
  int grid = 256;
  int division = 1;
  bool pretty = false, as_json = false, want_kappa = false;
  std::vector<std::string> points, only;

  CLI::App* c_components = app.add_subcommand("components", "List the components of the input");
  c_components->add_option("input", input, "invariants document")->required();
  c_components->add_flag("--pretty", pretty, "indent the output");

  CLI::App* c_density = app.add_subcommand("density", "Emit one component's Plancherel density");
  c_density->add_option("input", input, "invariants document")->required();
  c_density->add_option("--component", selector, "component selector, e.g. 2+1|3")->required();
  c_density->add_option("--q", q_val, "evaluate scalars at this q");
  c_density->add_option("--point", points, "torus point in turns, e.g. 0,0.5 (repeatable)");
  c_density->add_flag("--pretty", pretty, "indent the output");

  CLI::App* c_verify = app.add_subcommand("verify", "Run the identity verification suites");
  c_verify->add_option("--only", only, "restrict to named suites (repeatable)");
  c_verify->add_flag("--json", as_json, "machine-readable report");
  c_verify->add_flag("--pretty", pretty, "indent the output");

  CLI::App* c_integrate = app.add_subcommand("integrate", "Numerically integrate a component's mass");
  c_integrate->add_option("input", input, "invariants document")->required();
  c_integrate->add_option("--component", selector, "component selector")->required();
  c_integrate->add_option("--q", q_val, "residue cardinality, q > 1")->required();
  c_integrate->add_option("--grid", grid, "lattice points per circle")->default_val(256);
  c_integrate->add_flag("--pretty", pretty, "indent the output");

  CLI::App* c_transfer = app.add_subcommand("transfer", "Transfer a density to GL(n', D) or compute kappa");
  c_transfer->add_option("input", input, "invariants document")->required();
  c_transfer->add_option("--component", selector, "component selector")->required();
  c_transfer->add_option("--d", division, "degree of the division algebra")->default_val(1);
  c_transfer->add_flag("--kappa", want_kappa, "compute the Iwahori-reference constant instead");
  c_transfer->add_flag("--pretty", pretty, "indent the output");

  std::vector<const char*> argv;
  argv.push_back("planch");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (*c_components) return cmd_components(input, pretty, out);
    if (*c_density) return cmd_density(input, selector, q_val, points, pretty, out);
    if (*c_verify) return cmd_verify(only, as_json, pretty, out);
    if (*c_integrate) return cmd_integrate(input, selector, q_val, grid, pretty, out);
    if (*c_transfer) return cmd_transfer(input, selector, division, want_kappa, pretty, out);
    err << "no command given\n";
    return 1;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    int code = app.exit(e, out, msg);
    err << msg.str();
    return code == 0 ? 0 : 2;
  } catch (const SelectorError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const SingularityError& e) {
    err << "error: " << e.what() << "\n";
    return 5;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationFailure& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const MissingDataError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const IndexError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const MixedCuspidalError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace planch
