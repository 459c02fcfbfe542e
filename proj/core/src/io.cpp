#include "planch/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "json.hpp"
#include "planch/errors.hpp"
#include "planch/expr_parse.hpp"

namespace planch {

namespace {

using Json = nlohmann::ordered_json;

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

long long integer_field(const Json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ParseError("\"" + key + "\" must be an integer");
  return j.get<long long>();
}

HalfInt parse_halfint_text(const std::string& text, const std::string& key) {
  std::string_view s = text;
  long long scale = 2;
  if (s.size() > 2 && s.substr(s.size() - 2) == "/2") {
    scale = 1;
    s.remove_suffix(2);
  }
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("\"" + key + "\" is not an integer or half-integer: " + text);
  return HalfInt::from_twice(value * scale);
}

HalfInt halfint_field(const Json& j, const std::string& key) {
  if (j.is_number_integer()) return HalfInt(j.get<long long>());
  if (j.is_string()) return parse_halfint_text(j.get<std::string>(), key);
  throw ParseError("\"" + key + "\" must be an integer or a half-integer string");
}

Json halfint_json(HalfInt h) {
  if (h.is_integer()) return Json(h.integer());
  return Json(h.str());
}

void reject_unknown_keys(const Json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ParseError("unknown key \"" + key + "\" in " + where);
  }
}

CuspidalDatum parse_cuspidal(const Json& j, int index) {
  std::string where = "cuspidals[" + std::to_string(index) + "]";
  if (!j.is_object()) throw ParseError(where + " must be an object");
  reject_unknown_keys(j, {"m", "e", "r", "d", "delta", "f_self"}, where);

  CuspidalDatum c;
  if (j.contains("m")) c.m = static_cast<int>(integer_field(j.at("m"), "m"));
  if (j.contains("e")) c.e = static_cast<int>(integer_field(j.at("e"), "e"));
  if (j.contains("r")) c.r = static_cast<int>(integer_field(j.at("r"), "r"));
  if (j.contains("delta")) c.delta = halfint_field(j.at("delta"), "delta");
  if (j.contains("f_self")) c.f_self = integer_field(j.at("f_self"), "f_self");
  if (j.contains("d")) {
    const Json& d = j.at("d");
    if (d.is_string()) {
      std::string text = d.get<std::string>();
      if (text == "derive")
        c.d = FormalDegreeSpec::derive();
      else
        c.d = FormalDegreeSpec::exact_value(parse_scalar(text));
    } else if (d.is_number()) {
      c.d = FormalDegreeSpec::numeric_value(d.get<double>());
    } else {
      throw ParseError("\"d\" must be \"derive\", an expression string, or a number");
    }
  }
  return c;
}

Json render_cuspidal(const CuspidalDatum& c) {
  Json j = Json::object();
  j["m"] = c.m;
  j["e"] = c.e;
  j["r"] = c.r;
  switch (c.d.mode) {
    case FdMode::Unset:
      break;
    case FdMode::Derive:
      j["d"] = "derive";
      break;
    case FdMode::Exact:
      j["d"] = c.d.exact.str();
      break;
    case FdMode::Numeric:
      j["d"] = c.d.numeric;
      break;
  }
  if (c.delta) j["delta"] = halfint_json(*c.delta);
  if (c.f_self) j["f_self"] = *c.f_self;
  return j;
}

Json levi_json(const LeviShape& shape) {
  Json arr = Json::array();
  for (int b : shape.blocks) arr.push_back(b);
  return arr;
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace

FundamentalInvariants parse_invariants_json(const std::string& text) {
  Json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("input must be a JSON object");
  reject_unknown_keys(doc, {"q", "cuspidals", "cross_conductors"}, "input");
  if (!doc.contains("q") || !doc.contains("cuspidals"))
    throw ParseError("input needs \"q\" and \"cuspidals\"");

  FundamentalInvariants inv;
  inv.q = integer_field(doc.at("q"), "q");
  const Json& cs = doc.at("cuspidals");
  if (!cs.is_array() || cs.empty()) throw ParseError("\"cuspidals\" must be a nonempty array");
  for (std::size_t i = 0; i < cs.size(); ++i)
    inv.cuspidals.push_back(parse_cuspidal(cs[i], static_cast<int>(i)));

  std::size_t k = inv.cuspidals.size();
  if (doc.contains("cross_conductors")) {
    const Json& cc = doc.at("cross_conductors");
    if (!cc.is_array()) throw ParseError("\"cross_conductors\" must be a matrix");
    for (const Json& row : cc) {
      if (!row.is_array()) throw ParseError("\"cross_conductors\" must be a matrix");
      std::vector<long long> r;
      for (const Json& cell : row) r.push_back(integer_field(cell, "cross_conductors"));
      inv.cross_conductors.push_back(std::move(r));
    }
  } else {
    inv.cross_conductors.assign(k, std::vector<long long>(k, 0));
  }
  return inv;
}

std::string render_invariants_json(const FundamentalInvariants& inv, bool pretty) {
  Json doc = Json::object();
  doc["q"] = inv.q;
  Json cs = Json::array();
  for (const CuspidalDatum& c : inv.cuspidals) cs.push_back(render_cuspidal(c));
  doc["cuspidals"] = std::move(cs);
  Json cc = Json::array();
  for (const auto& row : inv.cross_conductors) {
    Json r = Json::array();
    for (long long v : row) r.push_back(v);
    cc.push_back(std::move(r));
  }
  doc["cross_conductors"] = std::move(cc);
  return dump(doc, pretty);
}

std::string components_json(const FundamentalInvariants& inv, bool pretty) {
  Json doc = Json::object();
  doc["q"] = inv.q;
  doc["n"] = inv.total_n();
  Json arr = Json::array();
  for (const ComponentSpec& spec : enumerate_components(inv)) {
    Json c = Json::object();
    c["selector"] = spec.selector();
    c["levi"] = levi_json(spec.levi());
    c["torus_dim"] = spec.segments.size();
    BigRat mass(1);
    unsigned long long effective = 1, centralizer = 1;
    for (std::size_t b = 0; b < spec.partitions.size(); ++b) {
      const CuspidalDatum& cusp = inv.cuspidals[b];
      for (int l : spec.partitions[b].parts) mass *= BigRat(static_cast<long long>(l) * cusp.m, cusp.r);
      CentralizerData cd = centralizer_data(spec.partitions[b]);
      effective *= cd.effective;
      centralizer *= cd.order;
    }
    c["canonical_mass"] = rat_str(mass);
    c["effective_quotient_order"] = effective;
    c["centralizer_order"] = centralizer;
    arr.push_back(std::move(c));
  }
  doc["components"] = std::move(arr);
  return dump(doc, pretty);
}

std::string density_report_json(const DensityReport& rep, bool pretty) {
  Json doc = Json::object();
  doc["selector"] = rep.selector;
  doc["levi"] = levi_json(rep.levi);
  doc["torus_dim"] = rep.torus_dim;

  FactoredFn folded = FactoredFn(rep.constant, rep.factors).normalized();
  doc["constant"] = folded.scalar().str();

  Json factors = Json::array();
  std::vector<TorusFactor> pool = folded.factors();
  while (!pool.empty()) {
    TorusFactor f = pool.front();
    pool.erase(pool.begin());
    TorusFactor mirror{f.zj, f.zi, f.a, f.e};
    auto it = std::find(pool.begin(), pool.end(), mirror);
    if (it == pool.end())
      throw Error("internal: unpaired torus factor in a density report");
    pool.erase(it);
    if (f.zi > f.zj) std::swap(f.zi, f.zj);
    Json entry = Json::object();
    entry["i"] = f.zi + 1;
    entry["j"] = f.zj + 1;
    entry["q_exp"] = f.a.str();
    entry["exp"] = f.e;
    factors.push_back(std::move(entry));
  }
  doc["factors"] = std::move(factors);

  if (rep.formal_degree.is_exact())
    doc["formal_degree"] = rep.formal_degree.exact().str();
  else
    doc["formal_degree"] = rep.formal_degree.numeric();
  doc["canonical_mass"] = rat_str(rep.canonical_mass);
  doc["effective_quotient_order"] = rep.effective_quotient_order;
  doc["centralizer_order"] = rep.centralizer_order;
  FactoredFn mu_normal = rep.mu.normalized();
  doc["mu_constant"] = mu_normal.scalar().str();
  doc["mu_display"] = mu_normal.str();
  doc["display"] = folded.str();
  return dump(doc, pretty);
}

ParsedDensity parse_density_json(const std::string& text) {
  Json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("constant") || !doc.contains("factors") ||
      !doc.contains("formal_degree"))
    throw ParseError("density document needs \"constant\", \"formal_degree\" and \"factors\"");

  ParsedDensity out;
  out.constant = parse_scalar(doc.at("constant").get<std::string>());
  const Json& fd = doc.at("formal_degree");
  if (fd.is_string())
    out.formal_degree = Scalar(parse_scalar(fd.get<std::string>()));
  else if (fd.is_number())
    out.formal_degree = Scalar(fd.get<double>());
  else
    throw ParseError("\"formal_degree\" must be an expression string or a number");

  for (const Json& entry : doc.at("factors")) {
    if (!entry.is_object()) throw ParseError("factor entries must be objects");
    int i = static_cast<int>(integer_field(entry.at("i"), "i")) - 1;
    int j = static_cast<int>(integer_field(entry.at("j"), "j")) - 1;
    if (i < 0 || j < 0) throw ParseError("factor coordinates are 1-based");
    HalfInt a = entry.at("q_exp").is_string()
                    ? parse_halfint_text(entry.at("q_exp").get<std::string>(), "q_exp")
                    : HalfInt(integer_field(entry.at("q_exp"), "q_exp"));
    long long e = integer_field(entry.at("exp"), "exp");
    out.factors.push_back({i, j, a, e});
    out.factors.push_back({j, i, a, e});
  }
  return out;
}

std::string verify_report_json(const std::vector<SuiteResult>& results, bool pretty) {
  Json doc = Json::object();
  Json arr = Json::array();
  bool all = true;
  for (const SuiteResult& r : results) {
    Json s = Json::object();
    s["name"] = r.name;
    s["pass"] = r.pass;
    if (!r.detail.empty()) s["detail"] = r.detail;
    arr.push_back(std::move(s));
    all = all && r.pass;
  }
  doc["suites"] = std::move(arr);
  doc["all_pass"] = all;
  return dump(doc, pretty);
}

}  // namespace planch
