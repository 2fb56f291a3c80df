#include "pbq/json_io.hpp"

#include <bit>

namespace pbq::io {

namespace {

Rational rational_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw InputError(std::string("json: missing rational field '") + key + "'");
  return Rational::parse(j[key].get<std::string>());
}

long long int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw InputError(std::string("json: missing integer field '") + key + "'");
  return j[key].get<long long>();
}

unsigned uint_field(const json& j, const char* key) {
  long long v = int_field(j, key);
  if (v < 0) throw InputError(std::string("json: field '") + key + "' must be non-negative");
  return static_cast<unsigned>(v);
}

bool bool_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_boolean())
    throw InputError(std::string("json: missing boolean field '") + key + "'");
  return j[key].get<bool>();
}

std::vector<Rational> rational_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw InputError(std::string("json: missing array field '") + key + "'");
  std::vector<Rational> out;
  out.reserve(j[key].size());
  for (const json& e : j[key]) {
    if (!e.is_string()) throw InputError(std::string("json: '") + key + "' entries must be strings");
    out.push_back(Rational::parse(e.get<std::string>()));
  }
  return out;
}

Var var_from_name(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y'))
    throw InputError("json: invalid variable name '" + name + "'");
  unsigned index = 0;
  for (size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9')
      throw InputError("json: invalid variable name '" + name + "'");
    index = index * 10 + static_cast<unsigned>(name[i] - '0');
  }
  return {name[0] == 'x' ? VarKind::x : VarKind::y, index};
}

json terms_to_json(const TermMap& terms) {
  json arr = json::array();
  for (const auto& [mono, coef] : terms) {
    json names = json::array();
    for (const Var& v : mono) names.push_back(var_name(v));
    arr.push_back({{"vars", std::move(names)}, {"coef", coef.str()}});
  }
  return arr;
}

}  // namespace

json spec_to_json(const SymmetricSpec& spec) {
  json arr = json::array();
  for (const Rational& v : spec.k()) arr.push_back(v.str());
  return json{{"n", spec.n()}, {"k", std::move(arr)}};
}

SymmetricSpec spec_from_json(const json& j) {
  return SymmetricSpec(uint_field(j, "n"), rational_array(j, "k"));
}

json poly_to_json(const MultilinearPoly& poly) {
  return json{{"n", poly.n()}, {"terms", terms_to_json(poly.terms())}};
}

MultilinearPoly poly_from_json(const json& j) {
  MultilinearPoly poly(uint_field(j, "n"));
  if (!j.contains("terms") || !j["terms"].is_array())
    throw InputError("json: polynomial needs a 'terms' array");
  for (const json& term : j["terms"]) {
    if (!term.contains("vars") || !term["vars"].is_array())
      throw InputError("json: term needs a 'vars' array");
    std::vector<unsigned> vars;
    for (const json& name : term["vars"]) {
      Var v = var_from_name(name.get<std::string>());
      if (v.kind != VarKind::x) throw InputError("json: polynomial terms admit x variables only");
      vars.push_back(v.index);
    }
    poly.add_term(std::move(vars), rational_field(term, "coef"));
  }
  return poly;
}

json quadform_to_json(const QuadForm& g) {
  json labels = json::object();
  for (const auto& [aux, threshold] : g.aux_labels()) labels[std::to_string(aux)] = threshold;
  return json{{"n", g.n()}, {"m", g.m()}, {"terms", terms_to_json(g.terms())},
              {"aux_labels", std::move(labels)}};
}

QuadForm quadform_from_json(const json& j) {
  QuadForm g(uint_field(j, "n"), uint_field(j, "m"));
  if (!j.contains("terms") || !j["terms"].is_array())
    throw InputError("json: quadratic form needs a 'terms' array");
  for (const json& term : j["terms"]) {
    if (!term.contains("vars") || !term["vars"].is_array())
      throw InputError("json: term needs a 'vars' array");
    Monomial mono;
    for (const json& name : term["vars"]) mono.push_back(var_from_name(name.get<std::string>()));
    g.add_term(std::move(mono), rational_field(term, "coef"));
  }
  if (j.contains("aux_labels")) {
    if (!j["aux_labels"].is_object()) throw InputError("json: 'aux_labels' must be an object");
    for (const auto& [key, value] : j["aux_labels"].items()) {
      if (!value.is_number_integer()) throw InputError("json: aux label must be an integer");
      unsigned aux = 0;
      for (char c : key) {
        if (c < '0' || c > '9') throw InputError("json: aux label key must be an index");
        aux = aux * 10 + static_cast<unsigned>(c - '0');
      }
      g.set_aux_label(aux, value.get<unsigned>());
    }
  }
  return g;
}

json rep_to_json(const NegPartRep& rep) {
  json alphas = json::array();
  for (const NegPartTerm& t : rep.alphas)
    alphas.push_back({{"i", t.i}, {"alpha", t.alpha.str()}, {"eps", t.eps.str()}});
  return json{{"n", rep.n},
              {"affine_const", rep.affine_const.str()},
              {"affine_linear", rep.affine_linear.str()},
              {"affine_quad", rep.affine_quad.str()},
              {"alphas", std::move(alphas)}};
}

NegPartRep rep_from_json(const json& j) {
  NegPartRep rep;
  rep.n = uint_field(j, "n");
  rep.affine_const = rational_field(j, "affine_const");
  rep.affine_linear = rational_field(j, "affine_linear");
  if (j.contains("affine_quad")) rep.affine_quad = rational_field(j, "affine_quad");
  if (!j.contains("alphas") || !j["alphas"].is_array())
    throw InputError("json: representation needs an 'alphas' array");
  for (const json& term : j["alphas"]) {
    NegPartTerm t;
    t.i = uint_field(term, "i");
    t.alpha = rational_field(term, "alpha");
    t.eps = rational_field(term, "eps");
    if (t.i > rep.n) throw InputError("json: representation slot out of range");
    rep.alphas.push_back(std::move(t));
  }
  return rep;
}

json result_to_json(const QuadratizationResult& result) {
  json j = quadform_to_json(result.g);
  j["family"] = family_name(result.family);
  j["aux_count"] = result.aux_count;
  j["paper_bound"] = result.paper_bound;
  j["y_linear"] = result.y_linear;
  j["x_symmetric"] = result.x_symmetric;
  return j;
}

QuadratizationResult result_from_json(const json& j) {
  if (!j.contains("family") || !j["family"].is_string())
    throw InputError("json: result needs a 'family' string");
  return QuadratizationResult{quadform_from_json(j),
                              family_from_name(j["family"].get<std::string>()),
                              uint_field(j, "aux_count"),
                              uint_field(j, "paper_bound"),
                              bool_field(j, "y_linear"),
                              bool_field(j, "x_symmetric")};
}

json report_to_json(const VerifyReport& report) {
  unsigned n = static_cast<unsigned>(std::countr_zero(report.checked_points));
  json cex = nullptr;
  if (report.counterexample) {
    json bits = json::array();
    for (unsigned jbit = 0; jbit < n; ++jbit)
      bits.push_back(static_cast<int>((report.counterexample->x_mask >> jbit) & 1));
    cex = json{{"x", std::move(bits)},
               {"expected", report.counterexample->expected.str()},
               {"got", report.counterexample->got.str()}};
  }
  return json{{"passed", report.passed},
              {"counterexample", std::move(cex)},
              {"checked_points", report.checked_points},
              {"y_linear", report.y_linear},
              {"x_symmetric", report.x_symmetric},
              {"global_min_match", report.global_min_match}};
}

VerifyReport report_from_json(const json& j) {
  VerifyReport report;
  report.passed = bool_field(j, "passed");
  report.checked_points = static_cast<uint64_t>(int_field(j, "checked_points"));
  report.y_linear = bool_field(j, "y_linear");
  report.x_symmetric = bool_field(j, "x_symmetric");
  report.global_min_match = bool_field(j, "global_min_match");
  if (j.contains("counterexample") && !j["counterexample"].is_null()) {
    const json& cj = j["counterexample"];
    Counterexample cex;
    if (!cj.contains("x") || !cj["x"].is_array())
      throw InputError("json: counterexample needs an 'x' bit array");
    unsigned bit = 0;
    for (const json& b : cj["x"]) {
      int v = b.get<int>();
      if (v != 0 && v != 1) throw InputError("json: counterexample bits must be 0 or 1");
      if (v) cex.x_mask |= uint64_t{1} << bit;
      ++bit;
    }
    cex.expected = rational_field(cj, "expected");
    cex.got = rational_field(cj, "got");
    report.counterexample = std::move(cex);
  }
  return report;
}

json lift_to_json(const LiftSpec& lift) {
  json k = json::array();
  for (const Rational& v : lift.k) k.push_back(v.str());
  json blocks = json::array();
  for (const auto& [lo, hi] : lift.block_map) blocks.push_back(json::array({lo, hi}));
  return json{{"n", lift.n}, {"N", lift.N}, {"k", std::move(k)}, {"block_map", std::move(blocks)}};
}

LiftSpec lift_from_json(const json& j) {
  LiftSpec lift;
  lift.n = uint_field(j, "n");
  lift.N = uint_field(j, "N");
  lift.k = rational_array(j, "k");
  if (lift.N != (1u << lift.n) - 1) throw InputError("json: lift requires N = 2^n - 1");
  if (lift.k.size() != static_cast<size_t>(lift.N) + 1)
    throw InputError("json: lift requires N+1 values");
  if (!j.contains("block_map") || !j["block_map"].is_array())
    throw InputError("json: lift needs a 'block_map' array");
  for (const json& b : j["block_map"]) {
    if (!b.is_array() || b.size() != 2) throw InputError("json: block_map entries are [lo, hi]");
    lift.block_map.emplace_back(b[0].get<unsigned>(), b[1].get<unsigned>());
  }
  if (lift.block_map.size() != lift.n) throw InputError("json: block_map needs one range per variable");
  return lift;
}

std::string quadform_to_string(const QuadForm& g) {
  if (g.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coef] : g.terms()) {
    Rational c = coef;
    if (first) {
      if (c < Rational(0)) {
        out += "-";
        c = -c;
      }
      first = false;
    } else if (c < Rational(0)) {
      out += " - ";
      c = -c;
    } else {
      out += " + ";
    }
    std::string magnitude = c.str();
    if (mono.empty()) {
      out += magnitude;
    } else {
      if (magnitude != "1") out += magnitude + "*";
      for (size_t i = 0; i < mono.size(); ++i) {
        if (i > 0) out += "*";
        out += var_name(mono[i]);
      }
    }
  }
  return out;
}

}  // namespace pbq::io
