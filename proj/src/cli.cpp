#include "pbq/cli.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "pbq/families.hpp"
#include "pbq/identities.hpp"
#include "pbq/json_io.hpp"
#include "pbq/lift.hpp"
#include "pbq/quadratize.hpp"
#include "pbq/verify.hpp"

namespace pbq {

namespace {

using io::json;

constexpr unsigned kReportMaxN = 12;

struct OutputOptions {
  std::string path;             // empty = the command's stdout stream
  std::string format = "json";  // json | table
};

void add_output_options(CLI::App* cmd, OutputOptions* opts) {
  cmd->add_option("--output,-o", opts->path, "Write to a file instead of stdout");
  cmd->add_option("--format", opts->format, "Output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
}

void write_text(const std::string& text, const OutputOptions& opts, std::ostream& out) {
  if (opts.path.empty() || opts.path == "-") {
    out << text << "\n";
    return;
  }
  std::ofstream file(opts.path);
  if (!file) throw InputError("cannot open output file '" + opts.path + "'");
  file << text << "\n";
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON input");
  return j;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> values;
  std::string item;
  std::istringstream stream(csv);
  while (std::getline(stream, item, ',')) values.push_back(Rational::parse(item));
  if (values.empty()) throw InputError("empty value list");
  return values;
}

// Sources for a symmetric function: a named family, an explicit weight-value
// list, or a spec JSON file.
struct SpecSource {
  std::string family;
  unsigned n = 0;
  int t = -1;
  std::string k_csv;
  std::string input_path;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--family", family,
                    "Named function: neg-monomial, pos-monomial, parity, parity-complement, "
                    "t-out-of-n, exact-t");
    cmd->add_option("--n", n, "Variable count for a named family");
    cmd->add_option("--t", t, "Threshold for t-out-of-n / exact-t");
    cmd->add_option("--k", k_csv, "Weight-value vector k_0,...,k_n (rationals)");
    cmd->add_option("--input", input_path, "Spec JSON file, '-' for stdin");
  }

  bool provided() const { return !family.empty() || !k_csv.empty() || !input_path.empty(); }

  SymmetricSpec build() const {
    int sources = (!family.empty()) + (!k_csv.empty()) + (!input_path.empty());
    if (sources != 1)
      throw InputError("specify exactly one of --family, --k, --input");
    if (!k_csv.empty()) {
      std::vector<Rational> k = parse_rational_list(k_csv);
      if (n != 0 && k.size() != static_cast<size_t>(n) + 1)
        throw InputError("--k must list n+1 values");
      if (k.size() < 2) throw InputError("--k must list at least two values");
      unsigned vars = static_cast<unsigned>(k.size()) - 1;
      return SymmetricSpec(vars, std::move(k));
    }
    if (!input_path.empty()) return io::spec_from_json(parse_json(read_input(input_path)));
    if (n == 0) throw InputError("--family requires --n");
    if (family == "neg-monomial") return spec_neg_monomial(n);
    if (family == "pos-monomial") return spec_pos_monomial(n);
    if (family == "parity") return spec_parity(n);
    if (family == "parity-complement") return spec_parity_complement(n);
    if (family == "t-out-of-n") {
      if (t < 0) throw InputError("t-out-of-n requires --t");
      return spec_t_out_of_n(static_cast<unsigned>(t), n);
    }
    if (family == "exact-t") {
      if (t < 0) throw InputError("exact-t requires --t");
      return spec_exact_t(static_cast<unsigned>(t), n);
    }
    throw InputError("unknown function family '" + family + "'");
  }
};

std::string render_rep_table(const NegPartRep& rep) {
  std::ostringstream out;
  out << "n = " << rep.n << "\n";
  out << "prefix: " << rep.affine_const.str() << " + " << rep.affine_linear.str() << "*l + "
      << rep.affine_quad.str() << "*l^2\n";
  for (const NegPartTerm& t : rep.alphas) {
    if (t.alpha.is_zero()) continue;
    out << "alpha[" << t.i << "] = " << t.alpha.str() << "  (eps = " << t.eps.str() << ")\n";
  }
  return out.str();
}

std::string render_result_table(const QuadratizationResult& result) {
  std::ostringstream out;
  out << "family:      " << family_name(result.family) << "\n"
      << "n, m:        " << result.g.n() << ", " << result.aux_count << "\n"
      << "paper bound: " << result.paper_bound << "\n"
      << "y-linear:    " << (result.y_linear ? "yes" : "no") << "\n"
      << "x-symmetric: " << (result.x_symmetric ? "yes" : "no") << "\n"
      << "g(x,y) = " << io::quadform_to_string(result.g) << "\n";
  return out.str();
}

std::string render_report_table(const VerifyReport& report) {
  std::ostringstream out;
  out << (report.passed ? "PASSED" : "FAILED") << " over " << report.checked_points
      << " points; y-linear: " << (report.y_linear ? "yes" : "no")
      << ", x-symmetric: " << (report.x_symmetric ? "yes" : "no")
      << ", global min match: " << (report.global_min_match ? "yes" : "no") << "\n";
  if (report.counterexample) {
    out << "counterexample: x =";
    unsigned n = static_cast<unsigned>(std::countr_zero(report.checked_points));
    for (unsigned j = 0; j < n; ++j)
      out << " " << ((report.counterexample->x_mask >> j) & 1);
    out << ", expected " << report.counterexample->expected.str() << ", got "
        << report.counterexample->got.str() << "\n";
  }
  return out.str();
}

// ---- represent --------------------------------------------------------------

struct RepresentConfig {
  SpecSource source;
  std::string mode;
  std::string eps_csv;
  OutputOptions output;
};

int cmd_represent(const RepresentConfig& cfg, std::ostream& out) {
  SymmetricSpec spec = cfg.source.build();
  NegPartRep rep;
  if (cfg.mode == "general-eps") {
    if (cfg.eps_csv.empty()) throw InputError("mode general-eps requires --eps");
    std::vector<Rational> eps = parse_rational_list(cfg.eps_csv);
    if (eps.size() == 1) eps.assign(spec.n() + 1, eps[0]);
    rep = solve_representation(spec, eps);
  } else if (cfg.mode == "closed-form") {
    if (cfg.eps_csv.empty()) throw InputError("mode closed-form requires --eps");
    std::vector<Rational> eps = parse_rational_list(cfg.eps_csv);
    if (eps.size() != 1) throw InputError("mode closed-form takes a single --eps value");
    rep = closed_form_alphas(spec, eps[0]);
  } else if (cfg.mode == "half") {
    rep = alphas_half(spec);
  } else if (cfg.mode == "fix") {
    rep = fix_representation(spec);
  } else {
    throw InputError("unknown mode '" + cfg.mode + "'");
  }
  if (cfg.output.format == "table")
    write_text(render_rep_table(rep), cfg.output, out);
  else
    write_text(io::rep_to_json(rep).dump(2), cfg.output, out);
  return 0;
}

// ---- quadratize --------------------------------------------------------------

struct QuadratizeConfig {
  std::string family;
  unsigned n = 0;
  int t = -1;
  std::string k_csv;
  std::string input_path;
  OutputOptions output;
};

QuadratizationResult dispatch_quadratize(const QuadratizeConfig& cfg) {
  if (!cfg.k_csv.empty() || !cfg.input_path.empty() || cfg.family == "general-symmetric" ||
      cfg.family.empty()) {
    SpecSource source;
    source.k_csv = cfg.k_csv;
    source.input_path = cfg.input_path;
    source.n = cfg.n;
    if (!source.provided())
      throw InputError("quadratize needs --family, --k, or --input");
    return quadratize_symmetric_general(source.build());
  }
  unsigned n = cfg.n;
  if (n == 0) throw InputError("--family requires --n");
  if (cfg.family == "pos-monomial") return quadratize_pos_monomial(n);
  if (cfg.family == "pos-monomial-split") return quadratize_pos_monomial_split(n);
  if (cfg.family == "neg-monomial-standard") return quadratize_neg_monomial_standard(n);
  if (cfg.family == "neg-monomial-half") return quadratize_neg_monomial_half(n);
  if (cfg.family == "neg-monomial-asymmetric") return quadratize_neg_monomial_asymmetric(n);
  if (cfg.family == "parity") return quadratize_parity(n);
  if (cfg.family == "parity-complement") return quadratize_parity_complement(n);
  if (cfg.family == "t-out-of-n") {
    if (cfg.t < 0) throw InputError("t-out-of-n requires --t");
    return quadratize_t_out_of_n(static_cast<unsigned>(cfg.t), n);
  }
  if (cfg.family == "exact-t") {
    if (cfg.t < 0) throw InputError("exact-t requires --t");
    return quadratize_exact_t(static_cast<unsigned>(cfg.t), n);
  }
  throw InputError("unknown quadratization family '" + cfg.family + "'");
}

int cmd_quadratize(const QuadratizeConfig& cfg, std::ostream& out) {
  QuadratizationResult result = dispatch_quadratize(cfg);
  if (cfg.output.format == "table")
    write_text(render_result_table(result), cfg.output, out);
  else
    write_text(io::result_to_json(result).dump(2), cfg.output, out);
  return 0;
}

// ---- verify ------------------------------------------------------------------

struct VerifyConfig {
  std::string g_path;
  SpecSource source;
  std::string table_csv;
  OutputOptions output;
};

int cmd_verify(const VerifyConfig& cfg, std::ostream& out) {
  if (cfg.g_path.empty()) throw InputError("verify requires --g");
  json gj = parse_json(read_input(cfg.g_path));
  QuadForm g = gj.contains("family") ? io::result_from_json(gj).g : io::quadform_from_json(gj);

  VerifyReport report;
  if (!cfg.table_csv.empty()) {
    std::vector<Rational> table = parse_rational_list(cfg.table_csv);
    if (table.size() != (uint64_t{1} << g.n()))
      throw InputError("--table must list 2^n values");
    report = verify_quadratization(
        g, PointFn([&table](uint64_t x) { return table[x]; }));
  } else if (cfg.source.provided()) {
    SymmetricSpec spec = cfg.source.build();
    if (spec.n() != g.n()) throw InputError("function and form differ in variable count");
    report = verify_quadratization(g, spec);
  } else {
    throw InputError("verify needs a reference function: --family, --k, --input, or --table");
  }

  if (cfg.output.format == "table")
    write_text(render_report_table(report), cfg.output, out);
  else
    write_text(io::report_to_json(report).dump(2), cfg.output, out);
  return report.passed ? 0 : 1;
}

// ---- lift --------------------------------------------------------------------

struct LiftConfig {
  std::string poly_path;
  std::string table_csv;
  bool roundtrip = false;
  OutputOptions output;
};

int cmd_lift(const LiftConfig& cfg, std::ostream& out) {
  MultilinearPoly poly(1);
  if (!cfg.poly_path.empty() && !cfg.table_csv.empty())
    throw InputError("lift takes --poly or --table, not both");
  if (!cfg.poly_path.empty()) {
    poly = io::poly_from_json(parse_json(read_input(cfg.poly_path)));
  } else if (!cfg.table_csv.empty()) {
    poly = interpolate_multilinear(parse_rational_list(cfg.table_csv));
  } else {
    throw InputError("lift requires --poly or --table");
  }

  LiftSpec lift = lift_function(poly);
  if (!cfg.roundtrip) {
    if (cfg.output.format == "table") {
      std::ostringstream text;
      text << "n = " << lift.n << ", N = " << lift.N << "\n";
      for (unsigned j = 1; j <= lift.n; ++j)
        text << "x" << j << " <- z[" << lift.block_map[j - 1].first << ".."
             << lift.block_map[j - 1].second << "]\n";
      write_text(text.str(), cfg.output, out);
    } else {
      write_text(io::lift_to_json(lift).dump(2), cfg.output, out);
    }
    return 0;
  }

  QuadratizationResult lifted = quadratize_symmetric_general(lifted_spec(lift));
  QuadForm projected = project_quadratization(lifted.g, lift);
  VerifyReport report = verify_quadratization(projected, poly);
  if (cfg.output.format == "table") {
    std::ostringstream text;
    text << "lift: n = " << lift.n << ", N = " << lift.N << ", m = " << lifted.aux_count << "\n"
         << "projected g(x,y) = " << io::quadform_to_string(projected) << "\n"
         << render_report_table(report);
    write_text(text.str(), cfg.output, out);
  } else {
    json j{{"lift", io::lift_to_json(lift)},
           {"quadratization", io::result_to_json(lifted)},
           {"projected", io::quadform_to_json(projected)},
           {"report", io::report_to_json(report)}};
    write_text(j.dump(2), cfg.output, out);
  }
  return report.passed ? 0 : 1;
}

// ---- oracle ------------------------------------------------------------------

struct OracleConfig {
  unsigned n = 3;
  OutputOptions output;
};

int cmd_oracle(const OracleConfig& cfg, std::ostream& out) {
  if (cfg.n < 1 || cfg.n > kMaxTableVars) throw InputError("oracle: n out of range");
  std::vector<Rational> table(uint64_t{1} << cfg.n);
  for (uint64_t w = 0; w < table.size(); ++w)
    table[w] = Rational(std::popcount(w) & 1);
  MultilinearPoly poly = interpolate_multilinear(table);
  std::vector<unsigned> top;
  for (unsigned j = 1; j <= cfg.n; ++j) top.push_back(j);
  Rational top_coef = poly.coefficient(top);

  if (cfg.output.format == "table") {
    std::ostringstream text;
    text << "parity on " << cfg.n << " variables: degree " << poly.degree()
         << ", top coefficient " << top_coef.str() << "\n";
    write_text(text.str(), cfg.output, out);
  } else {
    json j{{"function", "parity"},
           {"n", cfg.n},
           {"degree", poly.degree()},
           {"top_coefficient", top_coef.str()}};
    write_text(j.dump(2), cfg.output, out);
  }
  return 0;
}

// ---- report ------------------------------------------------------------------

struct ReportConfig {
  unsigned n_max = 8;
  OutputOptions output;
};

struct ReportRow {
  std::string family;
  unsigned n;
  unsigned aux;
  unsigned bound;
  bool verified;
};

ReportRow row_for(const std::string& label, unsigned n, const QuadratizationResult& result,
                  const SymmetricSpec& spec) {
  VerifyReport report = verify_quadratization(result.g, spec);
  return {label, n, result.aux_count, result.paper_bound,
          report.passed && result.aux_count <= result.paper_bound};
}

std::vector<ReportRow> build_report(unsigned n_max) {
  std::vector<ReportRow> rows;
  std::mt19937 rng(20240915);
  auto random_spec = [&rng](unsigned n) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<Rational> k;
    for (unsigned l = 0; l <= n; ++l) k.emplace_back(num(rng), den(rng));
    return SymmetricSpec(n, std::move(k));
  };

  for (unsigned n = 1; n <= n_max; ++n) {
    {  // general construction on seeded random specs, worst case of five
      ReportRow row{"general-symmetric", n, 0, n >= 2 ? n - 2 : 0, true};
      for (int trial = 0; trial < 5; ++trial) {
        SymmetricSpec spec = random_spec(n);
        QuadratizationResult result = quadratize_symmetric_general(spec);
        VerifyReport report = verify_quadratization(result.g, spec);
        row.aux = std::max(row.aux, result.aux_count);
        row.verified = row.verified && report.passed && result.aux_count <= result.paper_bound;
      }
      rows.push_back(row);
    }
    rows.push_back(row_for("pos-monomial", n, quadratize_pos_monomial(n), spec_pos_monomial(n)));
    if (n >= 3 && n % 2 == 1)
      rows.push_back(
          row_for("pos-monomial-split", n, quadratize_pos_monomial_split(n), spec_pos_monomial(n)));
    rows.push_back(row_for("neg-monomial-standard", n, quadratize_neg_monomial_standard(n),
                           spec_neg_monomial(n)));
    rows.push_back(
        row_for("neg-monomial-half", n, quadratize_neg_monomial_half(n), spec_neg_monomial(n)));
    if (n >= 2)
      rows.push_back(row_for("neg-monomial-asymmetric", n, quadratize_neg_monomial_asymmetric(n),
                             spec_neg_monomial(n)));
    {
      ReportRow row{"t-out-of-n", n, 0, (n + 1) / 2, true};
      for (unsigned t = 1; t <= n; ++t) {
        QuadratizationResult result = quadratize_t_out_of_n(t, n);
        VerifyReport report = verify_quadratization(result.g, spec_t_out_of_n(t, n));
        row.aux = std::max(row.aux, result.aux_count);
        row.verified = row.verified && report.passed && result.aux_count <= result.paper_bound;
      }
      rows.push_back(row);
    }
    {
      ReportRow row{"exact-t", n, 0, n / 2, true};
      for (unsigned t = 0; t <= n; ++t) {
        QuadratizationResult result = quadratize_exact_t(t, n);
        VerifyReport report = verify_quadratization(result.g, spec_exact_t(t, n));
        row.aux = std::max(row.aux, result.aux_count);
        row.verified = row.verified && report.passed && result.aux_count <= result.paper_bound;
      }
      rows.push_back(row);
    }
    rows.push_back(row_for("parity", n, quadratize_parity(n), spec_parity(n)));
    rows.push_back(row_for("parity-complement", n, quadratize_parity_complement(n),
                           spec_parity_complement(n)));
  }
  return rows;
}

int cmd_report(const ReportConfig& cfg, std::ostream& out) {
  if (cfg.n_max < 1 || cfg.n_max > kReportMaxN)
    throw InputError("report: --n-max must lie in 1.." + std::to_string(kReportMaxN));
  std::vector<ReportRow> rows = build_report(cfg.n_max);

  if (cfg.output.format == "json") {
    json arr = json::array();
    for (const ReportRow& r : rows)
      arr.push_back({{"family", r.family},
                     {"n", r.n},
                     {"aux_count", r.aux},
                     {"paper_bound", r.bound},
                     {"verified", r.verified}});
    write_text(arr.dump(2), cfg.output, out);
  } else {
    std::ostringstream text;
    text << "family                    n   aux  bound  verified\n";
    for (const ReportRow& r : rows) {
      std::string family = r.family;
      family.resize(25, ' ');
      std::string n_str = std::to_string(r.n);
      n_str.resize(3, ' ');
      std::string aux = std::to_string(r.aux);
      aux.resize(4, ' ');
      std::string bound = std::to_string(r.bound);
      bound.resize(6, ' ');
      text << family << " " << n_str << " " << aux << " " << bound << " "
           << (r.verified ? "yes" : "NO") << "\n";
    }
    write_text(text.str(), cfg.output, out);
  }
  bool all = std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.verified; });
  return all ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quadratization toolkit for symmetric pseudo-Boolean functions"};
  app.require_subcommand(1);

  RepresentConfig represent_cfg;
  CLI::App* represent = app.add_subcommand(
      "represent", "Negative-part representation of a symmetric function");
  represent_cfg.source.add_options(represent);
  represent->add_option("--mode", represent_cfg.mode,
                        "Representation: general-eps, closed-form, half, fix")
      ->required()
      ->check(CLI::IsMember({"general-eps", "closed-form", "half", "fix"}));
  represent->add_option("--eps", represent_cfg.eps_csv,
                        "eps in (0,1]; a single value or a comma list of n+1");
  add_output_options(represent, &represent_cfg.output);

  QuadratizeConfig quadratize_cfg;
  CLI::App* quadratize = app.add_subcommand("quadratize", "Construct a quadratization");
  quadratize->add_option("--family", quadratize_cfg.family,
                         "Construction: general-symmetric, pos-monomial, pos-monomial-split, "
                         "neg-monomial-standard, neg-monomial-half, neg-monomial-asymmetric, "
                         "t-out-of-n, exact-t, parity, parity-complement");
  quadratize->add_option("--n", quadratize_cfg.n, "Variable count");
  quadratize->add_option("--t", quadratize_cfg.t, "Threshold for t-out-of-n / exact-t");
  quadratize->add_option("--k", quadratize_cfg.k_csv, "Weight-value vector for general-symmetric");
  quadratize->add_option("--input", quadratize_cfg.input_path, "Spec JSON file, '-' for stdin");
  add_output_options(quadratize, &quadratize_cfg.output);

  VerifyConfig verify_cfg;
  CLI::App* verify = app.add_subcommand("verify", "Certify a quadratization exhaustively");
  verify->add_option("--g", verify_cfg.g_path, "Form JSON (QuadForm or result), '-' for stdin")
      ->required();
  verify_cfg.source.add_options(verify);
  verify->add_option("--table", verify_cfg.table_csv,
                     "Full 2^n value table of the reference function");
  add_output_options(verify, &verify_cfg.output);

  LiftConfig lift_cfg;
  CLI::App* lift = app.add_subcommand(
      "lift", "Embed an arbitrary function into a symmetric one on 2^n - 1 variables");
  lift->add_option("--poly", lift_cfg.poly_path, "Multilinear polynomial JSON, '-' for stdin");
  lift->add_option("--table", lift_cfg.table_csv, "Full 2^n value table");
  lift->add_flag("--roundtrip", lift_cfg.roundtrip,
                 "Also quadratize the lift, project back, and certify");
  add_output_options(lift, &lift_cfg.output);

  OracleConfig oracle_cfg;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Degree of the multilinear interpolant of parity (3 on the 3-cube)");
  oracle->add_option("--n", oracle_cfg.n, "Cube dimension (default 3)");
  add_output_options(oracle, &oracle_cfg.output);

  ReportConfig report_cfg;
  CLI::App* report = app.add_subcommand("report", "Family-by-family bound and verification table");
  report->add_option("--n-max", report_cfg.n_max, "Largest variable count (default 8)");
  add_output_options(report, &report_cfg.output);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (represent->parsed()) return cmd_represent(represent_cfg, out);
    if (quadratize->parsed()) return cmd_quadratize(quadratize_cfg, out);
    if (verify->parsed()) return cmd_verify(verify_cfg, out);
    if (lift->parsed()) return cmd_lift(lift_cfg, out);
    if (oracle->parsed()) return cmd_oracle(oracle_cfg, out);
    if (report->parsed()) return cmd_report(report_cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace pbq
