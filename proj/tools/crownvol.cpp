// crownvol: command-line front end for crowned-surface volume computations.
//
// Every command builds one JSON document; the plain, latex and csv formats
// are renderings of it. Exit codes: 0 success, 1 verify failure or internal
// error, 2 bad arguments, 3 convergence failure, 4 insufficient precision.

#include <crownvol/acceptance.hpp>
#include <crownvol/crown.hpp>
#include <crownvol/ngon.hpp>
#include <crownvol/recognize.hpp>
#include <crownvol/serialize.hpp>
#include <crownvol/surfaces.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

using namespace crownvol;

namespace {

struct RunConfig {
  std::string format = "plain";
  Bits precision_bits = 128;
  unsigned workers = 0;
  std::uint64_t seed = 20240611;
};

// ---------------------------------------------------------------- rendering

std::string csv_field(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  if (format == "plain") return doc.at("plain").get<std::string>() + "\n";
  if (format == "latex") return doc.at("latex").get<std::string>() + "\n";
  // csv: one row per entry of "rows"
  const Json& rows = doc.at("rows");
  std::string out;
  bool first = true;
  for (const auto& row : rows) {
    if (first) {
      std::string header;
      for (const auto& [k, v] : row.items()) header += (header.empty() ? "" : ",") + csv_field(k);
      out += header + "\n";
      first = false;
    }
    std::string line;
    bool lead = true;
    for (const auto& [k, v] : row.items()) {
      line += (lead ? "" : ",") + csv_field(v);
      lead = false;
    }
    out += line + "\n";
  }
  return out;
}

// Decimal rendering showing every digit the error bound supports plus one.
std::string decimal(const PrecisionValue& x) {
  int cap = bits_to_digits(x.precision());
  int decimals = cap;
  if (!x.abs_error.is_zero()) {
    double e = x.abs_error.to_double();
    decimals = static_cast<int>(std::ceil(-std::log10(e))) + 1;
  }
  double mag = x.value.is_zero() ? 0.0 : std::log10(std::fabs(x.value.to_double()));
  int lead = mag > 0 ? static_cast<int>(std::floor(mag)) + 1 : 0;
  decimals = std::clamp(decimals, 0, std::max(cap - lead, 0));
  return x.value.fixed(decimals);
}

std::string error_text(const Real& e) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", e.to_double());
  return buf;
}

std::string estimate_plain(const PrecisionValue& x) { return decimal(x) + " ± " + error_text(x.abs_error); }

std::string estimate_latex(const PrecisionValue& x) { return decimal(x) + " \\pm " + error_text(x.abs_error); }

Json estimate_json(const PrecisionValue& x) {
  return Json{{"value", decimal(x)}, {"abs_error", error_text(x.abs_error)}};
}

Json symbolic_doc(const std::string& quantity, const SymbolicValue& v) {
  Json doc;
  doc["quantity"] = quantity;
  doc["kind"] = "exact";
  doc["value"] = to_json(v);
  doc["plain"] = to_plain(v);
  doc["latex"] = to_latex(v);
  doc["rows"] = Json::array({Json{{"quantity", quantity}, {"plain", to_plain(v)}, {"latex", to_latex(v)}}});
  return doc;
}

Json numeric_doc(const std::string& quantity, const PrecisionValue& x) {
  Json doc;
  doc["quantity"] = quantity;
  doc["kind"] = "numeric";
  doc["estimate"] = estimate_json(x);
  doc["plain"] = estimate_plain(x);
  doc["latex"] = estimate_latex(x);
  doc["rows"] = Json::array({Json{{"quantity", quantity}, {"value", decimal(x)}, {"abs_error", error_text(x.abs_error)}}});
  return doc;
}

// ------------------------------------------------------------------ parsing

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(' ');
    auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw DomainError("empty entry in list '" + s + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw DomainError("empty list");
  return out;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split_list(s)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw DomainError("'" + item + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

// Lengths given on the command line are exact rationals.
PrecisionValue nonnegative_decimal(const std::string& text, Bits bits, const std::string& what) {
  static const std::regex number(R"([+]?(\d+\.?\d*|\.\d+)|\d+/\d+)");
  if (!std::regex_match(text, number)) throw DomainError(what + " must be a nonnegative decimal or p/q, got '" + text + "'");
  Rational q = parse_rational(text.front() == '+' ? text.substr(1) : text);
  return PrecisionValue::from_rational(q, bits);
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(SchemaError::Kind::Schema, "", "'" + path + "' is not valid JSON: " + e.what());
  }
}

// Finds {"value": "...", "abs_error": "..."} anywhere in a document.
const Json* find_estimate(const Json& doc) {
  if (doc.is_object()) {
    if (doc.contains("value") && doc["value"].is_string() && doc.contains("abs_error") && doc["abs_error"].is_string()) return &doc;
    for (const auto& [k, v] : doc.items()) {
      if (const Json* hit = find_estimate(v)) return hit;
    }
  }
  return nullptr;
}

// Accepts "x", "x ± e", "x +- e" or a JSON document holding an estimate.
PrecisionValue parse_value(std::string text, Bits min_bits) {
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  text = trim(text);
  if (text.empty()) throw DomainError("empty value");
  std::string value = text, error;
  if (text.front() == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw SchemaError(SchemaError::Kind::Schema, "", std::string("value is not valid JSON: ") + e.what());
    }
    const Json* est = find_estimate(doc);
    if (!est) throw SchemaError(SchemaError::Kind::Schema, "", "JSON value needs string fields \"value\" and \"abs_error\"");
    value = (*est)["value"].get<std::string>();
    error = (*est)["abs_error"].get<std::string>();
  } else {
    for (const std::string sep : {"±", "+-", "+/-"}) {
      if (auto at = text.find(sep); at != std::string::npos) {
        value = trim(text.substr(0, at));
        error = trim(text.substr(at + sep.size()));
        break;
      }
    }
  }
  static const std::regex number(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  if (!std::regex_match(value, number)) throw DomainError("'" + value + "' is not a decimal number");
  if (!error.empty() && (!std::regex_match(error, number) || error.front() == '-')) {
    throw DomainError("'" + error + "' is not a nonnegative error bound");
  }
  int sig = 0;
  for (char c : value) {
    if (c == 'e' || c == 'E') break;
    if (std::isdigit(static_cast<unsigned char>(c))) ++sig;
  }
  Bits bits = std::max<Bits>(min_bits, digits_to_bits(sig + 10));
  PrecisionValue x = PrecisionValue::from_decimal(value, bits);
  if (!error.empty()) x.abs_error = detail::add_up(x.abs_error, Real(error, 64));
  return x;
}

std::string read_value_argument(const std::string& arg) {
  if (arg == "@-") return read_all(std::cin);
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw DomainError("cannot open '" + arg.substr(1) + "'");
    return read_all(in);
  }
  return arg;
}

// ----------------------------------------------------------------- commands

Json cmd_crown(int n, const std::string& d, bool total, const RunConfig& cfg) {
  if (n < 1) throw DomainError("--n must be at least 1");
  std::string name = "V_A" + std::to_string(n);
  if (total) {
    if (!d.empty()) throw DomainError("--total takes no --d");
    return symbolic_doc("int_0^inf " + name + "(d) dd", crown_total_volume(n));
  }
  CrownVolume cv = crown_volume_fixed_neck(n);
  if (d.empty()) {
    Json doc;
    doc["quantity"] = name + "(d)";
    doc["kind"] = "function";
    doc["numerator"] = to_json(cv.numerator.to_symbolic());
    doc["denominator"] = cv.denom == HalfAngle::CoshHalf ? "cosh(d/2)" : "sinh(d/2)";
    doc["plain"] = to_plain(cv);
    doc["latex"] = to_latex(cv);
    doc["rows"] = Json::array({Json{{"quantity", name + "(d)"}, {"plain", to_plain(cv)}, {"latex", to_latex(cv)}}});
    return doc;
  }
  PrecisionValue dv = nonnegative_decimal(d, cfg.precision_bits, "--d");
  PrecisionValue x = crown_volume_eval(cv, dv, cfg.precision_bits);
  std::string quantity = name + "(" + d + ")";
  if (dv.value.is_zero()) {
    // exact limit value at d = 0
    SymbolicValue exact = crown_volume_at_zero(n);
    Json doc = symbolic_doc(quantity, exact);
    PrecisionValue num = eval_symbolic(exact, cfg.precision_bits);
    doc["estimate"] = estimate_json(num);
    doc["plain"] = to_plain(exact) + " ≈ " + num.value.fixed(10);
    doc["latex"] = to_latex(exact) + " \\approx " + num.value.fixed(10);
    doc["rows"][0]["value"] = decimal(num);
    return doc;
  }
  return numeric_doc(quantity, x);
}

Json cmd_annulus(int a1, int a2, const std::string& d, bool fixed, const RunConfig& cfg) {
  if (a1 < 1 || a2 < 1) throw DomainError("--a1 and --a2 must be at least 1");
  std::string name = "A_{" + std::to_string(a1) + "," + std::to_string(a2) + "}";
  if (d.empty() && !fixed) return symbolic_doc("V_" + name, annulus_volume(a1, a2));
  HyperbolicRational h = annulus_volume_fixed_neck(a1, a2);
  if (d.empty()) {
    Json doc;
    doc["quantity"] = "V_" + name + "(d)";
    doc["kind"] = "function";
    doc["numerator"] = to_json(h.numerator);
    doc["plain"] = to_plain(h);
    doc["latex"] = to_latex(h);
    doc["rows"] = Json::array({Json{{"quantity", "V_" + name + "(d)"}, {"plain", to_plain(h)}, {"latex", to_latex(h)}}});
    return doc;
  }
  PrecisionValue dv = nonnegative_decimal(d, cfg.precision_bits, "--d");
  return numeric_doc("V_" + name + "(" + d + ")", h.evaluate({{"d", dv}}, cfg.precision_bits));
}

struct NgonArgs {
  int n = 0;
  std::string method = "quadrature";
  int digits = 0;
  int max_refinements = -1;
  long samples = 1'000'000;
  unsigned streams = 16;
  long K = 8000;
  std::string map = "smoothstep";
};

Json mc_doc(const std::string& quantity, const McEstimate& m, const McSpec& spec, const std::string& method) {
  Json doc;
  doc["quantity"] = quantity;
  doc["kind"] = "monte-carlo";
  doc["method"] = method;
  doc["estimate"] = estimate_json(m.estimate);
  doc["stderr"] = error_text(m.stderr_.value);
  doc["samples"] = spec.samples;
  doc["streams"] = spec.streams;
  doc["seed"] = spec.seed;
  std::string v = m.estimate.value.fixed(6), s = error_text(m.stderr_.value);
  doc["plain"] = v + " ± " + s + " (1 stderr, " + std::to_string(spec.samples) + " samples)";
  doc["latex"] = v + " \\pm " + s;
  doc["rows"] = Json::array({Json{{"quantity", quantity}, {"method", method}, {"value", v}, {"stderr", s},
                                   {"abs_error", error_text(m.estimate.abs_error)}, {"samples", spec.samples}, {"seed", spec.seed}}});
  return doc;
}

Json cmd_ngon(const NgonArgs& a, const RunConfig& cfg) {
  static const std::vector<std::string> methods{"quadrature", "series", "mc", "u-mc", "conjecture"};
  if (std::find(methods.begin(), methods.end(), a.method) == methods.end()) throw DomainError("unknown method '" + a.method + "'");
  if (a.n < 3) throw DomainError("--n must be at least 3");
  std::string quantity = "V_D" + std::to_string(a.n);
  if (a.method == "conjecture") {
    SymbolicValue v = ngon_conjecture_volume(a.n);
    Json doc = symbolic_doc(quantity, v);
    doc["kind"] = "conjecture";
    doc["tag"] = "CONJECTURE";
    doc["plain"] = to_plain(v) + " [CONJECTURE]";
    doc["latex"] = to_latex(v) + " \\quad\\text{[CONJECTURE]}";
    doc["rows"][0]["tag"] = "CONJECTURE";
    return doc;
  }
  if (a.n <= 4) {
    Json doc = symbolic_doc(quantity, SymbolicValue(1));
    doc["method"] = "exact";
    return doc;
  }
  if (a.method == "quadrature") {
    QuadratureSpec spec = a.digits > 0 ? QuadratureSpec::for_digits(a.digits) : QuadratureSpec{};
    if (a.digits == 0) spec.precision_bits = std::max(spec.precision_bits, cfg.precision_bits);
    spec.workers = cfg.workers;
    if (a.max_refinements >= 0) spec.max_refinements = a.max_refinements;
    Json doc = numeric_doc(quantity, ngon_volume_quadrature(a.n, spec));
    doc["method"] = "quadrature";
    return doc;
  }
  if (a.method == "series") {
    Json doc = numeric_doc(quantity, ngon_volume_series(a.n, a.K));
    doc["method"] = "series";
    doc["K"] = a.K;
    return doc;
  }
  if (a.samples < 2) throw DomainError("--samples must be at least 2");
  if (a.streams < 1) throw DomainError("--streams must be at least 1");
  McSpec spec{static_cast<std::uint64_t>(a.samples), cfg.seed, a.streams};
  if (a.method == "mc") return mc_doc(quantity, ngon_volume_mc(a.n, spec, cfg.workers), spec, "mc");
  if (a.map != "uniform" && a.map != "smoothstep") throw DomainError("--map must be uniform or smoothstep");
  UCubeMap map = a.map == "uniform" ? UCubeMap::Uniform : UCubeMap::Smoothstep;
  Json doc = mc_doc(quantity, ngon_volume_u_mc(a.n, spec, cfg.workers, map), spec, "u-mc");
  doc["map"] = a.map;
  return doc;
}

struct SurfaceArgs {
  int genus = 0;
  int cuffs = 0;
  std::string crowns;
  std::string wp;
  std::string necks;
  std::string cuff_lengths;
  bool fixed = false;
};

Json cmd_surface(const SurfaceArgs& a, const RunConfig& cfg) {
  SurfaceSpec spec{a.genus, a.cuffs, a.crowns.empty() ? std::vector<int>{} : int_list(a.crowns)};
  spec.validate();
  WpPolynomial wp = load_wp_polynomial(load_json_file(a.wp));
  std::string quantity = "V_Sigma(g=" + std::to_string(a.genus) + ", m=" + std::to_string(a.cuffs) + ", crowns=[" + a.crowns + "])";
  if (a.necks.empty() && !a.fixed) {
    Json doc = symbolic_doc(quantity, surface_volume_free(spec, wp));
    doc["dimension"] = spec.dimension();
    return doc;
  }
  HyperbolicRational h = surface_volume_fixed(spec, wp);
  if (a.necks.empty()) {
    Json doc;
    doc["quantity"] = quantity;
    doc["kind"] = "function";
    doc["numerator"] = to_json(h.numerator);
    doc["plain"] = to_plain(h);
    doc["latex"] = to_latex(h);
    doc["rows"] = Json::array({Json{{"quantity", quantity}, {"plain", to_plain(h)}, {"latex", to_latex(h)}}});
    return doc;
  }
  auto necks = split_list(a.necks);
  if (necks.size() != spec.crowns.size()) throw DomainError("--necks needs one length per crown");
  std::vector<std::string> lengths = a.cuff_lengths.empty() ? std::vector<std::string>{} : split_list(a.cuff_lengths);
  if (static_cast<int>(lengths.size()) != a.cuffs) throw DomainError("--cuff-lengths needs one length per cuff");
  Assignments values;
  for (int i = 0; i < a.cuffs; ++i) {
    values.emplace(wp.vars[static_cast<std::size_t>(i)], nonnegative_decimal(lengths[static_cast<std::size_t>(i)], cfg.precision_bits, "cuff length"));
  }
  for (std::size_t k = 0; k < necks.size(); ++k) {
    values.emplace(wp.vars[static_cast<std::size_t>(a.cuffs) + k], nonnegative_decimal(necks[k], cfg.precision_bits, "neck length"));
  }
  return numeric_doc(quantity + " at necks (" + a.necks + ")", h.evaluate(values, cfg.precision_bits));
}

struct VerifyOutcome {
  Json doc;
  std::string first_failure;
};

VerifyOutcome cmd_verify(const std::string& suite, const RunConfig& cfg) {
  std::vector<int> ids = suite_criteria(suite);
  AcceptanceOptions opt{cfg.workers, cfg.seed};
  Json checks = Json::array();
  std::string plain, latex = "\\begin{tabular}{lll}\n";
  std::string first_failure;
  for (const auto& c : acceptance_criteria()) {
    if (std::find(ids.begin(), ids.end(), c.id) == ids.end()) continue;
    for (const auto& r : run_criterion(c, opt)) {
      Json entry = to_json(r);
      entry["criterion"] = r.criterion;
      entry["blocking"] = r.blocking;
      checks.push_back(entry);
      plain += r.status + "  [" + std::to_string(r.criterion) + "] " + r.check + ": got " + r.got + ", expected " + r.expected + "\n";
      latex += std::to_string(r.criterion) + " & " + r.check + " & " + r.status + " \\\\\n";
      if (!r.ok() && r.blocking && first_failure.empty()) first_failure = r.check;
    }
  }
  latex += "\\end{tabular}";
  bool pass = first_failure.empty();
  plain += std::string(pass ? "PASS" : "FAIL") + ": suite " + suite + ", " + std::to_string(checks.size()) + " checks";
  if (!pass) plain += ", first failing check: " + first_failure;
  Json doc;
  doc["suite"] = suite;
  doc["status"] = pass ? "PASS" : "FAIL";
  doc["checks"] = checks;
  doc["plain"] = plain;
  doc["latex"] = latex;
  doc["rows"] = checks;
  return {doc, first_failure};
}

struct RecognizeArgs {
  std::string value;
  int degree = -1;
  bool pi_only = false;
  bool no_zeta = false;
  bool no_log2 = false;
  bool beta = false;
  bool mix = false;
  int max_log2 = 1;
  long max_height = 10000;
};

Json cmd_recognize(const RecognizeArgs& a, const RunConfig& cfg) {
  if (a.degree < 0) throw DomainError("--degree must be nonnegative");
  if (a.max_height < 1) throw DomainError("--max-height must be positive");
  BasisFlags flags;
  if (a.pi_only) flags = BasisFlags::pi_power();
  if (a.no_zeta) flags.include_zeta = false;
  if (a.no_log2) flags.include_log2 = false;
  if (a.beta) flags.include_beta = true;
  if (a.mix) flags.mix_log2_zeta = true;
  if (!a.pi_only && !a.no_log2) flags.max_log2_exp = a.max_log2;
  std::string text = read_value_argument(a.value);
  PrecisionValue x = parse_value(text, cfg.precision_bits);
  MonomialBasis basis = enumerate_basis(a.degree, flags);
  RecognitionResult r = recognize_value(x, basis, a.max_height);
  Json entry;
  entry["target"] = decimal(x);
  entry["status"] = r.found() ? "FOUND" : "NOT FOUND";
  entry["value"] = r.found() ? to_plain(r.value) : "";
  entry["residual"] = r.found() ? error_text(r.residual.value) : "";
  entry["digits_used"] = available_digits(x);
  Json doc;
  doc["report"] = Json::array({entry});
  if (r.found()) doc["canonical"] = to_json(r.value);
  doc["basis"] = Json::array();
  for (const auto& m : basis.monomials) doc["basis"].push_back(detail::plain_monomial(m));
  if (!r.note.empty()) doc["note"] = r.note;
  doc["plain"] = r.found() ? to_plain(r.value) : "NOT FOUND";
  doc["latex"] = r.found() ? to_latex(r.value) : "\\text{NOT FOUND}";
  doc["rows"] = doc["report"];
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Volumes of moduli spaces of crowned hyperbolic surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  int precision = 128;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "latex", "csv", "plain"}));
  app.add_option("--precision", precision, "Working precision in bits")->envname("CROWNVOL_PRECISION")->check(CLI::Range(64, 100000));
  app.add_option("--workers", cfg.workers, "Worker threads (0 = all cores)")->envname("CROWNVOL_WORKERS");
  app.add_option("--seed", cfg.seed, "Random seed");

  int n = 0;
  std::string d;
  bool total = false;
  auto* crown = app.add_subcommand("crown", "Crown volume V_{A_n}(d)");
  crown->add_option("--n", n, "Number of crown cusps")->required();
  crown->add_option("--d", d, "Neck length (decimal)");
  crown->add_flag("--total", total, "Integrate over the neck length");

  int a1 = 0, a2 = 0;
  bool annulus_fixed = false;
  auto* annulus = app.add_subcommand("annulus", "Volume of the crowned annulus A_{a1,a2}");
  annulus->add_option("--a1", a1, "Cusps of the first crown")->required();
  annulus->add_option("--a2", a2, "Cusps of the second crown")->required();
  annulus->add_option("--d", d, "Fixed neck length (decimal)");
  annulus->add_flag("--fixed", annulus_fixed, "Show the fixed-neck volume as a function of d");

  NgonArgs ngon_args;
  auto* ngon = app.add_subcommand("ngon", "Volume of the moduli space of ideal n-gons");
  ngon->add_option("--n", ngon_args.n, "Number of vertices")->required();
  ngon->add_option("--method", ngon_args.method, "quadrature, series, mc, u-mc or conjecture");
  ngon->add_option("--digits", ngon_args.digits, "Quadrature target digits (default: 1e-8 absolute)");
  ngon->add_option("--max-refinements", ngon_args.max_refinements, "Quadrature refinement budget");
  ngon->add_option("--samples", ngon_args.samples, "Monte Carlo samples");
  ngon->add_option("--streams", ngon_args.streams, "Monte Carlo random streams");
  ngon->add_option("--K", ngon_args.K, "Series truncation");
  ngon->add_option("--map", ngon_args.map, "u-mc cube map: uniform or smoothstep");

  SurfaceArgs surface_args;
  auto* surface = app.add_subcommand("surface", "Volume of a surface with cuffs and crowns");
  surface->add_option("--genus", surface_args.genus, "Genus")->required();
  surface->add_option("--cuffs", surface_args.cuffs, "Number of geodesic boundaries");
  surface->add_option("--crowns", surface_args.crowns, "Crown cusp counts, comma separated");
  surface->add_option("--wp", surface_args.wp, "Weil-Petersson polynomial JSON file")->required();
  surface->add_option("--necks", surface_args.necks, "Fixed neck lengths, comma separated");
  surface->add_option("--cuff-lengths", surface_args.cuff_lengths, "Cuff lengths for numeric evaluation");
  surface->add_flag("--fixed", surface_args.fixed, "Show the fixed-neck volume as a function");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "paper-tables, oracles, conjectures or all")
      ->check(CLI::IsMember({"paper-tables", "oracles", "conjectures", "all"}));

  RecognizeArgs rec;
  auto* recognize = app.add_subcommand("recognize", "Recognize a decimal as a rational combination of constants");
  recognize->add_option("--value", rec.value, "Decimal, 'x ± e', JSON estimate, @file or @- for stdin")->required();
  recognize->add_option("--degree", rec.degree, "Homogeneous degree of the basis")->required();
  recognize->add_flag("--pi-only", rec.pi_only, "Basis is pi^degree only");
  recognize->add_flag("--no-zeta", rec.no_zeta, "Exclude zeta values");
  recognize->add_flag("--no-log2", rec.no_log2, "Exclude log 2");
  recognize->add_flag("--beta", rec.beta, "Include Dirichlet beta values");
  recognize->add_flag("--mix-log2-zeta", rec.mix, "Allow log 2 and zeta in one monomial");
  recognize->add_option("--max-log2", rec.max_log2, "Highest power of log 2");
  recognize->add_option("--max-height", rec.max_height, "Largest allowed relation coefficient");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  cfg.precision_bits = static_cast<Bits>(precision);

  try {
    Json doc;
    int status = 0;
    if (*crown) {
      doc = cmd_crown(n, d, total, cfg);
    } else if (*annulus) {
      doc = cmd_annulus(a1, a2, d, annulus_fixed, cfg);
    } else if (*ngon) {
      doc = cmd_ngon(ngon_args, cfg);
    } else if (*surface) {
      doc = cmd_surface(surface_args, cfg);
    } else if (*verify) {
      VerifyOutcome out = cmd_verify(suite, cfg);
      doc = std::move(out.doc);
      if (!out.first_failure.empty()) {
        std::cerr << "verify failed: first failing check: " << out.first_failure << "\n";
        status = 1;
      }
    } else if (*recognize) {
      doc = cmd_recognize(rec, cfg);
    }
    std::cout << render(doc, cfg.format);
    return status;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.pointer().empty()) std::cerr << "pointer: " << e.pointer() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return 3;
  } catch (const InsufficientPrecision& e) {
    std::cerr << "insufficient precision: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
