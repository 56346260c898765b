#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "ttperm/ttperm.hpp"

namespace ttperm::cli {
namespace {

using nlohmann::json;

struct Options {
  std::uint32_t p = 2;
  unsigned level = 0;
  bool level_given = false;
  bool procyclic = false;
  unsigned depth = 3;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string expr;
  std::string file;
  std::string coeff = "p";
  std::uint64_t field_q = 2;
  unsigned subgroup = 0;
  bool subgroup_given = false;
  std::string subset;
  bool list = false;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

std::string class_tag(const WBarSubset& s) {
  if (is_closed(s)) return s.is_finite() ? "I" : "II";
  if (is_thomason(s)) return "Thomason, not closed";
  return "not closed";
}

// finite:m0,p1 | cofinite:minf | all | empty | a JSON subset document
WBarSubset parse_subset(const std::string& text) {
  if (!text.empty() && text.front() == '{') return subset_from_json(text);
  if (text == "all") return WBarSubset::everything();
  if (text == "empty") return WBarSubset::empty_set();
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("subset must look like finite:m0,p1 or cofinite:minf");
  const std::string mode = text.substr(0, colon);
  std::vector<WBarPoint> points;
  std::stringstream rest(text.substr(colon + 1));
  for (std::string label; std::getline(rest, label, ',');) {
    if (label.empty()) continue;
    auto x = parse_wbar_point(label);
    if (!x) throw ParseError("bad point label '" + label + "'");
    points.push_back(*x);
  }
  if (mode == "finite") return WBarSubset::finite(std::move(points));
  if (mode == "cofinite") return WBarSubset::cofinite(std::move(points));
  throw ParseError("subset mode must be finite or cofinite");
}

json labels(const std::vector<WPoint>& pts) {
  json a = json::array();
  for (const auto& x : pts) a.push_back(x.label());
  return a;
}

void emit_spectrum(const Options& o, std::ostream& out) {
  if (!is_prime(o.p)) throw InvalidArgument("--p must be prime");
  const unsigned n = o.procyclic ? o.depth : o.level;
  if (o.format == "dot") {
    out << (o.procyclic ? procyclic_dot(n) : spectrum_dot(n));
    return;
  }
  const auto pts = points_of_level(n);
  if (o.format == "json") {
    json edges = json::array();
    for (unsigned j = 1; j <= n; ++j) {
      edges.push_back({"p" + std::to_string(j), "m" + std::to_string(j - 1)});
      edges.push_back({"p" + std::to_string(j), "m" + std::to_string(j)});
    }
    json nodes = labels(pts);
    if (o.procyclic) nodes.push_back("minf");
    out << json{{"p", o.p}, {"procyclic", o.procyclic}, {"points", nodes}, {"edges", edges}}.dump() << "\n";
    return;
  }
  if (o.procyclic)
    out << "W-bar (p=" << o.p << "), shown through level " << n << " plus minf\n";
  else
    out << "W^" << n << " (p=" << o.p << "): " << pts.size() << " points\n";
  for (const auto& x : pts) {
    out << "  " << x.label();
    if (x.kind == PointKind::P) out << "  specializes to m" << x.index - 1 << ", m" << x.index;
    out << "\n";
  }
  if (o.procyclic) out << "  minf  closed, isolated in the specialization order\n";
}

void emit_subset(const Options& o, const WBarSubset& s, const std::string& extra, std::ostream& out) {
  if (o.format == "json") {
    json j = json::parse(subset_to_json(s));
    j["class"] = class_tag(s);
    if (!extra.empty()) j["level_support"] = json::parse(extra);
    out << j.dump() << "\n";
    return;
  }
  out << s.to_string() << "  class " << class_tag(s) << "\n";
}

void cmd_support(const Options& o, std::ostream& out) {
  if (!o.expr.empty() == !o.file.empty()) throw InvalidArgument("support needs exactly one of --expr, --file");
  if (!o.expr.empty()) {
    const GeneratorExpr g = parse_generator_expr(o.expr);
    const WBarSubset sym = support_of_generators(g);
    if (!o.level_given) {
      emit_subset(o, sym, "", out);
      return;
    }
    if (!is_prime(o.p)) throw InvalidArgument("--p must be prime");
    const SupportSet s = realized_support(g, o.p, o.level);
    if (!(s == project_subset(sym, o.level)))
      throw InvariantViolation("realized support " + s.to_string() + " differs from the symbolic one");
    if (o.format == "json") emit_subset(o, sym, support_to_json(s), out);
    else out << s.to_string() << "  (level " << o.level << ", p=" << o.p << "; symbolic " << sym.to_string()
             << ", class " << class_tag(sym) << ")\n";
    return;
  }
  const std::string text = read_input(o.file);
  if (o.coeff == "Z") {
    const auto t = integral_complex_from_json(text);
    const auto s = integral_support(t);
    const auto type = classify_support_type(s);
    if (o.format == "json") {
      json j = json::parse(integral_support_to_json(s));
      j["type"] = to_string(type);
      out << j.dump() << "\n";
    } else {
      out << s.to_string() << "  type " << to_string(type) << "\n";
    }
    return;
  }
  const PermComplex c = complex_from_json(text);
  const SupportSet s = support(c);
  const WBarSubset pre = preimage(s);
  if (o.format == "json") emit_subset(o, pre, support_to_json(s), out);
  else out << s.to_string() << "  (level " << c.group().n << "; preimage class " << class_tag(pre) << ")\n";
}

void cmd_ideals(const Options& o, std::ostream& out) {
  if (!o.subset.empty()) {
    const WBarSubset s = parse_subset(o.subset);
    const auto gens = generators_of_thomason(s);
    if (o.format == "json") {
      json fin = json::array();
      for (const auto& g : gens.finite) fin.push_back(g.to_string());
      json j{{"subset", json::parse(subset_to_json(s))}, {"generators", fin}};
      if (gens.tail) j["family"] = {{"perm", gens.tail->perm}, {"kos_from", gens.tail->kos_from}};
      out << j.dump() << "\n";
    } else {
      out << s.to_string() << " = supp of " << gens.to_string() << "\n";
    }
    return;
  }
  const std::uint64_t count = count_thick_ideals(o.level);
  if (o.format == "json" && !o.list) {
    out << json{{"level", o.level}, {"thick_ideals", count}}.dump() << "\n";
    return;
  }
  if (!o.list) {
    out << "thick tensor-ideals at level " << o.level << ": " << count << "\n";
    return;
  }
  if (o.level > 9) throw SizeLimitExceeded("--list supports levels up to 9");
  const std::size_t k = 2 * o.level + 1;
  json arr = json::array();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<bool> bits(k);
    for (std::size_t b = 0; b < k; ++b) bits[b] = mask >> b & 1;
    const auto s = SupportSet::from_bits(o.level, bits);
    if (!s.is_specialization_closed()) continue;
    const auto gens = generators_of_thomason(WBarSubset::finite([&] {
      std::vector<WBarPoint> pts;
      for (const auto& x : s.points()) pts.push_back(WBarPoint{x.kind, x.index});
      return pts;
    }()));
    if (o.format == "json") arr.push_back({{"support", labels(s.points())}, {"generators", gens.to_string()}});
    else out << s.to_string() << "  " << gens.to_string() << "\n";
  }
  if (o.format == "json") out << json{{"level", o.level}, {"thick_ideals", count}, {"ideals", arr}}.dump() << "\n";
  else out << count << " thick tensor-ideals\n";
}

void cmd_koszul(const Options& o, std::ostream& out) {
  const CyclicGroup g(o.p, o.level);
  const Subgroup k{o.subgroup_given ? o.subgroup : 0};
  require_subgroup(g, k, "koszul");
  if (o.format == "json") {
    out << complex_to_json(koszul(g, k)) << "\n";
    return;
  }
  out << "s_K^G for G = " << g.to_string() << ", K = C_" << o.p << "^" << k.s << "\n";
  try {
    const PermComplex c = koszul(g, k);
    out << c.to_string() << "\n";
    std::size_t h = 0;
    for (auto [d, x] : homology(underlying(c))) h += x;
    out << "underlying homology dimension: " << h << "\n";
  } catch (const SizeLimitExceeded& e) {
    out << "(dense complex not built: " << e.what() << ")\n";
  }
  out << "support: " << koszul_support(g, k).to_string() << "\n";
}

void cmd_motives(const Options& o, std::ostream& out) {
  const GaloisDatum field(o.field_q);
  if (o.coeff == "Z") {
    if (o.file.empty()) {
      out << "integral spectrum over F_" << field.q
          << ": generic point plus a copy of W-bar over each prime; give --file for a support\n";
      return;
    }
    const auto t = integral_complex_from_json(read_input(o.file));
    const auto s = integral_support(t);
    const auto type = classify_support_type(s);
    if (o.format == "json") {
      json j = json::parse(integral_support_to_json(s));
      j["type"] = to_string(type);
      out << j.dump() << "\n";
    } else {
      out << s.to_string() << "  type " << to_string(type) << "\n";
    }
    return;
  }
  const std::uint64_t ch = o.coeff == "0" ? 0 : o.p;
  const auto spec = spectrum_of_dam(field, ch);
  if (o.format == "json") {
    out << json{{"field", field.q}, {"coefficient_characteristic", ch}, {"spectrum", spec.to_string()}}.dump()
        << "\n";
    return;
  }
  out << "Spc of Artin motives over F_" << field.q << " with coefficients of characteristic " << ch << ": "
      << (spec.single_point ? "a single point" : "W-bar for p = " + std::to_string(ch)) << "\n";
  if (!spec.single_point) {
    Options sub = o;
    sub.procyclic = true;
    emit_spectrum(sub, out);
  }
}

void cmd_random(const Options& o, std::ostream& out) {
  std::mt19937_64 rng(o.seed);
  const PermComplex c = random_complex(CyclicGroup(o.p, o.level), rng);
  out << complex_to_json(c) << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Tensor-triangular geometry of permutation modules over cyclic p-groups", "ttperm"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json", "dot"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "prime")->capture_default_str();
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
  };
  auto add_level = [&](CLI::App* sub) {
    sub->add_option_function<unsigned>(
        "--level", [&](const unsigned& v) { o.level = v; o.level_given = true; }, "level n of C_{p^n}");
  };

  auto* spectrum = app.add_subcommand("spectrum", "emit W^n, or W-bar with --procyclic");
  add_common(spectrum);
  add_level(spectrum);
  spectrum->add_flag("--procyclic", o.procyclic, "the spectrum over Z_p");
  spectrum->add_option("--depth", o.depth, "rendering depth for --procyclic")->capture_default_str();

  auto* supp = app.add_subcommand("support", "support of a complex document or generator expression");
  add_common(supp);
  add_level(supp);
  supp->add_option("--expr", o.expr, "generator expression, e.g. tensor(perm(1),kos(2))");
  supp->add_option("--file", o.file, "complex document (JSON), '-' for stdin");
  supp->add_option("--coeff", o.coeff, "coefficients of the document: p or Z")
      ->check(CLI::IsMember({"p", "Z"}))
      ->capture_default_str();

  auto* ideals = app.add_subcommand("ideals", "count thick tensor-ideals or give generators");
  add_common(ideals);
  add_level(ideals);
  ideals->add_flag("--list", o.list, "list every ideal at the level with generators");
  ideals->add_option("--subset", o.subset, "Thomason subset: finite:m0,p1,m1 | cofinite:minf | JSON");

  auto* kos = app.add_subcommand("koszul", "build a Koszul object");
  add_common(kos);
  add_level(kos);
  kos->add_option_function<unsigned>(
      "--subgroup", [&](const unsigned& v) { o.subgroup = v; o.subgroup_given = true; },
      "order exponent s of K = C_{p^s} (default 0)");

  auto* mot = app.add_subcommand("motives", "spectra of Artin motives over F_q");
  add_common(mot);
  mot->add_option("--field-q", o.field_q, "size q of the base field")->capture_default_str();
  mot->add_option("--coeff", o.coeff, "coefficients: 0, p or Z")
      ->check(CLI::IsMember({"0", "p", "Z"}))
      ->capture_default_str();
  mot->add_option("--file", o.file, "integral complex document for --coeff Z");

  auto* rnd = app.add_subcommand("random", "emit a seeded random complex document");
  add_common(rnd);
  add_level(rnd);
  rnd->add_option("--seed", o.seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*spectrum) emit_spectrum(o, out);
    else if (*supp) cmd_support(o, out);
    else if (*ideals) cmd_ideals(o, out);
    else if (*kos) cmd_koszul(o, out);
    else if (*mot) cmd_motives(o, out);
    else if (*rnd) cmd_random(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const SizeLimitExceeded& e) {
    err << "size limit: " << e.what() << "\n";
    return kSizeLimit;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace ttperm::cli
