#include "ttperm/io/serialization.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

#include "ttperm/error.hpp"

namespace ttperm {
namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

int parse_degree(const std::string& key) {
  try {
    std::size_t used = 0;
    const int d = std::stoi(key, &used);
    if (used != key.size()) throw ParseError("bad degree key '" + key + "'");
    return d;
  } catch (const std::logic_error&) {
    throw ParseError("bad degree key '" + key + "'");
  }
}

template <class T>
T get_natural(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(std::string(what) + " must be a natural number");
  return v.get<T>();
}

// degree -> json array, for an object keyed by decimal degrees
std::map<int, json> degree_map(const json& obj, const char* what) {
  if (!obj.is_object()) throw ParseError(std::string(what) + " must be an object keyed by degree");
  std::map<int, json> out;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!it.value().is_array()) throw ParseError(std::string(what) + " entries must be arrays");
    out[parse_degree(it.key())] = it.value();
  }
  return out;
}

json points_json(const std::vector<std::string>& labels) { return json(labels); }

json subset_json(const WBarSubset& s) {
  std::vector<std::string> labels;
  for (const auto& x : s.exceptional()) labels.push_back(x.label());
  return {{"mode", s.is_cofinite() ? "cofinite" : "finite"}, {"points", labels}};
}

}  // namespace

std::string complex_to_json(const PermComplex& c, int indent) {
  json doc;
  doc["p"] = c.group().p;
  doc["n"] = c.group().n;
  doc["modules"] = json::object();
  doc["differentials"] = json::object();
  for (int d = c.lo(); !c.is_zero() && d <= c.hi(); ++d) {
    doc["modules"][std::to_string(d)] = c.module(d).orbits;
    if (d > c.lo()) doc["differentials"][std::to_string(d)] = c.differential(d).data();
  }
  return doc.dump(indent);
}

PermComplex complex_from_json(const std::string& text) {
  const json doc = parse_json(text);
  const auto p = get_natural<std::uint32_t>(require(doc, "p"), "p");
  const auto n = get_natural<unsigned>(require(doc, "n"), "n");
  if (!is_prime(p)) throw ParseError("p = " + std::to_string(p) + " is not prime");
  if (n > 20) throw ParseError("n too large");
  const CyclicGroup g(p, n);
  const auto mods = degree_map(require(doc, "modules"), "modules");
  const auto diffs = doc.contains("differentials") ? degree_map(doc.at("differentials"), "differentials")
                                                   : std::map<int, json>{};
  if (mods.empty()) {
    if (!diffs.empty()) throw ParseError("differentials given without modules");
    return PermComplex(g);
  }
  const int lo = mods.begin()->first, hi = mods.rbegin()->first;
  std::vector<PermModule> modules;
  for (int d = lo; d <= hi; ++d) {
    std::vector<unsigned> orbits;
    if (auto it = mods.find(d); it != mods.end())
      for (const auto& s : it->second) {
        const auto e = get_natural<unsigned>(s, "stabilizer exponent");
        if (e > n) throw ParseError("stabilizer exponent " + std::to_string(e) + " exceeds n");
        orbits.push_back(e);
      }
    modules.emplace_back(g, std::move(orbits));
  }
  for (const auto& [d, arr] : diffs)
    if (d <= lo || d > hi) throw ParseError("differential in degree " + std::to_string(d) + " out of range");
  std::vector<MatrixFp> matrices;
  for (int d = lo + 1; d <= hi; ++d) {
    const std::size_t rows = modules[d - 1 - lo].dim(), cols = modules[d - lo].dim();
    std::vector<std::int64_t> entries(rows * cols, 0);
    if (auto it = diffs.find(d); it != diffs.end()) {
      if (it->second.size() != rows * cols)
        throw ParseError("differential " + std::to_string(d) + " needs " + std::to_string(rows * cols) +
                         " entries, got " + std::to_string(it->second.size()));
      for (std::size_t k = 0; k < entries.size(); ++k) {
        if (!it->second[k].is_number_integer()) throw ParseError("differential entries must be integers");
        entries[k] = it->second[k].get<std::int64_t>();
      }
    }
    matrices.push_back(MatrixFp::from_entries(p, rows, cols, entries));
  }
  return PermComplex(g, lo, std::move(modules), std::move(matrices));
}

std::string integral_complex_to_json(const IntegralPermComplex& t, int indent) {
  json doc;
  doc["ring"] = "Z";
  doc["order"] = t.order();
  doc["modules"] = json::object();
  doc["differentials"] = json::object();
  for (int d = t.lo(); !t.is_zero() && d <= t.hi(); ++d) {
    doc["modules"][std::to_string(d)] = t.stabilizers(d);
    if (d > t.lo()) {
      json entries = json::array();
      const MatrixZ m = t.differential(d);
      for (const auto& e : m.data()) {
        if (e.fits_slong_p()) entries.push_back(e.get_si());
        else entries.push_back(e.get_str());
      }
      doc["differentials"][std::to_string(d)] = entries;
    }
  }
  return doc.dump(indent);
}

IntegralPermComplex integral_complex_from_json(const std::string& text) {
  const json doc = parse_json(text);
  if (doc.contains("ring") && doc.at("ring") != "Z") throw ParseError("ring must be \"Z\"");
  const auto order = get_natural<std::uint64_t>(require(doc, "order"), "order");
  if (order == 0) throw ParseError("order must be positive");
  const auto mods = degree_map(require(doc, "modules"), "modules");
  const auto diffs = doc.contains("differentials") ? degree_map(doc.at("differentials"), "differentials")
                                                   : std::map<int, json>{};
  if (mods.empty()) return IntegralPermComplex(order);
  const int lo = mods.begin()->first, hi = mods.rbegin()->first;
  std::vector<std::vector<std::uint64_t>> stabs;
  std::vector<std::size_t> dims;
  for (int d = lo; d <= hi; ++d) {
    std::vector<std::uint64_t> s;
    std::size_t dim = 0;
    if (auto it = mods.find(d); it != mods.end())
      for (const auto& v : it->second) {
        const auto st = get_natural<std::uint64_t>(v, "stabilizer order");
        if (st == 0 || order % st != 0) throw ParseError("stabilizer order must divide the group order");
        s.push_back(st);
        dim += order / st;
      }
    stabs.push_back(std::move(s));
    dims.push_back(dim);
  }
  for (const auto& [d, arr] : diffs)
    if (d <= lo || d > hi) throw ParseError("differential in degree " + std::to_string(d) + " out of range");
  std::vector<MatrixZ> matrices;
  for (int d = lo + 1; d <= hi; ++d) {
    const std::size_t rows = dims[d - 1 - lo], cols = dims[d - lo];
    std::vector<Integer> entries(rows * cols, 0);
    if (auto it = diffs.find(d); it != diffs.end()) {
      if (it->second.size() != rows * cols)
        throw ParseError("differential " + std::to_string(d) + " has the wrong number of entries");
      for (std::size_t k = 0; k < entries.size(); ++k) {
        const json& e = it->second[k];
        if (e.is_number_integer()) {
          entries[k] = Integer(static_cast<long>(e.get<std::int64_t>()));
        } else if (e.is_string()) {
          if (entries[k].set_str(e.get<std::string>(), 10) != 0) throw ParseError("bad integer entry");
        } else {
          throw ParseError("differential entries must be integers");
        }
      }
    }
    matrices.push_back(MatrixZ::from_entries(rows, cols, std::move(entries)));
  }
  return IntegralPermComplex(order, lo, std::move(stabs), std::move(matrices));
}

std::string support_to_json(const SupportSet& s) {
  std::vector<std::string> labels;
  for (const auto& x : s.points()) labels.push_back(x.label());
  return json{{"level", s.level()}, {"points", points_json(labels)}}.dump();
}

std::string subset_to_json(const WBarSubset& s) { return subset_json(s).dump(); }

WBarSubset subset_from_json(const std::string& text) {
  const json doc = parse_json(text);
  const json& mode = require(doc, "mode");
  const json& pts = require(doc, "points");
  if (!pts.is_array()) throw ParseError("points must be an array");
  std::vector<WBarPoint> points;
  for (const auto& v : pts) {
    if (!v.is_string()) throw ParseError("points must be labels");
    auto x = parse_wbar_point(v.get<std::string>());
    if (!x) throw ParseError("bad point label '" + v.get<std::string>() + "'");
    points.push_back(*x);
  }
  if (mode == "finite") return WBarSubset::finite(std::move(points));
  if (mode == "cofinite") return WBarSubset::cofinite(std::move(points));
  throw ParseError("mode must be \"finite\" or \"cofinite\"");
}

std::string integral_support_to_json(const IntegralSupport& s) {
  json fibers = json::object();
  for (const auto& [q, f] : s.fibers) fibers[std::to_string(q)] = subset_json(f);
  return json{{"generic", s.contains_generic},
              {"default", s.default_full ? "full" : "empty"},
              {"fibers", fibers}}
      .dump();
}

namespace {

void dot_body(std::ostringstream& os, unsigned level) {
  for (const auto& x : points_of_level(level)) os << "  " << x.label() << ";\n";
  for (unsigned j = 1; j <= level; ++j)
    os << "  p" << j << " -> m" << j - 1 << ";\n  p" << j << " -> m" << j << ";\n";
}

}  // namespace

std::string spectrum_dot(unsigned level) {
  std::ostringstream os;
  os << "digraph W" << level << " {\n";
  dot_body(os, level);
  os << "}\n";
  return os.str();
}

std::string procyclic_dot(unsigned depth) {
  std::ostringstream os;
  os << "digraph Wbar {\n";
  dot_body(os, depth);
  os << "  minf [label=\"m∞\"];\n}\n";
  return os.str();
}

}  // namespace ttperm
