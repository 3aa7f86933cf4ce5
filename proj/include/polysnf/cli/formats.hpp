#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "polysnf/algebra/parse.hpp"
#include "polysnf/automorphism/tame.hpp"
#include "polysnf/error.hpp"
#include "polysnf/harness/generators.hpp"
#include "polysnf/harness/suite.hpp"
#include "polysnf/polymatrix/poly_matrix.hpp"

namespace polysnf::cli {

// std::map backed, so dumps come out with sorted keys
using Json = nlohmann::json;

inline Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path + ": invalid JSON: " + e.what());
  }
}

inline void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot open file for writing");
  out << j.dump(2) << "\n";
}

inline const Json& require(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

inline std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

inline std::uint64_t as_uint(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<long long>() < 0))
    throw InputError(where + ": expected a non-negative integer");
  return j.get<std::uint64_t>();
}

template <class T>
T uint_or(const Json& j, const std::string& key, T fallback, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  return static_cast<T>(as_uint(*it, where + "." + key));
}

inline Field load_field(const Json& j, const std::string& where) {
  std::string f = as_string(require(j, "field", where), where + ".field");
  if (f == "Q") return Field::rationals();
  if (f != "Fp") throw InputError(where + ".field: expected \"Q\" or \"Fp\", got \"" + f + "\"");
  std::uint64_t p = as_uint(require(j, "p", where), where + ".p");
  try {
    return Field::prime(Integer(static_cast<unsigned long>(p)));
  } catch (const InputError& e) {
    throw InputError(where + ".p: " + e.what());
  }
}

inline Json field_json(const Field& f) {
  Json j;
  j["field"] = f.is_rationals() ? "Q" : "Fp";
  if (f.is_prime_field()) j["p"] = f.characteristic().get_ui();
  return j;
}

inline RingPtr load_ring(const Json& j, const std::string& where) {
  Field field = load_field(j, where);
  const Json& vars = require(j, "vars", where);
  if (!vars.is_array()) throw InputError(where + ".vars: expected an array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i) names.push_back(as_string(vars[i], where + ".vars[" + std::to_string(i) + "]"));
  try {
    return make_ring(field, names);
  } catch (const InputError& e) {
    throw InputError(where + ".vars: " + e.what());
  }
}

inline Json ring_json(const RingPtr& ring) {
  Json j = field_json(ring->field());
  j["vars"] = ring->names();
  return j;
}

inline Polynomial load_poly(const Json& j, const RingPtr& ring, const std::string& where) {
  std::string text = as_string(j, where);
  try {
    return parse_poly(text, ring);
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what());
  }
}

inline std::vector<Polynomial> load_polys(const Json& j, const RingPtr& ring, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of polynomial strings");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(load_poly(j[i], ring, where + "[" + std::to_string(i) + "]"));
  return out;
}

inline Json polys_json(const std::vector<Polynomial>& ps) {
  Json j = Json::array();
  for (const auto& p : ps) j.push_back(p.to_string());
  return j;
}

inline Json rows_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

inline PolyMatrix load_rows(const Json& j, const RingPtr& ring, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a non-empty array of rows");
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string rw = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].empty()) throw InputError(rw + ": expected a non-empty array of polynomial strings");
    if (j[i].size() != j[0].size()) throw InputError(rw + ": row length differs from row 0");
    rows.push_back(load_polys(j[i], ring, rw));
  }
  return PolyMatrix::from_rows(ring, rows);
}

/// {field, p?, vars, rows}
inline PolyMatrix load_matrix(const Json& j, const std::string& where) {
  RingPtr ring = load_ring(j, where);
  return load_rows(require(j, "rows", where), ring, where + ".rows");
}

inline Json matrix_json(const PolyMatrix& m) {
  Json j = ring_json(m.ring());
  j["rows"] = rows_json(m);
  return j;
}

inline Rational load_rational(const Json& j, const RingPtr& ring, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  try {
    return parse_constant(as_string(j, where), ring);
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what());
  }
}

inline std::vector<Rational> load_rationals(const Json& j, const RingPtr& ring, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw InputError(where + ": expected an array of " + std::to_string(n) + " rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(load_rational(j[i], ring, where + "[" + std::to_string(i) + "]"));
  return out;
}

inline Json rationals_json(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const auto& r : v) j.push_back(r.get_str());
  return j;
}

inline TameStep load_step(const Json& j, const RingPtr& ring, const std::string& where) {
  const std::size_t n = ring->num_vars();
  std::string type = as_string(require(j, "type", where), where + ".type");
  if (type == "affine") {
    AffineStep s;
    const Json& m = require(j, "matrix", where);
    if (!m.is_array() || m.size() != n) throw InputError(where + ".matrix: expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) s.matrix.push_back(load_rationals(m[i], ring, n, where + ".matrix[" + std::to_string(i) + "]"));
    s.shift = j.contains("shift") ? load_rationals(j["shift"], ring, n, where + ".shift") : std::vector<Rational>(n, Rational(0));
    return s;
  }
  if (type == "dejonquieres") {
    TriangularStep s;
    s.scale = load_rationals(require(j, "a", where), ring, n, where + ".a");
    s.b1 = j.contains("b1") ? load_rational(j["b1"], ring, where + ".b1") : Rational(0);
    const Json& q = require(j, "q", where);
    if (!q.is_array() || q.size() != n) throw InputError(where + ".q: expected " + std::to_string(n) + " polynomial strings");
    s.q = load_polys(q, ring, where + ".q");
    return s;
  }
  throw InputError(where + ".type: expected \"affine\" or \"dejonquieres\", got \"" + type + "\"");
}

inline Json step_json(const TameStep& step) {
  Json j;
  if (const auto* a = std::get_if<AffineStep>(&step)) {
    j["type"] = "affine";
    j["matrix"] = Json::array();
    for (const auto& row : a->matrix) j["matrix"].push_back(rationals_json(row));
    j["shift"] = rationals_json(a->shift);
  } else {
    const auto& t = std::get<TriangularStep>(step);
    j["type"] = "dejonquieres";
    j["a"] = rationals_json(t.scale);
    j["b1"] = t.b1.get_str();
    j["q"] = polys_json(t.q);
  }
  return j;
}

/// {vars?, steps: [...]}. Without vars the ring is `fallback`, or x1..xn
/// sized by the first step when there is no fallback either.
inline TameAut load_aut(const Json& j, const RingPtr& fallback, const std::string& where) {
  const Json& steps = require(j, "steps", where);
  if (!steps.is_array()) throw InputError(where + ".steps: expected an array");
  RingPtr ring = fallback;
  if (j.contains("vars")) {
    Json with_field = j;
    with_field["field"] = "Q";
    ring = load_ring(with_field, where);
    if (fallback && !same_ring(ring, fallback))
      throw InputError(where + ".vars: automorphism ring does not match the matrix ring");
  } else if (!ring) {
    std::size_t n = 0;
    if (!steps.empty()) {
      const Json& s = steps[0];
      const char* key = s.contains("matrix") ? "matrix" : "a";
      if (s.contains(key) && s[key].is_array()) n = s[key].size();
    }
    if (n == 0) throw InputError(where + ": cannot infer the variable count; add \"vars\"");
    ring = make_standard_ring(Field::rationals(), n);
  }
  std::vector<TameStep> out;
  for (std::size_t i = 0; i < steps.size(); ++i) out.push_back(load_step(steps[i], ring, where + ".steps[" + std::to_string(i) + "]"));
  try {
    return TameAut(ring, out);
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

inline Json aut_json(const TameAut& psi) {
  Json j;
  j["vars"] = psi.ring()->names();
  j["steps"] = Json::array();
  for (const auto& s : psi.steps()) j["steps"].push_back(step_json(s));
  j["images"] = polys_json(psi.images());
  return j;
}

struct GenRequest {
  harness::GenSpec spec;
  bool negative = false;
  harness::NegativeOptions negative_options;
  std::optional<harness::SnfRecipe> recipe;
};

inline harness::Padding load_padding(const std::string& s, const std::string& where) {
  if (s == "none") return harness::Padding::None;
  if (s == "zero") return harness::Padding::Zero;
  if (s == "scaled") return harness::Padding::Scaled;
  if (s == "identity") return harness::Padding::Identity;
  throw InputError(where + ": expected none, zero, scaled or identity");
}

/// {seed, n, l, m, elem_steps, degree_cap, field?, p?, kind?, padding?, pad?, conjugate?, recipe?}
inline GenRequest load_gen_request(const Json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  GenRequest r;
  auto& s = r.spec;
  s.seed = uint_or(j, "seed", s.seed, where);
  s.n = uint_or(j, "n", s.n, where);
  s.l = uint_or(j, "l", s.l, where);
  s.m = uint_or(j, "m", s.m, where);
  s.elem_steps = uint_or(j, "elem_steps", s.elem_steps, where);
  s.degree_cap = uint_or(j, "degree_cap", s.degree_cap, where);
  if (j.contains("field")) s.field = load_field(j, where);
  try {
    s.validate();
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  std::string kind = j.contains("kind") ? as_string(j["kind"], where + ".kind") : "equivalent";
  if (kind == "negative") {
    r.negative = true;
    if (j.contains("padding")) r.negative_options.padding = load_padding(as_string(j["padding"], where + ".padding"), where + ".padding");
    r.negative_options.pad = uint_or(j, "pad", std::size_t{0}, where);
    if (j.contains("conjugate")) {
      if (!j["conjugate"].is_boolean()) throw InputError(where + ".conjugate: expected a boolean");
      r.negative_options.conjugate = j["conjugate"].get<bool>();
    }
  } else if (kind != "equivalent") {
    throw InputError(where + ".kind: expected \"equivalent\" or \"negative\"");
  }
  if (j.contains("recipe")) {
    harness::SnfRecipe recipe{load_polys(j["recipe"], s.ring(), where + ".recipe")};
    try {
      recipe.validate();
    } catch (const InputError& e) {
      throw InputError(where + ".recipe: " + e.what());
    }
    r.recipe = recipe;
  }
  return r;
}

/// {seed?, scale?, threads?, cases?: {name: count}, only?: [names], inject_gcd_fault?}
inline harness::SuiteConfig load_suite_config(const Json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  harness::SuiteConfig c;
  c.seed = uint_or(j, "seed", c.seed, where);
  c.threads = uint_or(j, "threads", c.threads, where);
  if (j.contains("scale")) {
    if (!j["scale"].is_number() || j["scale"].get<double>() < 0) throw InputError(where + ".scale: expected a non-negative number");
    c.scale = j["scale"].get<double>();
  }
  if (j.contains("cases")) {
    if (!j["cases"].is_object()) throw InputError(where + ".cases: expected an object");
    for (const auto& [name, count] : j["cases"].items()) c.cases[name] = as_uint(count, where + ".cases." + name);
  }
  if (j.contains("only")) {
    if (!j["only"].is_array()) throw InputError(where + ".only: expected an array");
    for (std::size_t i = 0; i < j["only"].size(); ++i) c.only.push_back(as_string(j["only"][i], where + ".only[" + std::to_string(i) + "]"));
  }
  if (j.contains("inject_gcd_fault")) {
    if (!j["inject_gcd_fault"].is_boolean()) throw InputError(where + ".inject_gcd_fault: expected a boolean");
    c.inject_gcd_fault = j["inject_gcd_fault"].get<bool>();
  }
  return c;
}

inline Json report_json(const harness::SuiteReport& report) {
  Json out = Json::array();
  for (const auto& p : report.properties) {
    Json failures = Json::array();
    for (const auto& f : p.failures) failures.push_back({{"seed", f.seed}, {"detail", f.detail}});
    out.push_back({{"property", p.property}, {"cases", p.cases}, {"failures", failures}});
  }
  return out;
}

}  // namespace polysnf::cli
