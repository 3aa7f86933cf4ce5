#pragma once

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polysnf/cli/formats.hpp"
#include "polysnf/groebner/groebner.hpp"
#include "polysnf/smith/automorphic.hpp"
#include "polysnf/smith/decide.hpp"
#include "polysnf/smith/recognize.hpp"
#include "polysnf/smith/smith.hpp"

namespace polysnf::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kInput = 2, kCap = 3 };

namespace text {

inline std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

inline bool is_matrix(const Json& j) {
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& r) { return r.is_array(); });
}

inline void matrix(std::ostream& os, const Json& rows, const std::string& indent) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], scalar(r[c]).size());
    }
  for (const auto& r : rows) {
    os << indent << "[ ";
    for (std::size_t c = 0; c < r.size(); ++c) {
      std::string s = scalar(r[c]);
      os << s << std::string(width[c] - s.size() + 2, ' ');
    }
    os << "]\n";
  }
}

inline void object(std::ostream& os, const Json& j, const std::string& indent = "") {
  std::size_t w = 0;
  for (const auto& [k, v] : j.items()) w = std::max(w, k.size());
  for (const auto& [k, v] : j.items()) {
    os << indent << k << ":" << std::string(w - k.size() + 1, ' ');
    if (is_matrix(v)) {
      os << "\n";
      matrix(os, v, indent + "  ");
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
      os << "\n";
      for (const auto& item : v) {
        std::string line;
        for (const auto& [ik, iv] : item.items()) line += (line.empty() ? "" : "  ") + ik + "=" + scalar(iv);
        os << indent << "  - " << line << "\n";
      }
    } else if (v.is_array()) {
      std::string line;
      for (const auto& item : v) line += (line.empty() ? "" : ", ") + scalar(item);
      os << line << "\n";
    } else if (v.is_object()) {
      os << "\n";
      object(os, v, indent + "  ");
    } else {
      os << scalar(v) << "\n";
    }
  }
}

}  // namespace text

struct Globals {
  bool json = false;
  std::size_t minor_cap = 8;
  std::size_t pair_cap = 10000;

  SmithOptions smith() const {
    SmithOptions o;
    o.minors.dimension_cap = minor_cap;
    o.groebner.pair_cap = pair_cap;
    return o;
  }
};

inline void emit(std::ostream& out, const Globals& g, const Json& j) {
  if (g.json)
    out << j.dump() << "\n";
  else
    text::object(out, j);
}

inline PolyMatrix matrix_from_file(const std::string& path) { return load_matrix(read_json(path), path); }

inline Json smith_json(const SmithData& d) {
  Json j;
  j["rank"] = d.gamma;
  j["divisors"] = polys_json(d.divisors);
  j["invariant_factors"] = polys_json(d.invariant_factors);
  j["snf"] = rows_json(d.snf);
  return j;
}

inline Json form_json(const Polynomial& d, const std::optional<DeterminantForm>& form) {
  Json j;
  j["input"] = d.to_string();
  j["recognized"] = form.has_value();
  if (!form) return j;
  j["unit"] = form->unit.get_str();
  j["f1"] = form->f1.to_string();
  j["factors"] = Json::array();
  for (const auto& f : form->factors)
    j["factors"].push_back({{"var", d.ring()->name(f.var)}, {"f", f.f.to_string()}, {"t", f.t}});
  return j;
}

inline Json verdict_json(const Verdict& v) {
  Json j;
  j["verdict"] = to_string(v.kind);
  if (v.kind == VerdictKind::NotEquivalent) j["k"] = v.k;
  if (v.kind == VerdictKind::Equivalent) j["snf"] = rows_json(v.smith->snf);
  if (v.kind == VerdictKind::Inconclusive) j["reason"] = v.reason;
  return j;
}

inline Json gen_json(const GenRequest& req) {
  harness::GroundTruthInstance inst = req.negative ? harness::gen_negative_instance(req.spec, req.negative_options)
                                      : req.recipe  ? harness::gen_equivalent_instance(req.spec, *req.recipe)
                                                    : harness::gen_equivalent_instance(req.spec);
  Json j = matrix_json(inst.f);
  Json expected;
  expected["verdict"] = to_string(inst.expected);
  if (inst.expected == VerdictKind::NotEquivalent) expected["k"] = inst.expected_k;
  if (inst.expected == VerdictKind::Equivalent) expected["snf"] = rows_json(inst.s);
  j["expected"] = expected;
  j["seed"] = req.spec.seed;
  return j;
}

/// Runs one invocation; args excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Smith normal forms of multivariate polynomial matrices", "polysnf"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "Machine-readable output with sorted keys");
  app.add_option("--minor-cap", g.minor_cap, "Largest min(rows, cols) for minor enumeration")->capture_default_str();
  app.add_option("--pair-cap", g.pair_cap, "Pending S-pair limit for Buchberger")->capture_default_str();

  std::string in, aut_file, spec_file, out_file, config_file;
  std::vector<std::string> aut_files;
  std::size_t k = 0;
  std::string a = "0", b = "0", c = "0";

  auto* snf = app.add_subcommand("snf", "Smith normal form via determinantal divisors");
  snf->add_option("--in", in, "Matrix file")->required();
  auto* divisors = app.add_subcommand("divisors", "Determinantal divisors d_0 .. d_rank");
  divisors->add_option("--in", in, "Matrix file")->required();
  auto* reduced = app.add_subcommand("reduced-minors", "Reduced k-minors and whether they generate the unit ideal");
  reduced->add_option("--in", in, "Matrix file")->required();
  reduced->add_option("--k", k, "Minor order")->required();
  auto* recognize = app.add_subcommand("recognize", "Recognize f1(x1) * prod (x_i - f_i)^t_i");
  recognize->add_option("--in", in, "File with \"poly\", or a matrix file (uses d_rank)")->required();
  auto* decide = app.add_subcommand("decide", "Decide equivalence to the Smith form");
  decide->add_option("--in", in, "Matrix file")->required();
  decide->add_option("--aut", aut_file, "Automorphism file; F is taken as psi(F')");
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  gb->add_option("--in", in, "Ideal file {field, p?, vars, generators}")->required();
  auto* aut = app.add_subcommand("aut", "Tame automorphisms over Q");
  aut->require_subcommand(1);
  auto* aut_apply = aut->add_subcommand("apply", "Apply psi to every entry of a matrix");
  aut_apply->add_option("--aut", aut_file, "Automorphism file")->required();
  aut_apply->add_option("--in", in, "Matrix file")->required();
  auto* aut_invert = aut->add_subcommand("invert", "Inverse automorphism");
  aut_invert->add_option("--aut", aut_file, "Automorphism file")->required();
  auto* aut_compose = aut->add_subcommand("compose", "psi_1 o psi_2 o ...");
  aut_compose->add_option("--aut", aut_files, "Automorphism files, outermost first")->required();
  auto* aut_fs = aut->add_subcommand("frost-storey", "The three-step automorphism for (a, b, c)");
  aut_fs->add_option("--a", a, "Rational a")->capture_default_str();
  aut_fs->add_option("--b", b, "Rational b")->capture_default_str();
  aut_fs->add_option("--c", c, "Rational c")->capture_default_str();
  auto* gen = app.add_subcommand("gen", "Generate a ground-truth instance");
  gen->add_option("--spec", spec_file, "Generator spec file")->required();
  gen->add_option("--out", out_file, "Output matrix file (stdout when omitted)");
  auto* check = app.add_subcommand("check", "Run the property suite");
  check->add_option("--config", config_file, "Suite config file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }

  try {
    const SmithOptions opts = g.smith();
    if (*snf) {
      emit(out, g, smith_json(smith_normal_form(matrix_from_file(in), opts)));
    } else if (*divisors) {
      auto d = determinantal_divisors(matrix_from_file(in), opts);
      emit(out, g, Json{{"rank", d.gamma}, {"divisors", polys_json(d.divisors)}});
    } else if (*reduced) {
      auto r = reduced_minor_ideal(matrix_from_file(in), k, opts);
      emit(out, g, Json{{"k", r.k}, {"divisor", r.divisor.to_string()}, {"generators", polys_json(r.generators)}, {"unit", r.is_unit}});
    } else if (*recognize) {
      Json j = read_json(in);
      Polynomial d = j.contains("poly") ? load_poly(j["poly"], load_ring(j, in), in + ".poly")
                                        : smith_normal_form(load_matrix(j, in), opts).divisors.back();
      if (d.is_zero()) throw InputError(in + ": the polynomial to recognize is zero");
      emit(out, g, form_json(d, recognize_determinant_form(d)));
    } else if (*decide) {
      PolyMatrix f = matrix_from_file(in);
      Verdict v = aut_file.empty() ? decide_equivalence(f, opts)
                                   : decide_with_automorphism(f, load_aut(read_json(aut_file), f.ring(), aut_file), opts);
      emit(out, g, verdict_json(v));
    } else if (*gb) {
      Json j = read_json(in);
      auto gens = load_polys(require(j, "generators", in), load_ring(j, in), in + ".generators");
      auto basis = groebner_basis(gens, opts.groebner);
      emit(out, g, Json{{"basis", polys_json(basis)}, {"unit", basis.size() == 1 && basis[0].is_one()}});
    } else if (*aut_apply) {
      PolyMatrix f = matrix_from_file(in);
      emit(out, g, matrix_json(load_aut(read_json(aut_file), f.ring(), aut_file).apply(f)));
    } else if (*aut_invert) {
      emit(out, g, aut_json(invert(load_aut(read_json(aut_file), nullptr, aut_file))));
    } else if (*aut_compose) {
      TameAut acc = load_aut(read_json(aut_files[0]), nullptr, aut_files[0]);
      for (std::size_t i = 1; i < aut_files.size(); ++i) acc = compose(acc, load_aut(read_json(aut_files[i]), acc.ring(), aut_files[i]));
      emit(out, g, aut_json(acc));
    } else if (*aut_fs) {
      RingPtr ring = make_standard_ring(Field::rationals(), 3);
      auto rat = [&](const std::string& s, const char* name) { return load_rational(Json(s), ring, std::string("--") + name); };
      emit(out, g, aut_json(build_frost_storey_psi(ring, rat(a, "a"), rat(b, "b"), rat(c, "c"))));
    } else if (*gen) {
      Json j = gen_json(load_gen_request(read_json(spec_file), spec_file));
      if (out_file.empty()) {
        out << j.dump(2) << "\n";
      } else {
        write_json(out_file, j);
        emit(out, g, Json{{"out", out_file}, {"expected", j["expected"]["verdict"]}});
      }
    } else if (*check) {
      harness::SuiteConfig config = config_file.empty() ? harness::SuiteConfig{} : load_suite_config(read_json(config_file), config_file);
      config.smith = opts;
      auto report = harness::run_suite(config);
      if (g.json) {
        out << report_json(report).dump() << "\n";
      } else {
        std::size_t w = 0;
        for (const auto& p : report.properties) w = std::max(w, p.property.size());
        for (const auto& p : report.properties) {
          out << p.property << std::string(w - p.property.size() + 2, ' ') << (p.failures.empty() ? "PASS" : "FAIL") << "  "
              << p.cases << " cases";
          if (!p.failures.empty()) out << ", " << p.failures.size() << " failed";
          out << "\n";
          for (const auto& f : p.failures) out << "    seed " << f.seed << ": " << f.detail << "\n";
        }
      }
      return report.passed() ? kOk : kInternal;
    }
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace polysnf::cli
