#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <string>
#include <vector>

#include "siegel/autgroup.hpp"
#include "siegel/batch.hpp"
#include "siegel/boundary.hpp"
#include "siegel/error.hpp"
#include "siegel/jets.hpp"
#include "siegel/levi.hpp"
#include "siegel/maps.hpp"
#include "siegel/numeric.hpp"
#include "siegel/serialize.hpp"
#include "siegel/structures.hpp"

namespace siegel::cli {

namespace {

using io::json;

constexpr double kSampleTolerance = 1e-9;

struct Options {
  std::string structure;
  std::string map;
  std::vector<std::string> aut;
  std::string at;
  std::optional<int> order;
  int sample = 0;
  std::uint64_t seed = 1;
  std::string format = "json";
};

struct Outcome {
  json report;
  bool pass = true;
};

io::StructureFile load_structure(const Options& o) {
  if (o.structure.empty()) fail(ErrorKind::Parse, "--structure is required");
  return io::structure_from_json(io::read_json_file(o.structure));
}

SimpleModelStructure load_simple(const Options& o) {
  const auto s = load_structure(o);
  if (!s.simple) fail(ErrorKind::Validation, "this verb needs a simple structure J^B");
  return *s.simple;
}

PolyMap load_map(const Options& o) {
  if (o.map.empty()) fail(ErrorKind::Parse, "--map is required");
  PolyMap f = io::polymap_from_json(io::read_json_file(o.map));
  if (o.order) f = f.truncated_to(*o.order);
  return f;
}

Automorphism load_aut(const std::string& path, const std::optional<SimpleModelStructure>& b) {
  return io::automorphism_from_json(io::read_json_file(path), b);
}

std::optional<SimpleModelStructure> optional_simple(const Options& o) {
  if (o.structure.empty()) return std::nullopt;
  return load_structure(o).simple;
}

Point load_point(const Options& o, int n) {
  if (o.at.empty() || o.at == "origin") return Point(n);
  const json j = o.at.front() == '[' ? json::parse(o.at, nullptr, false) : io::read_json_file(o.at);
  if (j.is_discarded()) fail(ErrorKind::Parse, "--at: malformed point");
  Point p = io::point_from_json(j.is_object() && j.contains("point") ? j.at("point") : j);
  if (static_cast<int>(p.size()) != n) fail(ErrorKind::Validation, "--at: point has the wrong dimension");
  return p;
}

json sample_entry(const std::string& check, double max_abs, int count, bool expect_zero) {
  return {{"check", check},
          {"samples", count},
          {"max_abs", max_abs},
          {"tolerance", kSampleTolerance},
          {"consistent", !expect_zero || max_abs < kSampleTolerance}};
}

// ---------------------------------------------------------------------------

Outcome structure_verify(const Options& o) {
  const auto s = load_structure(o);
  const StructureReport rep = s.explicit_matrix ? verify_complexified(*s.explicit_matrix) : verify_structure(s.model);
  json r = io::to_json(rep);
  if (!s.explicit_matrix) {
    r["structure"] = s.simple ? io::to_json(*s.simple) : io::to_json(s.model);
    r["integrable"] = nijenhuis_vanishes(s.model);
  }
  return {r, rep.pass};
}

Outcome frame(const Options& o) {
  const auto s = load_structure(o);
  const ModelStructure& j = s.model;
  const int n = j.n();
  const TangentFrame f = tangent_frame(j);
  const Poly r = rho(n);
  bool pass = true;
  json checks = json::array();
  for (int k = 0; k < n - 1; ++k) {
    const bool eigen = (apply_J(j, f.l[k]) - ComplexRational::i() * f.l[k]).is_zero();
    const bool tangent = reduce_mod_boundary(f.l[k].apply(r)).is_zero();
    pass = pass && eigen && tangent;
    checks.push_back({{"field", "L" + std::to_string(k + 1)}, {"J L = i L", eigen}, {"L rho = 0 on Gamma", tangent}});
  }
  const bool t_tangent = f.t.apply(r).is_zero();
  pass = pass && t_tangent;
  checks.push_back({{"field", "T"}, {"T rho = 0", t_tangent}});
  json rep = io::to_json(f);
  rep["checks"] = checks;
  if (!o.at.empty()) {
    const Point p = load_point(o, n);
    json at = json::array();
    for (const auto& l : f.l) at.push_back(io::to_json(l.at(p)));
    rep["at"] = {{"point", io::to_json(p)}, {"L", at}, {"T", io::to_json(f.t.at(p))}};
  }
  if (o.sample > 0) {
    const auto pts = numeric::boundary_samples(n, o.sample, o.seed);
    const double m =
        batch::max_defect([&](const numeric::CPoint& z) { return numeric::frame_defect(j, f, z); }, pts);
    rep["sampling"] = json::array({sample_entry("frame", m, o.sample, true)});
    pass = pass && m < kSampleTolerance;
  }
  return {rep, pass};
}

Outcome levi(const Options& o) {
  const auto s = load_structure(o);
  const Point p = load_point(o, s.model.n());
  const LeviReport rep = levi_matrix(s.model, p);
  return {io::to_json(rep), rep.positive};
}

Outcome map_check(const Options& o) {
  const auto s = load_structure(o);
  const ModelStructure& j = s.model;
  const PolyMap f = load_map(o);
  require_same_dim(j.n(), f.n(), "map-check");
  bool pass = true;
  json checks = json::array();
  const FormResult form = check_form(f);
  json form_json = io::to_json(form);
  form_json["check"] = "form";
  checks.push_back(form_json);
  pass = pass && form.pass;

  std::vector<ResidualReport> reports;
  reports.push_back(check_pseudoholomorphic(j, j, f));
  if (s.simple) reports.push_back(check_component_system(*s.simple, f));
  reports.push_back(check_boundary_invariance(f));
  if (reports.back().passed()) reports.push_back(check_cr_on_boundary(j, j, f));
  for (const auto& r : reports) {
    checks.push_back(io::to_json(r));
    pass = pass && r.passed();
  }
  json rep{{"map", io::to_json(f)}, {"checks", checks}};

  if (o.sample > 0) {
    if (f.truncated()) {
      rep["sampling"] = "skipped: truncated maps have no pointwise values";
    } else {
      const auto inside = numeric::samples(f.n(), o.sample, o.seed);
      const auto on_gamma = numeric::boundary_samples(f.n(), o.sample, o.seed + 1);
      json samples = json::array();
      auto record = [&](const std::string& name, double m, bool exact_pass) {
        samples.push_back(sample_entry(name, m, o.sample, exact_pass));
        if (exact_pass && m >= kSampleTolerance) pass = false;
      };
      const numeric::PseudoholomorphicProbe ph(j, j, f);
      record("pseudoholomorphic", batch::max_defect(std::cref(ph), inside), reports[0].passed());
      if (s.simple) {
        const numeric::ComponentSystemProbe cs(*s.simple, f);
        record("component_system", batch::max_defect(std::cref(cs), inside), reports[1].passed());
      }
      const bool boundary_pass = reports[s.simple ? 2 : 1].passed();
      record("boundary_invariance",
             batch::max_defect([&](const numeric::CPoint& z) { return numeric::boundary_defect(f, z); }, on_gamma),
             boundary_pass);
      rep["sampling"] = samples;
    }
  }
  return {rep, pass};
}

json factored_json(const Automorphism& g) {
  const FactoredView fv = factored_view(g);
  json out{{"tau", io::to_json(fv.tau)}, {"sqrt_c_approx", fv.sqrt_c_approx}};
  if (fv.sqrt_c) out["sqrt_c"] = io::to_json(*fv.sqrt_c);
  if (fv.a_unit) out["A_unit"] = io::to_json(*fv.a_unit);
  return out;
}

Outcome aut_verify(const Options& o) {
  if (o.aut.size() != 1) fail(ErrorKind::Parse, "aut-verify takes exactly one --aut");
  const auto b = optional_simple(o);
  const json raw = io::read_json_file(o.aut[0]);
  std::optional<SimpleModelStructure> sb = b;
  if (raw.contains("B")) sb = SimpleModelStructure(static_cast<int>(raw.at("B").size()) + 1, io::matrix_from_json(raw.at("B")));
  if (!sb) fail(ErrorKind::Validation, "automorphism needs a structure (B)");
  const auto violations = automorphism_violations(*sb, io::matrix_from_json(raw.at("A")),
                                                  io::rational_from_json(raw.at("c")), io::point_from_json(raw.at("zeta")));
  if (!violations.empty()) {
    return {json{{"valid", false}, {"violations", violations}, {"error", "validation"}}, false};
  }
  const Automorphism g = io::automorphism_from_json(raw, b);
  const PolyMap gm = g.as_polymap();
  const int n = g.n();
  const bool rho_law = substitute(rho(n), gm.components()) == ComplexRational(g.c()) * rho(n);
  const ResidualReport ph = check_pseudoholomorphic(g.structure().to_model(), g.structure().to_model(), gm);
  json rep{{"valid", true},
           {"automorphism", io::to_json(g)},
           {"rho_of_G_equals_c_rho", rho_law},
           {"pseudoholomorphic", io::to_json(ph)},
           {"factored_view", factored_json(g)}};
  if (!g.structure().integrable()) rep["fixes_minus_one"] = fixes_minus_one(g);
  bool pass = rho_law && ph.passed();
  if (o.sample > 0) {
    const auto pts = numeric::samples(n, o.sample, o.seed);
    const double m =
        batch::max_defect([&](const numeric::CPoint& z) { return numeric::automorphism_rho_defect(g, z); }, pts);
    rep["sampling"] = json::array({sample_entry("rho_of_G_equals_c_rho", m, o.sample, true)});
    pass = pass && m < kSampleTolerance;
  }
  return {rep, pass};
}

Outcome aut_compose(const Options& o) {
  if (o.aut.size() < 2) fail(ErrorKind::Parse, "aut-compose needs at least two --aut (applied right to left)");
  const auto b = optional_simple(o);
  Automorphism g = load_aut(o.aut.back(), b);
  for (auto it = o.aut.rbegin() + 1; it != o.aut.rend(); ++it) g = compose(load_aut(*it, b), g);
  return {json{{"composite", io::to_json(g)}}, true};
}

Outcome aut_apply(const Options& o) {
  if (o.aut.size() != 1) fail(ErrorKind::Parse, "aut-apply takes exactly one --aut");
  const Automorphism g = load_aut(o.aut[0], optional_simple(o));
  const Point p = load_point(o, g.n());
  const Point q = g.apply(p);
  return {json{{"point", io::to_json(p)}, {"image", io::to_json(q)}, {"image_on_boundary", on_boundary(q)},
               {"point_on_boundary", on_boundary(p)}},
          true};
}

Outcome jet_extract(const Options& o) {
  const PolyMap f = load_map(o);
  return {json{{"jet", io::to_json(extract_jet2(f))}}, true};
}

Outcome reconstruct_verb(const Options& o) {
  const SimpleModelStructure b = load_simple(o);
  const PolyMap f = load_map(o);
  const Reconstruction r = reconstruct(f, b);
  json rep{{"trace", io::to_json(r.trace)}};
  if (r.g) {
    rep["automorphism"] = io::to_json(*r.g);
    rep["A"] = io::to_json(r.g->a());
    rep["c"] = io::to_json(r.g->c());
    rep["factored_view"] = factored_json(*r.g);
  }
  return {rep, r.g.has_value()};
}

Outcome extend(const Options& o) {
  const SimpleModelStructure b = load_simple(o);
  const PolyMap f = load_map(o);
  const Point p = load_point(o, f.n());
  const Point q = f.evaluate(p);
  json rep{{"p", io::to_json(p)}, {"q", io::to_json(q)}};
  const PolyMap normalized = normalize_basepoints(f, p, q, b);
  rep["normalized_map"] = io::to_json(normalized);
  const Reconstruction r = reconstruct(normalized, b);
  rep["trace"] = io::to_json(r.trace);
  if (!r.g) return {rep, false};
  const Automorphism g = compose(make_translation(q, b), compose(*r.g, invert(make_translation(p, b))));
  rep["normalized_automorphism"] = io::to_json(*r.g);
  rep["automorphism"] = io::to_json(g);
  const ExtensionReport ext = verify_extension(f, g);
  rep["extension"] = io::to_json(ext);
  return {rep, ext.verdict != ExtensionVerdict::Disagrees};
}

// ---------------------------------------------------------------------------

void render_text(const std::string& verb, const Outcome& out, std::ostream& os) {
  os << verb << ": " << (out.pass ? "PASS" : "FAIL") << "\n";
  const json& r = out.report;
  if (r.contains("trace")) {
    for (const auto& s : r.at("trace").at("steps")) {
      os << "  step " << s.at("step").get<int>() << " " << s.at("name").get<std::string>() << " ["
         << s.at("status").get<std::string>() << "]  " << s.at("anchor").get<std::string>() << "\n";
    }
  }
  for (auto it = r.begin(); it != r.end(); ++it) {
    if (it.key() == "trace") continue;
    if (it.key() == "checks") {
      for (const auto& c : it.value()) {
        const std::string name = c.value("check", std::string("check"));
        std::string status;
        if (c.contains("verdict")) status = c.at("verdict").get<std::string>();
        else if (c.contains("pass")) status = c.at("pass").get<bool>() ? "pass" : "fail";
        else status = c.dump();
        os << "  " << name << ": " << status << "\n";
      }
      continue;
    }
    os << "  " << it.key() << ": " << it.value().dump() << "\n";
  }
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return kParseError;
    case ErrorKind::Dimension:
    case ErrorKind::Precondition:
    case ErrorKind::Validation: return kValidationError;
    case ErrorKind::Internal: return kInternalError;
  }
  return kInternalError;
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Internal: return "internal";
  }
  return "internal";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification toolkit for model almost-complex structures on the Siegel half-plane"};
  app.require_subcommand(1);
  Options o;

  struct Verb {
    const char* name;
    const char* help;
    Outcome (*fn)(const Options&);
  };
  const Verb verbs[] = {
      {"structure-verify", "check the shape and J^2 = -I of a structure", structure_verify},
      {"frame", "tangent frame L_j, T of Gamma and its identities", frame},
      {"levi", "Levi matrix and positivity verdict at a boundary point", levi},
      {"map-check", "form, pseudo-holomorphy, component system, boundary and CR checks", map_check},
      {"aut-verify", "validate an automorphism and its invariance laws", aut_verify},
      {"aut-compose", "compose automorphisms (right to left)", aut_compose},
      {"aut-apply", "apply an automorphism to a point", aut_apply},
      {"jet-extract", "order-2 Taylor data at 0", jet_extract},
      {"reconstruct", "constraint trace and the automorphism with the same 2-jet", reconstruct_verb},
      {"extend", "normalize base points, reconstruct, and compare with the input map", extend},
  };
  const Verb* chosen = nullptr;
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("--structure", o.structure, "structure JSON file");
    sub->add_option("--map", o.map, "map JSON file");
    sub->add_option("--aut", o.aut, "automorphism JSON file (repeatable)");
    sub->add_option("--at", o.at, "point: 'origin', a JSON file, or an inline JSON array");
    sub->add_option("--order", o.order, "truncate the input map to this order")->check(CLI::NonNegativeNumber);
    sub->add_option("--sample", o.sample, "floating cross-check at N random points")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", o.seed, "seed for the sampling oracle");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->callback([&chosen, &v] { chosen = &v; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  }
  if (chosen == nullptr) return kParseError;

  try {
    Outcome result = chosen->fn(o);
    result.report["verb"] = chosen->name;
    result.report["status"] = result.pass ? "pass" : "fail";
    if (o.format == "text") {
      render_text(chosen->name, result, out);
    } else {
      out << result.report.dump(2) << "\n";
    }
    return result.pass ? kPass : kCheckFailed;
  } catch (const Error& e) {
    const json r{{"verb", chosen->name}, {"status", "error"}, {"error", kind_name(e.kind())}, {"message", e.what()}};
    if (o.format == "text") err << chosen->name << ": " << kind_name(e.kind()) << " error: " << e.what() << "\n";
    else out << r.dump(2) << "\n";
    return exit_code(e.kind());
  } catch (const json::exception& e) {
    err << chosen->name << ": parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << chosen->name << ": internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace siegel::cli
