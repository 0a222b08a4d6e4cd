#include "siegel/serialize.hpp"

#include <fstream>
#include <sstream>

#include "siegel/error.hpp"

namespace siegel::io {

namespace {

json multi_index(const MultiIndex& m) {
  json out = json::array();
  for (int e : m) out.push_back(e);
  return out;
}

MultiIndex multi_index_from_json(const json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    fail(ErrorKind::Parse, std::string(what) + ": expected an array of " + std::to_string(n) + " exponents");
  }
  MultiIndex out;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long>() < 0 || e.get<long>() > 65535) {
      fail(ErrorKind::Parse, std::string(what) + ": exponents must be small nonnegative integers");
    }
    out.push_back(e.get<int>());
  }
  return out;
}

int int_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    fail(ErrorKind::Parse, std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

json offender_json(const Offender& o) {
  return {{"label", o.label}, {"monomial", to_json(o.monomial)}, {"coefficient", to_json(o.coefficient)}};
}

json term_refs(const std::vector<TermRef>& v) {
  json out = json::array();
  for (const auto& t : v)
    out.push_back({{"component", t.component}, {"monomial", to_json(t.monomial)}, {"value", to_json(t.value)}});
  return out;
}

}  // namespace

json to_json(const mpq_class& q) { return rational_to_string(q); }

json to_json(const ComplexRational& x) { return json::array({to_json(x.re()), to_json(x.im())}); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Point& p) {
  json out = json::array();
  for (const auto& x : p) out.push_back(to_json(x));
  return out;
}

json to_json(const Monomial& m) { return {{"alpha", multi_index(m.alpha())}, {"beta", multi_index(m.beta())}}; }

json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    out.push_back({{"alpha", multi_index(m.alpha())},
                   {"beta", multi_index(m.beta())},
                   {"re", rational_to_string(c.re())},
                   {"im", rational_to_string(c.im())}});
  }
  return out;
}

json to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.size(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const PolyMap& f) {
  json comps = json::array();
  for (const auto& c : f.components()) comps.push_back(to_json(c));
  json out{{"n", f.n()}, {"components", comps}};
  out["truncation_order"] = f.truncation_order() ? json(*f.truncation_order()) : json(nullptr);
  return out;
}

json to_json(const SimpleModelStructure& s) { return {{"n", s.n()}, {"B", to_json(s.b())}}; }

json to_json(const ModelStructure& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.rows().size(); ++i) {
    rows.push_back({{"i", static_cast<int>(i) + 1},
                    {"alpha", to_json(s.rows()[i].alpha)},
                    {"beta", to_json(s.rows()[i].beta)}});
  }
  return {{"n", s.n()}, {"Ltilde", rows}};
}

json to_json(const Automorphism& g) {
  return {{"A", to_json(g.a())}, {"c", to_json(g.c())}, {"zeta", to_json(g.zeta())}, {"B", to_json(g.structure().b())}};
}

json to_json(const LeviReport& r) {
  json minors = json::array();
  for (const auto& m : r.minors) minors.push_back(to_json(m));
  json out{{"point", to_json(r.point)},
           {"matrix", to_json(r.matrix)},
           {"leading_minors", minors},
           {"verdict", r.positive ? "positive" : "not_positive"}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  if (r.witness_value) out["witness_value"] = to_json(*r.witness_value);
  return out;
}

json to_json(const StructureReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"row", f.row}, {"col", f.col}, {"what", f.what}, {"found", f.found}});
  return {{"pass", r.pass}, {"failures", failures}};
}

json to_json(const ResidualReport& r) {
  json residuals = json::array();
  for (const auto& res : r.residuals) residuals.push_back({{"label", res.label}, {"value", to_json(res.value)}});
  json out{{"check", r.check},
           {"verdict", to_string(r.verdict)},
           {"residuals", residuals},
           {"identities_checked", r.identities_checked}};
  if (r.first_offender) out["first_offender"] = offender_json(*r.first_offender);
  if (r.decided_to_degree) out["decided_to_degree"] = *r.decided_to_degree;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

json to_json(const FormResult& r) {
  json out{{"pass", r.pass}};
  if (r.pass) {
    json holo = json::array();
    for (const auto& p : r.holomorphic_part) holo.push_back(to_json(p));
    out["holomorphic_part"] = holo;
    out["c"] = to_json(r.c);
    if (r.antiholomorphic_part) out["antiholomorphic_part"] = to_json(*r.antiholomorphic_part);
  }
  if (r.offender) out["offender"] = offender_json(*r.offender);
  if (!r.reason.empty()) out["reason"] = r.reason;
  if (r.up_to_degree) out["up_to_degree"] = *r.up_to_degree;
  return out;
}

json to_json(const VectorField& x) {
  json out = json::object();
  for (int k = 1; k <= x.n(); ++k) {
    if (!x.dz(k).is_zero()) out["d/dz" + std::to_string(k)] = to_json(x.dz(k));
    if (!x.dzbar(k).is_zero()) out["d/dzbar" + std::to_string(k)] = to_json(x.dzbar(k));
  }
  return out;
}

json to_json(const TangentFrame& f) {
  json l = json::array();
  for (const auto& x : f.l) l.push_back(to_json(x));
  return {{"L", l}, {"T", to_json(f.t)}};
}

json to_json(const Jet2& j) {
  json quad = json::array();
  for (const auto& m : j.quad_holo) quad.push_back(to_json(m));
  json out{{"n", j.n},
           {"A", to_json(j.a)},
           {"c", to_json(j.c)},
           {"quad_holo", quad},
           {"antiholo_lin", to_json(j.antiholo_lin)},
           {"antiholo_quad", to_json(j.antiholo_quad)},
           {"residual_terms", term_refs(j.residual_terms)}};
  out["antiholo_cubic"] = j.antiholo_cubic ? term_refs(*j.antiholo_cubic) : json(nullptr);
  return out;
}

json to_json(const TraceStep& s) {
  return {{"step", s.step},
          {"name", s.name},
          {"anchor", s.anchor},
          {"status", s.status == StepStatus::Pass ? "pass" : "fail"},
          {"data", s.data}};
}

json to_json(const ReconstructionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  json out{{"steps", steps}, {"passed", t.passed()}};
  out["failed_step"] = t.failed_step() ? json(*t.failed_step()) : json(nullptr);
  return out;
}

json to_json(const ExtensionReport& r) {
  json out{{"verdict", to_string(r.verdict)}, {"coefficients_compared", r.coefficients_compared}, {"note", r.note}};
  if (r.order) out["order"] = *r.order;
  if (r.first_disagreement) {
    const auto& d = *r.first_disagreement;
    out["first_disagreement"] = {{"component", d.component},
                                 {"monomial", to_json(d.monomial)},
                                 {"degree", d.monomial.degree()},
                                 {"f", to_json(d.f_value)},
                                 {"g", to_json(d.g_value)}};
  }
  return out;
}

// ---------------------------------------------------------------------------

mpq_class rational_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      fail(ErrorKind::Parse, e.what());
    }
  }
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  fail(ErrorKind::Parse, "rational must be a \"p/q\" string or an integer, got " + j.dump());
}

ComplexRational complex_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) fail(ErrorKind::Parse, "complex value must be [re, im], got " + j.dump());
    return {rational_from_json(j[0]), rational_from_json(j[1])};
  }
  return ComplexRational(rational_from_json(j));
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "matrix must be an array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j[0].is_array() ? j[0].size() : 0);
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols) fail(ErrorKind::Parse, "matrix rows must have equal length");
    for (int c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

Point point_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "point must be an array of complex values");
  Point p;
  for (const auto& x : j) p.push_back(complex_from_json(x));
  return p;
}

Poly poly_from_json(const json& j, int n) {
  if (!j.is_array()) fail(ErrorKind::Parse, "polynomial must be an array of terms");
  Poly p(n);
  for (const auto& t : j) {
    const MultiIndex alpha = multi_index_from_json(field(t, "alpha"), n, "alpha");
    const MultiIndex beta = multi_index_from_json(field(t, "beta"), n, "beta");
    const ComplexRational c(t.contains("re") ? rational_from_json(t.at("re")) : mpq_class(0),
                            t.contains("im") ? rational_from_json(t.at("im")) : mpq_class(0));
    p += Poly::monomial(n, alpha, beta, c);
  }
  return p;
}

PolyMap polymap_from_json(const json& j) {
  const int n = int_field(j, "n");
  if (n < 1) fail(ErrorKind::Parse, "map dimension must be positive");
  const json& comps = field(j, "components");
  if (!comps.is_array() || static_cast<int>(comps.size()) != n) {
    fail(ErrorKind::Parse, "map must have exactly n components");
  }
  std::vector<Poly> out;
  for (const auto& c : comps) out.push_back(poly_from_json(c, n));
  std::optional<int> order;
  if (j.contains("truncation_order") && !j.at("truncation_order").is_null()) {
    if (!j.at("truncation_order").is_number_integer()) fail(ErrorKind::Parse, "truncation_order must be an integer");
    order = j.at("truncation_order").get<int>();
    if (*order < 0) fail(ErrorKind::Parse, "truncation_order must be nonnegative");
  }
  return PolyMap(n, std::move(out), order);
}

StructureFile structure_from_json(const json& j) {
  const int n = int_field(j, "n");
  if (n < 2) fail(ErrorKind::Validation, "structure dimension must be at least 2");
  if (j.contains("B")) {
    const Matrix b = matrix_from_json(j.at("B"));
    if (b.rows() != n - 1 || b.cols() != n - 1) fail(ErrorKind::Validation, "B must be (n-1)x(n-1)");
    SimpleModelStructure s(n, b);
    return {s.to_model(), s, std::nullopt};
  }
  if (j.contains("Ltilde")) {
    const json& rows = j.at("Ltilde");
    if (!rows.is_array()) fail(ErrorKind::Parse, "Ltilde must be an array");
    std::vector<LtildeRow> out(n - 1, LtildeRow{Point(n - 1), Point(n - 1)});
    std::vector<bool> seen(n - 1, false);
    for (const auto& r : rows) {
      const int i = int_field(r, "i");
      if (i < 1 || i > n - 1) fail(ErrorKind::Validation, "Ltilde row index out of range");
      if (seen[i - 1]) fail(ErrorKind::Validation, "Ltilde row " + std::to_string(i) + " given twice");
      seen[i - 1] = true;
      LtildeRow row{r.contains("alpha") ? point_from_json(r.at("alpha")) : Point(n - 1),
                    r.contains("beta") ? point_from_json(r.at("beta")) : Point(n - 1)};
      if (static_cast<int>(row.alpha.size()) != n - 1 || static_cast<int>(row.beta.size()) != n - 1) {
        fail(ErrorKind::Validation, "Ltilde coefficient vectors must have n-1 entries");
      }
      out[i - 1] = std::move(row);
    }
    ModelStructure m(n, std::move(out));
    std::optional<SimpleModelStructure> simple;
    if (is_simple(m)) simple = as_simple(m);
    return {m, simple, std::nullopt};
  }
  if (j.contains("Jc")) {
    const json& rows = j.at("Jc");
    const int size = 2 * n;
    if (!rows.is_array() || static_cast<int>(rows.size()) != size) fail(ErrorKind::Parse, "Jc must have 2n rows");
    PolyMatrix jc(size, n);
    for (int r = 0; r < size; ++r) {
      if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != size) fail(ErrorKind::Parse, "Jc rows must have 2n entries");
      for (int c = 0; c < size; ++c) jc(r, c) = poly_from_json(rows[r][c], n);
    }
    return {ModelStructure::standard(n), std::nullopt, std::move(jc)};
  }
  fail(ErrorKind::Parse, "structure needs one of B, Ltilde or Jc");
}

Automorphism automorphism_from_json(const json& j, const std::optional<SimpleModelStructure>& b) {
  const Matrix a = matrix_from_json(field(j, "A"));
  const mpq_class c = rational_from_json(field(j, "c"));
  const Point zeta = point_from_json(field(j, "zeta"));
  std::optional<SimpleModelStructure> s = b;
  if (j.contains("B")) {
    const Matrix own = matrix_from_json(j.at("B"));
    const int n = own.rows() + 1;
    SimpleModelStructure file_b(n, own);
    if (s && !(*s == file_b)) fail(ErrorKind::Validation, "automorphism B differs from the structure B");
    s = file_b;
  }
  if (!s) fail(ErrorKind::Validation, "automorphism needs a structure (B)");
  if (a.rows() != s->n() - 1 || a.cols() != s->n() - 1 || static_cast<int>(zeta.size()) != s->n()) {
    fail(ErrorKind::Validation, "automorphism data has the wrong dimension");
  }
  return Automorphism(*s, a, c, zeta);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
}

}  // namespace siegel::io
