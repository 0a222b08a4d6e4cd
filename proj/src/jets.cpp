#include "siegel/jets.hpp"

#include "siegel/boundary.hpp"
#include "siegel/error.hpp"
#include "siegel/serialize.hpp"

namespace siegel {

using nlohmann::json;

namespace {

const ComplexRational kHalf(mpq_class(1, 2));

Monomial mono(int n, std::initializer_list<int> z_vars, std::initializer_list<int> zbar_vars) {
  Monomial m(n);
  for (int v : z_vars) ++m.z(v - 1);
  for (int v : zbar_vars) ++m.zbar(v - 1);
  return m;
}

// Tensor slot value from the coefficient of z_k z_l (or zbar_k zbar_l).
ComplexRational symmetric_slot(const ComplexRational& monomial_coeff, int k, int l) {
  return k == l ? monomial_coeff : monomial_coeff * kHalf;
}

bool all_zero(const std::vector<ComplexRational>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

json monomial_label(const Monomial& m) { return io::to_json(m); }

}  // namespace

// ---------------------------------------------------------------------------

Jet2 extract_jet2(const PolyMap& f) {
  const int n = f.n();
  if (n < 2) fail(ErrorKind::Precondition, "extract_jet2: n must be >= 2");
  if (!f.fixes_origin()) fail(ErrorKind::Precondition, "extract_jet2: map has a nonzero constant term");
  if (f.truncated() && *f.truncation_order() < 2) fail(ErrorKind::Precondition, "extract_jet2: truncation order < 2");
  const int m = n - 1;
  Jet2 jet;
  jet.n = n;
  jet.a = Matrix(m, m);
  jet.quad_holo.assign(m, Matrix(m, m));
  jet.antiholo_lin.assign(m, ComplexRational{});
  jet.antiholo_quad = Matrix(m, m);

  for (int comp = 1; comp <= n; ++comp) {
    for (const auto& [mo, c] : f[comp - 1].terms()) {
      const int d = mo.degree();
      if (d > 2) continue;
      bool consumed = false;
      if (comp < n) {
        bool holo_prime = mo.z(n - 1) == 0;
        for (int k = 0; k < n && holo_prime; ++k) holo_prime = mo.zbar(k) == 0;
        if (holo_prime) {
          std::vector<int> vars;
          for (int k = 0; k < m; ++k)
            for (int e = 0; e < mo.z(k); ++e) vars.push_back(k);
          if (d == 1) {
            jet.a(comp - 1, vars[0]) = c;
          } else {
            const ComplexRational v = symmetric_slot(c, vars[0], vars[1]);
            jet.quad_holo[comp - 1](vars[0], vars[1]) = v;
            jet.quad_holo[comp - 1](vars[1], vars[0]) = v;
          }
          consumed = true;
        }
      } else {
        bool antiholo_prime = mo.zbar(n - 1) == 0;
        for (int k = 0; k < n && antiholo_prime; ++k) antiholo_prime = mo.z(k) == 0;
        if (d == 1 && mo.z(n - 1) == 1) {
          jet.c = c;
          consumed = true;
        } else if (antiholo_prime) {
          std::vector<int> vars;
          for (int k = 0; k < m; ++k)
            for (int e = 0; e < mo.zbar(k); ++e) vars.push_back(k);
          if (d == 1) {
            jet.antiholo_lin[vars[0]] = c;
          } else {
            const ComplexRational v = symmetric_slot(c, vars[0], vars[1]);
            jet.antiholo_quad(vars[0], vars[1]) = v;
            jet.antiholo_quad(vars[1], vars[0]) = v;
          }
          consumed = true;
        }
      }
      if (!consumed) jet.residual_terms.push_back({comp, mo, c});
    }
  }
  if (!f.truncated() || *f.truncation_order() >= 3) {
    std::vector<TermRef> cubic;
    for (const auto& [mo, c] : f[n - 1].terms()) {
      if (mo.degree() != 3) continue;
      bool antiholo_prime = mo.zbar(n - 1) == 0;
      for (int k = 0; k < n && antiholo_prime; ++k) antiholo_prime = mo.z(k) == 0;
      if (antiholo_prime) cubic.push_back({n, mo, c});
    }
    jet.antiholo_cubic = std::move(cubic);
  }
  return jet;
}

// ---------------------------------------------------------------------------

bool ReconstructionTrace::passed() const {
  for (const auto& s : steps)
    if (s.status != StepStatus::Pass) return false;
  return !steps.empty();
}

std::optional<int> ReconstructionTrace::failed_step() const {
  for (const auto& s : steps)
    if (s.status != StepStatus::Pass) return s.step;
  return std::nullopt;
}

PolyMap normalize_basepoints(const PolyMap& f, const Point& p, const Point& q, const SimpleModelStructure& b) {
  require_same_dim(f.n(), b.n(), "normalize_basepoints");
  require_same_dim(f.n(), static_cast<int>(p.size()), "normalize_basepoints p");
  require_same_dim(f.n(), static_cast<int>(q.size()), "normalize_basepoints q");
  if (!on_boundary(p)) fail(ErrorKind::Precondition, "normalize_basepoints: p is not on the boundary");
  if (!on_boundary(q)) fail(ErrorKind::Precondition, "normalize_basepoints: q is not on the boundary");
  bool p_origin = true;
  for (const auto& x : p) p_origin = p_origin && x.is_zero();
  if (f.truncated() && !p_origin) {
    fail(ErrorKind::Precondition, "normalize_basepoints: a truncated map can only be based at the origin");
  }
  if (f.evaluate(p) != q) fail(ErrorKind::Precondition, "normalize_basepoints: f(p) != q");
  const PolyMap shift_in = make_translation(p, b).as_polymap();
  const PolyMap shift_out = invert(make_translation(q, b)).as_polymap();
  PolyMap out = compose(shift_out, compose(f, shift_in));
  if (!out.fixes_origin()) fail(ErrorKind::Internal, "normalize_basepoints: result does not fix the origin");
  return out;
}

ReconstructionTrace verify_constraints(const PolyMap& f, const SimpleModelStructure& b) {
  const int n = f.n();
  require_same_dim(n, b.n(), "verify_constraints");
  if (n < 3 || nijenhuis_vanishes(b.to_model())) {
    fail(ErrorKind::Precondition,
         "verify_constraints: integrable case (n = 2 or B = 0) is handled by classical theory and "
         "is not supported here");
  }
  if (f.truncated() && *f.truncation_order() < 2) {
    fail(ErrorKind::Precondition, "verify_constraints: truncation order must be at least 2");
  }
  const int m = n - 1;
  ReconstructionTrace trace;
  auto add = [&](int step, std::string name, std::string anchor, bool ok, json data) {
    trace.steps.push_back({step, std::move(name), std::move(anchor), ok ? StepStatus::Pass : StepStatus::Fail,
                           std::move(data)});
    return ok;
  };

  // (1) shape of a boundary-preserving pseudo-holomorphic map fixing 0
  {
    const FormResult form = check_form(f);
    json d = io::to_json(form);
    bool ok = form.pass;
    if (ok && !f.fixes_origin()) {
      ok = false;
      d["reason"] = "F(0) != 0";
      d["F(0)"] = io::to_json(f.evaluate(Point(n)));
    }
    if (!add(1, "form", "F = (F'(z'), c z_n + phi(zbar')) with c real and F(0) = 0", ok, std::move(d))) return trace;
  }
  const Jet2 jet = extract_jet2(f);
  const auto system = component_system_residuals(b, f);

  // (2) constant terms of the component system give a^n_{jbar} = 0
  {
    std::vector<ComplexRational> consts, implied;
    const ComplexRational minus_two_i(0, -2);
    for (const auto& e : system) {
      consts.push_back(e.constant_term());
      implied.push_back((e.constant_term() / minus_two_i).conj());
    }
    for (int k = 0; k < m; ++k)
      if (implied[k] != jet.antiholo_lin[k]) fail(ErrorKind::Internal, "component-system constants disagree with the jet");
    json d{{"constant_terms", io::to_json(consts)}, {"a_n_jbar", io::to_json(implied)}};
    if (!add(2, "antiholomorphic_linear", "constant terms of the component system: a^n_{jbar} = 0",
             all_zero(implied), std::move(d)))
      return trace;
  }

  // boundary expansion, to third order
  const std::optional<int> order = f.truncation_order();
  const int bound = order ? std::min(*order, 3) : 3;
  const BoundaryPoly boundary =
      reduce_mod_boundary(substitute(rho(n), f.components(), bound), bound).truncated(bound);
  auto bcoef = [&](std::initializer_list<int> zs, std::initializer_list<int> zbs) {
    return boundary.representative().coefficient(mono(n, zs, zbs));
  };

  // (3) zbar_k zbar_l terms of rho(F) on Gamma give a^n_{kbar,lbar} = 0
  {
    Matrix implied(m, m);
    bool ok = true;
    for (int k = 1; k <= m; ++k)
      for (int l = k; l <= m; ++l) {
        // Re F_n contributes half of each zbar_k zbar_l monomial coefficient
        const ComplexRational coeff = bcoef({}, {k, l}) * ComplexRational(2);
        const ComplexRational v = symmetric_slot(coeff, k, l);
        implied(k - 1, l - 1) = v;
        implied(l - 1, k - 1) = v;
        ok = ok && v.is_zero();
      }
    if (implied != jet.antiholo_quad) fail(ErrorKind::Internal, "boundary expansion disagrees with the jet");
    if (!add(3, "antiholomorphic_quadratic", "zbar_k zbar_l terms of rho(F) on Gamma: a^n_{kbar,lbar} = 0", ok,
             json{{"a_n_kbar_lbar", io::to_json(implied)}}))
      return trace;
  }

  // (4) local diffeomorphism: A invertible
  {
    const ComplexRational det = determinant(jet.a);
    if (!add(4, "linear_part_invertible", "A = (a^j_k) invertible", !det.is_zero(),
             json{{"A", io::to_json(jet.a)}, {"det", io::to_json(det)}}))
      return trace;
  }

  // (5) zbar_k z_p z_l terms: sum_j a^j_{p,l} conj(a^j_k) = r_{k,p,l}; A invertible forces a^j_{p,l} = 0
  {
    const bool third_order = !order || *order >= 3;
    const Matrix system_matrix = jet.a.adjoint();  // row k: conj(a^j_k) over j
    json nonzero = json::array();
    bool ok = true;
    for (int p = 1; p <= m; ++p)
      for (int l = p; l <= m; ++l) {
        std::vector<ComplexRational> rhs(m);
        for (int k = 1; k <= m; ++k) {
          if (third_order) {
            rhs[k - 1] = bcoef({p, l}, {k});
          } else {
            for (int j = 0; j < m; ++j)
              rhs[k - 1] += f[j].coefficient(mono(n, {p, l}, {})) * jet.a(j, k - 1).conj();
          }
        }
        const auto x = solve(system_matrix, rhs);
        if (!x) fail(ErrorKind::Internal, "coefficient system singular after the invertibility step");
        for (int j = 0; j < m; ++j) {
          const ComplexRational v = symmetric_slot((*x)[j], p, l);
          if (v != jet.quad_holo[j](p - 1, l - 1)) fail(ErrorKind::Internal, "quadratic system disagrees with the jet");
          if (!v.is_zero()) {
            ok = false;
            nonzero.push_back({{"j", j + 1}, {"p", p}, {"l", l}, {"value", io::to_json(v)}});
          }
        }
      }
    json d{{"nonzero_a_j_pl", nonzero},
           {"source", third_order ? "third-order boundary coefficients" : "jet products (order-2 input)"}};
    if (!add(5, "holomorphic_quadratic", "sum_j a^j_{p,l} conj(a^j_k) = 0 with A invertible: a^j_{p,l} = 0", ok,
             std::move(d)))
      return trace;
  }

  // (6) z_p zbar_k terms: -c delta_{pk} + sum_j a^j_p conj(a^j_k) = 0, i.e. A^t conj(A) = c I
  {
    Matrix coeffs(m, m);
    for (int p = 1; p <= m; ++p)
      for (int k = 1; k <= m; ++k) coeffs(p - 1, k - 1) = bcoef({p}, {k});
    const Matrix gram = jet.a.transpose() * jet.a.conj();
    if (coeffs != gram - Matrix::scalar(m, jet.c)) fail(ErrorKind::Internal, "z zbar coefficients disagree with the jet");
    if (!add(6, "conformal_unitarity", "z_p zbar_k terms of rho(F) on Gamma: A^t conj(A) = c I", coeffs.is_zero(),
             json{{"z_p_zbar_k_coefficients", io::to_json(coeffs)}, {"AtAbar", io::to_json(gram)},
                  {"c", io::to_json(jet.c)}}))
      return trace;
  }

  // (7) c = sum_j |a^j_1|^2 > 0
  {
    mpq_class sum = 0;
    for (int j = 0; j < m; ++j) sum += jet.a(j, 0).norm2();
    const bool ok = jet.c.is_real() && jet.c.re() == sum && sgn(sum) > 0;
    if (!add(7, "c_positive", "c = sum_j |a^j_1|^2 > 0", ok,
             json{{"c", io::to_json(jet.c)}, {"sum_abs_a_j1_sq", io::to_json(sum)}}))
      return trace;
  }

  // (8) linear terms of the component system: A^t B A = c B
  {
    Matrix coeffs(m, m);
    for (int j = 0; j < m; ++j)
      for (int l = 1; l <= m; ++l) coeffs(j, l - 1) = system[j].coefficient(mono(n, {l}, {}));
    const Matrix direct = jet.a.transpose() * b.b() * jet.a - jet.c * b.b();
    if (coeffs != direct) fail(ErrorKind::Internal, "component-system linear terms disagree with the jet");
    if (!add(8, "structure_compatible", "linear terms of the component system: A^t B A = c B", coeffs.is_zero(),
             json{{"AtBA_minus_cB", io::to_json(coeffs)}}))
      return trace;
  }
  return trace;
}

Reconstruction reconstruct(const PolyMap& f, const SimpleModelStructure& b) {
  Reconstruction out;
  out.trace = verify_constraints(f, b);
  if (!out.trace.passed()) return out;
  const Jet2 jet = extract_jet2(f);
  Automorphism g(b, jet.a, jet.c.re(), Point(f.n()));
  const PolyMap gm = g.as_polymap();
  json mismatches = json::array();
  for (int k = 0; k < f.n(); ++k) {
    const Poly diff = f[k].truncated(2) - gm[k].truncated(2);
    for (const auto& [mo, c] : diff.terms())
      mismatches.push_back({{"component", k + 1}, {"monomial", monomial_label(mo)}, {"difference", io::to_json(c)}});
  }
  const bool ok = mismatches.empty();
  out.trace.steps.push_back({9, "two_jet_agreement", "2-jet of G = Phi_{A'} o Lambda_{1/c} equals the 2-jet of F",
                             ok ? StepStatus::Pass : StepStatus::Fail,
                             json{{"mismatches", mismatches}, {"automorphism", io::to_json(g)}}});
  if (ok) out.g = std::move(g);
  return out;
}

const char* to_string(ExtensionVerdict v) {
  switch (v) {
    case ExtensionVerdict::Extends: return "extends";
    case ExtensionVerdict::AgreesToOrder: return "agrees_to_order";
    case ExtensionVerdict::Disagrees: return "disagrees";
  }
  return "?";
}

ExtensionReport verify_extension(const PolyMap& f, const Automorphism& g) {
  require_same_dim(f.n(), g.n(), "verify_extension");
  const PolyMap gm = g.as_polymap();
  const auto order = f.truncation_order();
  ExtensionReport rep;
  for (int k = 0; k < f.n(); ++k) {
    Poly::Terms all;
    for (const auto& [mo, c] : f[k].terms()) all.emplace(mo, c);
    for (const auto& [mo, c] : gm[k].terms()) all.emplace(mo, c);
    for (const auto& [mo, c] : all) {
      if (order && mo.degree() > *order) continue;
      ++rep.coefficients_compared;
      const ComplexRational fv = f[k].coefficient(mo), gv = gm[k].coefficient(mo);
      if (fv == gv) continue;
      const bool lower = !rep.first_disagreement || mo.degree() < rep.first_disagreement->monomial.degree();
      if (lower) rep.first_disagreement = Disagreement{k + 1, mo, fv, gv};
    }
  }
  if (rep.first_disagreement) {
    rep.verdict = ExtensionVerdict::Disagrees;
  } else if (order) {
    rep.verdict = ExtensionVerdict::AgreesToOrder;
    rep.order = order;
    rep.note = "agrees to order " + std::to_string(*order) +
               "; equality beyond that order rests on 2-jet determination of CR maps of the boundary";
  } else {
    rep.verdict = ExtensionVerdict::Extends;
    rep.note = "every coefficient agrees";
  }
  return rep;
}

}  // namespace siegel
