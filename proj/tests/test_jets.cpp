#include <gtest/gtest.h>

#include "siegel/error.hpp"
#include "siegel/jets.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace siegel {
namespace {

using testing::Rng;

Poly z(int n, int j) { return Poly::z(n, j); }
Poly zb(int n, int j) { return Poly::zbar(n, j); }

SimpleModelStructure b12(int n, const ComplexRational& b) {
  Matrix m(n - 1, n - 1);
  m(0, 1) = b;
  m(1, 0) = -b;
  return {n, m};
}

PolyMap identity_with(int n, int comp, const Poly& extra, const ComplexRational& c = 1) {
  std::vector<Poly> comps;
  for (int j = 1; j < n; ++j) comps.push_back(z(n, j));
  comps.push_back(c * z(n, n));
  comps[comp] += extra;
  return {n, comps};
}

const std::vector<std::string> kStepNames{"form",
                                          "antiholomorphic_linear",
                                          "antiholomorphic_quadratic",
                                          "linear_part_invertible",
                                          "holomorphic_quadratic",
                                          "conformal_unitarity",
                                          "c_positive",
                                          "structure_compatible",
                                          "two_jet_agreement"};

TEST(Normalize, IdentityAtOrigin) {
  const auto b = b12(3, 1);
  EXPECT_EQ(normalize_basepoints(PolyMap::identity(3), Point(3), Point(3), b), PolyMap::identity(3));
}

TEST(Normalize, TranslationBecomesIdentity) {
  Rng rng(81);
  for (int t = 0; t < 5; ++t) {
    const auto b = testing::random_structure(4, rng);
    const Point xi = testing::boundary_point(4, rng);
    const PolyMap f = make_translation(xi, b).as_polymap();
    EXPECT_EQ(normalize_basepoints(f, Point(4), xi, b), PolyMap::identity(4));
  }
}

TEST(Normalize, RandomAutomorphismFixesOrigin) {
  Rng rng(82);
  for (int t = 0; t < 5; ++t) {
    const auto b = testing::block_structure(3, rng);
    const Automorphism g = testing::random_automorphism(b, rng, true);
    const Point p = testing::boundary_point(3, rng);
    const PolyMap f = normalize_basepoints(g.as_polymap(), p, g.apply(p), b);
    EXPECT_TRUE(f.fixes_origin());
    EXPECT_EQ(f.evaluate(Point(3)), Point(3));
  }
}

TEST(Normalize, Preconditions) {
  const auto b = b12(3, 1);
  const Point off{0, 0, 1};
  EXPECT_THROW(normalize_basepoints(PolyMap::identity(3), off, off, b), Error);
  const Point p{1, 0, -1};
  EXPECT_THROW(normalize_basepoints(PolyMap::identity(3), p, Point(3), b), Error);
}

TEST(Extract, Identity) {
  const Jet2 j = extract_jet2(PolyMap::identity(3));
  EXPECT_EQ(j.a, Matrix::identity(2));
  EXPECT_EQ(j.c, ComplexRational(1));
  for (const auto& q : j.quad_holo) EXPECT_TRUE(q.is_zero());
  EXPECT_TRUE(j.antiholo_quad.is_zero());
  EXPECT_TRUE(j.residual_terms.empty());
  ASSERT_TRUE(j.antiholo_cubic.has_value());
  EXPECT_TRUE(j.antiholo_cubic->empty());
}

TEST(Extract, AutomorphismLinearPart) {
  Rng rng(83);
  for (int t = 0; t < 10; ++t) {
    const int n = testing::uniform_int(rng, 3, 5);
    const auto b = testing::block_structure(n, rng);
    const Automorphism g = testing::random_automorphism(b, rng, false);
    const Jet2 j = extract_jet2(g.as_polymap());
    EXPECT_EQ(j.a, g.a());
    EXPECT_EQ(j.c, ComplexRational(g.c()));
    for (const auto& q : j.quad_holo) EXPECT_TRUE(q.is_zero());
    for (const auto& x : j.antiholo_lin) EXPECT_TRUE(x.is_zero());
    EXPECT_TRUE(j.residual_terms.empty());
  }
}

TEST(Extract, PlantedCoefficients) {
  const int n = 3;
  const Jet2 a = extract_jet2(identity_with(n, n - 1, zb(n, 1)));
  EXPECT_EQ(a.antiholo_lin, (std::vector<ComplexRational>{1, 0}));
  const Jet2 b = extract_jet2(identity_with(n, 0, z(n, 1) * z(n, 2)));
  EXPECT_EQ(b.quad_holo[0](0, 1), ComplexRational(mpq_class(1, 2)));
  EXPECT_EQ(b.quad_holo[0](1, 0), ComplexRational(mpq_class(1, 2)));
  const Jet2 c = extract_jet2(identity_with(n, n - 1, ComplexRational(5) * zb(n, 2) * zb(n, 2)));
  EXPECT_EQ(c.antiholo_quad(1, 1), ComplexRational(5));
  const Jet2 d = extract_jet2(identity_with(n, 0, z(n, 3)));
  ASSERT_EQ(d.residual_terms.size(), 1u);
  EXPECT_EQ(d.residual_terms[0].component, 1);
  const Jet2 e = extract_jet2(identity_with(n, n - 1, zb(n, 1) * zb(n, 1) * zb(n, 2)));
  ASSERT_TRUE(e.antiholo_cubic.has_value());
  EXPECT_EQ(e.antiholo_cubic->size(), 1u);
  EXPECT_FALSE(extract_jet2(identity_with(n, 0, Poly(n)).truncated_to(2)).antiholo_cubic.has_value());
  EXPECT_THROW(extract_jet2(identity_with(n, 2, Poly::constant(n, 1))), Error);
}

TEST(Constraints, AutomorphismPassesAllSteps) {
  Rng rng(84);
  for (int t = 0; t < 10; ++t) {
    const int n = testing::uniform_int(rng, 3, 5);
    const auto b = testing::block_structure(n, rng);
    const ReconstructionTrace tr = verify_constraints(testing::random_automorphism(b, rng, false).as_polymap(), b);
    ASSERT_TRUE(tr.passed());
    ASSERT_EQ(tr.steps.size(), 8u);
    for (std::size_t k = 0; k < tr.steps.size(); ++k) {
      EXPECT_EQ(tr.steps[k].step, static_cast<int>(k) + 1);
      EXPECT_EQ(tr.steps[k].name, kStepNames[k]);
    }
  }
}

TEST(Constraints, StrayZbarFailsStepTwo) {
  const int n = 3;
  const auto b = b12(n, 1);
  const PolyMap f = identity_with(n, n - 1, zb(n, 1), 2);
  const ReconstructionTrace tr = verify_constraints(f, b);
  EXPECT_EQ(tr.failed_step(), 2);
  EXPECT_EQ(tr.steps.size(), 2u);
  EXPECT_FALSE(testing::brute_force_jet_match(f, b).exists);
}

TEST(Constraints, QuadraticHolomorphicTermFailsStepFive) {
  for (int n = 3; n <= 5; ++n) {
    Matrix m(n - 1, n - 1);
    m(0, 1) = ComplexRational(1);
    m(1, 0) = ComplexRational(-1);
    const SimpleModelStructure b(n, m);
    const PolyMap f = identity_with(n, 0, z(n, 1) * z(n, 1));
    const ReconstructionTrace tr = verify_constraints(f, b);
    EXPECT_EQ(tr.failed_step(), 5);
    EXPECT_FALSE(testing::brute_force_jet_match(f, b).exists);
    EXPECT_EQ(verify_constraints(f.truncated_to(2), b).failed_step(), 5);
  }
}

TEST(Constraints, BoundaryBreakingTranslationFailsStepOne) {
  const int n = 3;
  const auto b = b12(n, 1);
  const PolyMap f = identity_with(n, n - 1, Poly::constant(n, 1));
  EXPECT_EQ(verify_constraints(f, b).failed_step(), 1);
  EXPECT_FALSE(testing::brute_force_jet_match(f, b).exists);
}

TEST(Constraints, AntiholomorphicQuadraticFailsStepThree) {
  const int n = 3;
  const auto b = b12(n, 1);
  const PolyMap f = identity_with(n, n - 1, zb(n, 1) * zb(n, 2));
  EXPECT_EQ(verify_constraints(f, b).failed_step(), 3);
  EXPECT_FALSE(testing::brute_force_jet_match(f, b).exists);
}

TEST(Constraints, SingularLinearPartFailsStepFour) {
  const int n = 3;
  const PolyMap f(n, {z(n, 1), Poly(n), z(n, 3)});
  EXPECT_EQ(verify_constraints(f, b12(n, 1)).failed_step(), 4);
}

TEST(Constraints, NonConformalFailsStepSix) {
  const int n = 3;
  const PolyMap f(n, {ComplexRational(2) * z(n, 1), z(n, 2), z(n, 3)});
  EXPECT_EQ(verify_constraints(f, b12(n, 1)).failed_step(), 6);
  EXPECT_FALSE(testing::brute_force_jet_match(f, b12(n, 1)).exists);
}

TEST(Constraints, NegativeCFailsStepSix) {
  const int n = 3;
  const PolyMap f = identity_with(n, 0, Poly(n), -1);
  EXPECT_EQ(verify_constraints(f, b12(n, 1)).failed_step(), 6);
}

TEST(Constraints, StructureIncompatibleFailsStepEight) {
  // unitary A with A^t B A != B: swap the first and third coordinates for B = b_12
  const int n = 4;
  Matrix m(3, 3);
  m(0, 1) = ComplexRational(1);
  m(1, 0) = ComplexRational(-1);
  const SimpleModelStructure b(n, m);
  const PolyMap f(n, {z(n, 3), z(n, 2), z(n, 1), z(n, 4)});
  const ReconstructionTrace tr = verify_constraints(f, b);
  EXPECT_EQ(tr.failed_step(), 8);
  EXPECT_FALSE(testing::brute_force_jet_match(f, b).exists);
}

TEST(Constraints, IntegrableCasesRefused) {
  EXPECT_THROW(verify_constraints(PolyMap::identity(2), SimpleModelStructure(2, Matrix(1, 1))), Error);
  EXPECT_THROW(verify_constraints(PolyMap::identity(3), SimpleModelStructure(3, Matrix(2, 2))), Error);
  try {
    verify_constraints(PolyMap::identity(3), SimpleModelStructure(3, Matrix(2, 2)));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
    EXPECT_NE(std::string(e.what()).find("integrable"), std::string::npos);
  }
}

TEST(Constraints, CPositivityInPassingTraces) {
  Rng rng(85);
  for (int t = 0; t < 10; ++t) {
    const int n = testing::uniform_int(rng, 3, 5);
    const auto b = testing::block_structure(n, rng);
    const Automorphism g = testing::random_automorphism(b, rng, false);
    const Jet2 j = extract_jet2(g.as_polymap());
    mpq_class s = 0;
    for (int k = 0; k < n - 1; ++k) s += j.a(k, 0).norm2();
    EXPECT_EQ(ComplexRational(s), j.c);
    EXPECT_GT(sgn(s), 0);
  }
}

TEST(Reconstruct, RoundTrip) {
  Rng rng(86);
  for (int t = 0; t < 20; ++t) {
    const int n = testing::uniform_int(rng, 3, 5);
    const auto b = testing::block_structure(n, rng);
    const Automorphism g = testing::random_automorphism(b, rng, false);
    const Reconstruction r = reconstruct(g.as_polymap(), b);
    ASSERT_TRUE(r.g.has_value());
    EXPECT_EQ(*r.g, g);
    ASSERT_EQ(r.trace.steps.size(), 9u);
    EXPECT_EQ(r.trace.steps.back().name, kStepNames.back());
  }
}

TEST(Reconstruct, IdentityAndScaledExample) {
  const auto b = b12(3, mpq_class(3, 7));
  const Reconstruction id = reconstruct(PolyMap::identity(3), b);
  ASSERT_TRUE(id.g.has_value());
  EXPECT_EQ(*id.g, Automorphism::identity(b));

  const PolyMap f(3, {ComplexRational(2) * z(3, 1), ComplexRational(2) * z(3, 2), ComplexRational(4) * z(3, 3)});
  const Reconstruction r = reconstruct(f, b);
  ASSERT_TRUE(r.g.has_value());
  EXPECT_EQ(r.g->a(), Matrix::scalar(2, ComplexRational(2)));
  EXPECT_EQ(r.g->c(), mpq_class(4));
  const FactoredView v = factored_view(*r.g);
  EXPECT_EQ(*v.a_unit, Matrix::identity(2));
  EXPECT_EQ(v.tau, mpq_class(1, 4));
}

TEST(Reconstruct, ConjugationCoherence) {
  Rng rng(87);
  for (int t = 0; t < 5; ++t) {
    const int n = testing::uniform_int(rng, 3, 4);
    const auto b = testing::block_structure(n, rng);
    const Automorphism g = testing::random_automorphism(b, rng, true);
    const Point p = testing::boundary_point(n, rng);
    const Point q = g.apply(p);
    const Reconstruction r = reconstruct(normalize_basepoints(g.as_polymap(), p, q, b), b);
    ASSERT_TRUE(r.g.has_value());
    const Automorphism back = compose(make_translation(q, b), compose(*r.g, invert(make_translation(p, b))));
    EXPECT_EQ(back, g);
    for (int s = 0; s < 20; ++s) {
      const Point x = testing::random_point(n, rng);
      EXPECT_EQ(back.apply(x), g.apply(x));
    }
  }
}

TEST(Reconstruct, TruncatedInputAtOrderTwo) {
  Rng rng(88);
  const auto b = testing::block_structure(4, rng);
  const Automorphism g = testing::random_automorphism(b, rng, false);
  const Reconstruction r = reconstruct(g.as_polymap().truncated_to(2), b);
  ASSERT_TRUE(r.g.has_value());
  EXPECT_EQ(*r.g, g);
}

/// Degree 1..2 term that keeps the shape (F'(z'), c z_n + phi(zbar')).
Poly form_preserving_term(int n, int component, Rng& rng) {
  MultiIndex alpha(n, 0), beta(n, 0);
  const int d = testing::uniform_int(rng, 1, 2);
  for (int e = 0; e < d; ++e) {
    const int var = testing::uniform_int(rng, 0, n - 2);
    if (component == n - 1) ++beta[var];
    else ++alpha[var];
  }
  return Poly::monomial(n, alpha, beta, testing::nonzero_complex(rng, 3));
}

TEST(Soundness, FailingTracesHaveNoMatchingAutomorphism) {
  Rng rng(89);
  int failing = 0;
  for (int t = 0; t < 60; ++t) {
    const int n = testing::uniform_int(rng, 3, 4);
    const auto b = testing::block_structure(n, rng);
    PolyMap f = testing::random_automorphism(b, rng, false).as_polymap();
    if (t % 4 != 0) {
      const int comp = testing::uniform_int(rng, 0, n - 1);
      f = testing::perturbed(f, form_preserving_term(n, comp, rng), comp);
    }
    ASSERT_TRUE(check_form(f).pass);
    const ReconstructionTrace tr = verify_constraints(f, b);
    const testing::JetMatch m = testing::brute_force_jet_match(f, b);
    EXPECT_EQ(tr.passed(), m.exists) << m.reason;
    if (!tr.passed()) ++failing;
  }
  EXPECT_GT(failing, 20);
}

TEST(Extension, FullAgreement) {
  Rng rng(90);
  const auto b = testing::block_structure(3, rng);
  const Automorphism g = testing::random_automorphism(b, rng, true);
  const ExtensionReport r = verify_extension(g.as_polymap(), g);
  EXPECT_EQ(r.verdict, ExtensionVerdict::Extends);
  EXPECT_GT(r.coefficients_compared, 0u);
}

TEST(Extension, DegreeFivePerturbationLocated) {
  Rng rng(91);
  const auto b = testing::block_structure(3, rng);
  const Automorphism g = testing::random_automorphism(b, rng, true);
  const Poly bump = ComplexRational(7) * pow(z(3, 1), 3) * pow(zb(3, 2), 2);
  const ExtensionReport r = verify_extension(testing::perturbed(g.as_polymap(), bump, 1), g);
  EXPECT_EQ(r.verdict, ExtensionVerdict::Disagrees);
  ASSERT_TRUE(r.first_disagreement.has_value());
  EXPECT_EQ(r.first_disagreement->component, 2);
  EXPECT_EQ(r.first_disagreement->monomial.degree(), 5);
  EXPECT_EQ(r.first_disagreement->f_value - r.first_disagreement->g_value, ComplexRational(7));
}

TEST(Extension, TruncatedAgreesToOrder) {
  Rng rng(92);
  const auto b = testing::block_structure(3, rng);
  const Automorphism g = testing::random_automorphism(b, rng, false);
  const PolyMap f = testing::perturbed(g.as_polymap(), pow(z(3, 1), 4), 0).truncated_to(3);
  const ExtensionReport r = verify_extension(f, g);
  EXPECT_EQ(r.verdict, ExtensionVerdict::AgreesToOrder);
  EXPECT_EQ(r.order, 3);
}

}  // namespace
}  // namespace siegel
