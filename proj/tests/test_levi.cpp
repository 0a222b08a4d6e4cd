#include <gtest/gtest.h>

#include <cmath>

#include "siegel/boundary.hpp"
#include "siegel/error.hpp"
#include "siegel/levi.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace siegel {
namespace {

using testing::Rng;

const ComplexRational kI = ComplexRational::i();

VectorField d(int n, int k, bool bar) { return VectorField::coordinate(n, k, bar); }

VectorField random_field(int n, Rng& rng, int terms = 2, int degree = 2) {
  std::vector<Poly> comps;
  for (int s = 0; s < 2 * n; ++s) comps.push_back(testing::random_poly(n, rng, terms, degree));
  return {n, comps};
}

TEST(Bracket, ConstantFieldsCommute) { EXPECT_TRUE(lie_bracket(d(2, 1, false), d(2, 1, true)).is_zero()); }

TEST(Bracket, StandardFrameN2) {
  const int n = 2;
  const TangentFrame f = tangent_frame(ModelStructure::standard(n));
  const VectorField br = lie_bracket(f.l[0], f.l[0].conj());
  EXPECT_EQ(br, ComplexRational(2) * d(n, 2, false) - ComplexRational(2) * d(n, 2, true));
}

TEST(Bracket, LieAlgebraIdentities) {
  Rng rng(51);
  for (int t = 0; t < 15; ++t) {
    const int n = testing::uniform_int(rng, 1, 3);
    const VectorField x = random_field(n, rng), y = random_field(n, rng), z = random_field(n, rng);
    EXPECT_EQ(lie_bracket(x, y), ComplexRational(-1) * lie_bracket(y, x));
    EXPECT_EQ(lie_bracket(x + z, y), lie_bracket(x, y) + lie_bracket(z, y));
    const VectorField jacobi =
        lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y));
    EXPECT_TRUE(jacobi.is_zero());
  }
}

TEST(Bracket, ActsAsCommutatorOfDerivations) {
  Rng rng(52);
  for (int t = 0; t < 10; ++t) {
    const int n = 2;
    const VectorField x = random_field(n, rng), y = random_field(n, rng);
    const Poly f = testing::random_poly(n, rng, 4, 3);
    EXPECT_EQ(lie_bracket(x, y).apply(f), x.apply(y.apply(f)) - y.apply(x.apply(f)));
  }
}

TEST(VectorFieldReality, FlagTracksConjugation) {
  Rng rng(53);
  const VectorField x = random_field(2, rng);
  EXPECT_TRUE((x + x.conj()).is_real());
  EXPECT_EQ(x.conj().conj(), x);
  EXPECT_TRUE(d(2, 1, false).is_real() == false);
}

TEST(ApplyJ, Basics) {
  const int n = 3;
  EXPECT_EQ(apply_J(ModelStructure::standard(n), d(n, 1, false)), kI * d(n, 1, false));
  Rng rng(54);
  for (int t = 0; t < 10; ++t) {
    const ModelStructure j = testing::random_model(n, rng);
    const VectorField x = random_field(n, rng);
    EXPECT_EQ(apply_J(j, apply_J(j, x)), ComplexRational(-1) * x);
  }
}

TEST(LeviForm, StandardN2) {
  const int n = 2;
  const ModelStructure j = ModelStructure::standard(n);
  const TangentFrame f = tangent_frame(j);
  const VectorField x = f.l[0] + f.l[0].conj();
  EXPECT_EQ(levi_form(j, x, Point(n)), mpq_class(4));
  EXPECT_EQ(levi_form(j, ComplexRational(2) * x, Point(n)), mpq_class(16));
}

TEST(LeviForm, StandardN3SecondFrameField) {
  const int n = 3;
  const ModelStructure j = ModelStructure::standard(n);
  const TangentFrame f = tangent_frame(j);
  EXPECT_EQ(levi_form(j, f.l[1] + f.l[1].conj(), Point(n)), mpq_class(4));
}

TEST(LeviForm, Preconditions) {
  const int n = 2;
  const ModelStructure j = ModelStructure::standard(n);
  const TangentFrame f = tangent_frame(j);
  EXPECT_THROW(levi_form(j, f.l[0], Point(n)), Error);                      // not real
  EXPECT_THROW(levi_form(j, d(n, 2, false) + d(n, 2, true), Point(n)), Error);  // not in H^J Gamma
  EXPECT_THROW(levi_form(j, f.l[0] + f.l[0].conj(), Point{ComplexRational(0), ComplexRational(1)}), Error);
}

TEST(LeviForm, IndependentOfExtensionOffGamma) {
  Rng rng(55);
  for (int t = 0; t < 8; ++t) {
    const int n = 3;
    const ModelStructure j = testing::random_structure(n, rng).to_model();
    const TangentFrame f = tangent_frame(j);
    const VectorField x = f.l[0] + f.l[0].conj();
    VectorField y = random_field(n, rng, 2, 1);
    y = y + y.conj();
    const Point p = testing::boundary_point(n, rng, 3);
    EXPECT_EQ(levi_form(j, x + rho(n) * y, p), levi_form(j, x, p));
  }
}

TEST(LeviMatrix, StandardIsFourIdentity) {
  for (int n = 2; n <= 5; ++n) {
    const LeviReport r = levi_matrix(ModelStructure::standard(n), Point(n));
    EXPECT_EQ(r.matrix, Matrix::scalar(n - 1, ComplexRational(4)));
    EXPECT_TRUE(r.positive);
    EXPECT_FALSE(r.witness.has_value());
  }
}

TEST(LeviMatrix, SimpleStructuresStayFourIdentity) {
  Rng rng(56);
  for (int t = 0; t < 10; ++t) {
    const int n = testing::uniform_int(rng, 3, 5);
    const auto j = testing::random_structure(n, rng).to_model();
    const Point p = testing::boundary_point(n, rng, 3);
    const LeviReport r = levi_matrix(j, p);
    EXPECT_EQ(r.matrix, Matrix::scalar(n - 1, ComplexRational(4)));
    EXPECT_TRUE(r.positive);
  }
}

TEST(LeviMatrix, SmallBPositive) {
  Matrix b(2, 2);
  b(0, 1) = ComplexRational(mpq_class(1, 10));
  b(1, 0) = -b(0, 1);
  EXPECT_TRUE(levi_matrix(SimpleModelStructure(3, b).to_model(), Point(3)).positive);
}

TEST(LeviMatrix, MatchesClosedFormForGeneralModels) {
  // Lambda_jk = 4 delta_jk + 2 (b^j_k + conj(b^k_j)), b^j_k the zbar_k coefficient of the frame's
  // dzbar_n coefficient -(i/2) Ltilde_j.
  Rng rng(57);
  for (int t = 0; t < 10; ++t) {
    const int n = testing::uniform_int(rng, 2, 4);
    const ModelStructure j = testing::random_model(n, rng, 3);
    const LeviReport r = levi_matrix(j, Point(n));
    ASSERT_TRUE(r.matrix.is_hermitian());
    const ComplexRational mhi(mpq_class(0), mpq_class(-1, 2));
    for (int a = 0; a < n - 1; ++a)
      for (int c = 0; c < n - 1; ++c) {
        const ComplexRational bac = mhi * j.rows()[a].beta[c];
        const ComplexRational bca = mhi * j.rows()[c].beta[a];
        const ComplexRational expected = ComplexRational(a == c ? 4 : 0) + ComplexRational(2) * (bac + bca.conj());
        EXPECT_EQ(r.matrix(a, c), expected);
      }
  }
}

TEST(LeviMatrix, NegativeVerdictCarriesWitness) {
  const int n = 3;
  std::vector<LtildeRow> rows(2, LtildeRow{Point(2), Point(2)});
  rows[0].beta[0] = ComplexRational(0, -4);  // b^1_1 = -(i/2)(-4i) = -2, Lambda_11 = 4 - 8 = -4
  const ModelStructure j(n, rows);
  const LeviReport r = levi_matrix(j, Point(n));
  EXPECT_FALSE(r.positive);
  ASSERT_TRUE(r.witness.has_value());
  ASSERT_TRUE(r.witness_value.has_value());
  EXPECT_LE(sgn(*r.witness_value), 0);
  const TangentFrame f = tangent_frame(j);
  EXPECT_EQ(levi_form(j, real_frame_field(f, *r.witness), Point(n)), *r.witness_value);
}

TEST(LeviMatrix, WitnessFromLaterMinor) {
  const int n = 3;
  std::vector<LtildeRow> rows(2, LtildeRow{Point(2), Point(2)});
  // off-diagonal coupling: b^1_2 = 3 gives Lambda_12 = 6, det = 16 - 36 < 0
  rows[0].beta[1] = ComplexRational(0, 6);
  const ModelStructure j(n, rows);
  const LeviReport r = levi_matrix(j, Point(n));
  EXPECT_FALSE(r.positive);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_LT(sgn(*r.witness_value), 0);
  EXPECT_EQ(levi_form(j, real_frame_field(tangent_frame(j), *r.witness), Point(n)), *r.witness_value);
}

TEST(LeviMatrix, OffBoundaryRejected) {
  EXPECT_THROW(levi_matrix(ModelStructure::standard(2), Point{ComplexRational(1), ComplexRational(0)}), Error);
}

TEST(LeviOracle, FiniteDifferencesAgreeAtOrigin) {
  Rng rng(58);
  for (int t = 0; t < 10; ++t) {
    const int n = testing::uniform_int(rng, 2, 4);
    const ModelStructure j = t == 0 ? ModelStructure::standard(n) : testing::random_model(n, rng, 3);
    const LeviReport r = levi_matrix(j, Point(n));
    const auto fd = testing::levi_matrix_fd_origin(j);
    for (int a = 0; a < n - 1; ++a)
      for (int c = 0; c < n - 1; ++c)
        EXPECT_NEAR(std::abs(fd[static_cast<std::size_t>(a) * (n - 1) + c] - r.matrix(a, c).to_complex()), 0.0, 1e-6);
  }
}

}  // namespace
}  // namespace siegel
