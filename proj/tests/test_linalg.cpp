#include <gtest/gtest.h>

#include "siegel/linalg.hpp"
#include "support/generators.hpp"

namespace siegel {
namespace {

using testing::Rng;

Matrix random_matrix(int m, Rng& rng) {
  Matrix a(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) a(r, c) = testing::complex(rng, 6);
  return a;
}

TEST(Linalg, DeterminantKnown) {
  const Matrix a{{ComplexRational(1), ComplexRational(2)}, {ComplexRational(3), ComplexRational(4)}};
  EXPECT_EQ(determinant(a), ComplexRational(-2));
  EXPECT_EQ(rank(a), 2);
  const Matrix s{{ComplexRational(1), ComplexRational(2)}, {ComplexRational(2), ComplexRational(4)}};
  EXPECT_EQ(determinant(s), ComplexRational(0));
  EXPECT_EQ(rank(s), 1);
  EXPECT_FALSE(inverse(s).has_value());
}

TEST(Linalg, InverseAndSolve) {
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    const int m = testing::uniform_int(rng, 1, 4);
    const Matrix a = random_matrix(m, rng);
    if (determinant(a).is_zero()) continue;
    const auto inv = inverse(a);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(a * *inv, Matrix::identity(m));
    std::vector<ComplexRational> b(m);
    for (auto& x : b) x = testing::complex(rng);
    const auto x = solve(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a.apply(*x), b);
  }
}

TEST(Linalg, DeterminantMultiplicative) {
  Rng rng(32);
  for (int t = 0; t < 20; ++t) {
    const int m = testing::uniform_int(rng, 1, 4);
    const Matrix a = random_matrix(m, rng), b = random_matrix(m, rng);
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
    EXPECT_EQ(determinant(a.transpose()), determinant(a));
  }
}

TEST(Linalg, LeadingMinors) {
  const Matrix a{{ComplexRational(2), ComplexRational(1)}, {ComplexRational(1), ComplexRational(3)}};
  const auto m = leading_minors(a);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0], ComplexRational(2));
  EXPECT_EQ(m[1], ComplexRational(5));
}

TEST(Linalg, Predicates) {
  Rng rng(33);
  const Matrix b = testing::antisymmetric(3, rng);
  EXPECT_TRUE(b.is_antisymmetric());
  EXPECT_FALSE((b + Matrix::identity(3)).is_antisymmetric());
  EXPECT_TRUE((b * b.adjoint()).is_hermitian());
}

}  // namespace
}  // namespace siegel
