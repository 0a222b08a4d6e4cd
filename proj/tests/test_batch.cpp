#include <gtest/gtest.h>

#include "siegel/batch.hpp"
#include "siegel/error.hpp"
#include "support/generators.hpp"

namespace siegel {
namespace {

using testing::Rng;

TEST(Batch, MaxDefectMatchesSerial) {
  Rng rng(201);
  const auto b = testing::block_structure(4, rng);
  const Automorphism g = testing::random_automorphism(b, rng, true);
  const auto pts = numeric::samples(4, 500, 7);
  const batch::Probe probe = [&](const numeric::CPoint& z) { return numeric::automorphism_rho_defect(g, z); };
  const double par = batch::max_defect(probe, pts);
  EXPECT_EQ(par, batch::max_defect_serial(probe, pts));
  EXPECT_LT(par, 1e-9);
}

TEST(Batch, MaxAbsMatchesSerial) {
  Rng rng(202);
  std::vector<Poly> polys;
  for (int t = 0; t < 8; ++t) polys.push_back(testing::random_poly(3, rng, 5, 3));
  const auto pts = numeric::samples(3, 300, 9);
  EXPECT_EQ(batch::max_abs(polys, pts), batch::max_abs_serial(polys, pts));
}

TEST(Batch, ReconstructAllMatchesSerial) {
  Rng rng(203);
  const auto b = testing::block_structure(3, rng);
  std::vector<PolyMap> maps;
  for (int t = 0; t < 12; ++t) maps.push_back(testing::random_automorphism(b, rng, false).as_polymap());
  maps.push_back(PolyMap(3, {Poly::z(3, 1) + Poly::z(3, 1) * Poly::z(3, 1), Poly::z(3, 2), Poly::z(3, 3)}));
  const auto par = batch::reconstruct_all(maps, b);
  const auto ser = batch::reconstruct_all_serial(maps, b);
  ASSERT_EQ(par.size(), ser.size());
  for (std::size_t k = 0; k < par.size(); ++k) {
    EXPECT_EQ(par[k].g, ser[k].g);
    EXPECT_EQ(par[k].trace.failed_step(), ser[k].trace.failed_step());
  }
  EXPECT_FALSE(par.back().g.has_value());
}

TEST(Batch, ReconstructAllPropagatesErrors) {
  const SimpleModelStructure integrable(3, Matrix(2, 2));
  EXPECT_THROW(batch::reconstruct_all({PolyMap::identity(3)}, integrable), Error);
}

TEST(Batch, LeviGridMatchesSerial) {
  Rng rng(204);
  const ModelStructure j = testing::random_model(3, rng, 2);
  std::vector<Point> pts;
  for (int t = 0; t < 10; ++t) pts.push_back(testing::boundary_point(3, rng));
  const auto par = batch::levi_grid(j, pts);
  const auto ser = batch::levi_grid_serial(j, pts);
  ASSERT_EQ(par.size(), ser.size());
  for (std::size_t k = 0; k < par.size(); ++k) {
    EXPECT_EQ(par[k].matrix, ser[k].matrix);
    EXPECT_EQ(par[k].positive, ser[k].positive);
  }
}

TEST(Batch, VerifyStructuresMatchesSerial) {
  Rng rng(205);
  std::vector<ModelStructure> js;
  for (int t = 0; t < 10; ++t) js.push_back(testing::random_model(testing::uniform_int(rng, 2, 4), rng));
  const auto par = batch::verify_structures(js);
  const auto ser = batch::verify_structures_serial(js);
  ASSERT_EQ(par.size(), ser.size());
  for (std::size_t k = 0; k < par.size(); ++k) {
    EXPECT_TRUE(par[k].pass);
    EXPECT_EQ(par[k].pass, ser[k].pass);
  }
}

}  // namespace
}  // namespace siegel
