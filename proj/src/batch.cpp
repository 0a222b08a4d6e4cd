#include "siegel/batch.hpp"

#include <algorithm>
#include <exception>


namespace siegel::batch {

namespace {

// Runs body(i) for i in [0, count) across threads; the first exception (by index) is rethrown.
template <class Body>
void parallel_for(std::size_t count, Body body) {
  std::vector<std::exception_ptr> errors(count);
  const auto total = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < total; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

double max_defect(const Probe& probe, const std::vector<numeric::CPoint>& points) {
  std::vector<double> values(points.size());
  parallel_for(points.size(), [&](std::size_t i) { values[i] = probe(points[i]); });
  return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

double max_defect_serial(const Probe& probe, const std::vector<numeric::CPoint>& points) {
  double m = 0;
  for (const auto& z : points) m = std::max(m, probe(z));
  return m;
}

std::vector<double> max_abs(const std::vector<Poly>& polys, const std::vector<numeric::CPoint>& points) {
  const std::size_t np = polys.size(), nz = points.size();
  std::vector<double> values(np * nz);
  parallel_for(np * nz, [&](std::size_t k) {
    values[k] = std::abs(polys[k / nz].evaluate(std::span<const std::complex<double>>(points[k % nz])));
  });
  std::vector<double> out(np, 0.0);
  for (std::size_t k = 0; k < values.size(); ++k) out[k / nz] = std::max(out[k / nz], values[k]);
  return out;
}

std::vector<double> max_abs_serial(const std::vector<Poly>& polys, const std::vector<numeric::CPoint>& points) {
  std::vector<double> out;
  for (const auto& p : polys) {
    double m = 0;
    for (const auto& z : points) m = std::max(m, std::abs(p.evaluate(std::span<const std::complex<double>>(z))));
    out.push_back(m);
  }
  return out;
}

std::vector<Reconstruction> reconstruct_all(const std::vector<PolyMap>& maps, const SimpleModelStructure& b) {
  std::vector<Reconstruction> out(maps.size());
  parallel_for(maps.size(), [&](std::size_t i) { out[i] = reconstruct(maps[i], b); });
  return out;
}

std::vector<Reconstruction> reconstruct_all_serial(const std::vector<PolyMap>& maps, const SimpleModelStructure& b) {
  std::vector<Reconstruction> out;
  for (const auto& f : maps) out.push_back(reconstruct(f, b));
  return out;
}

std::vector<LeviReport> levi_grid(const ModelStructure& j, const std::vector<Point>& points) {
  std::vector<LeviReport> out(points.size());
  parallel_for(points.size(), [&](std::size_t i) { out[i] = levi_matrix(j, points[i]); });
  return out;
}

std::vector<LeviReport> levi_grid_serial(const ModelStructure& j, const std::vector<Point>& points) {
  std::vector<LeviReport> out;
  for (const auto& p : points) out.push_back(levi_matrix(j, p));
  return out;
}

std::vector<StructureReport> verify_structures(const std::vector<ModelStructure>& js) {
  std::vector<StructureReport> out(js.size());
  parallel_for(js.size(), [&](std::size_t i) { out[i] = verify_structure(js[i]); });
  return out;
}

std::vector<StructureReport> verify_structures_serial(const std::vector<ModelStructure>& js) {
  std::vector<StructureReport> out;
  for (const auto& j : js) out.push_back(verify_structure(j));
  return out;
}

}  // namespace siegel::batch
