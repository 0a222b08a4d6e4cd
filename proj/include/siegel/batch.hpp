#pragma once

#include <functional>
#include <vector>

#include "siegel/jets.hpp"
#include "siegel/levi.hpp"
#include "siegel/numeric.hpp"

namespace siegel::batch {

// OpenMP kernels over independent inputs. Each has a *_serial twin with the
// same contract, kept as the reference for tests and benchmarks.

using Probe = std::function<double(const numeric::CPoint&)>;

/// max over points of probe(z).
double max_defect(const Probe& probe, const std::vector<numeric::CPoint>& points);
double max_defect_serial(const Probe& probe, const std::vector<numeric::CPoint>& points);

/// max over points of |p(z)|, one entry per polynomial.
std::vector<double> max_abs(const std::vector<Poly>& polys, const std::vector<numeric::CPoint>& points);
std::vector<double> max_abs_serial(const std::vector<Poly>& polys, const std::vector<numeric::CPoint>& points);

std::vector<Reconstruction> reconstruct_all(const std::vector<PolyMap>& maps, const SimpleModelStructure& b);
std::vector<Reconstruction> reconstruct_all_serial(const std::vector<PolyMap>& maps, const SimpleModelStructure& b);

std::vector<LeviReport> levi_grid(const ModelStructure& j, const std::vector<Point>& points);
std::vector<LeviReport> levi_grid_serial(const ModelStructure& j, const std::vector<Point>& points);

std::vector<StructureReport> verify_structures(const std::vector<ModelStructure>& js);
std::vector<StructureReport> verify_structures_serial(const std::vector<ModelStructure>& js);

}  // namespace siegel::batch
