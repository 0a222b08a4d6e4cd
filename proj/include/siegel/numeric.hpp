#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "siegel/autgroup.hpp"
#include "siegel/maps.hpp"
#include "siegel/structures.hpp"

namespace siegel::numeric {

using CPoint = std::vector<std::complex<double>>;
using Rng = std::mt19937_64;

CPoint to_complex(const Point& p);
double rho(const CPoint& z);

/// Uniform z' in the box [-radius, radius]^{2(n-1)}, Im z_n in [-radius, radius],
/// Re z_n = -|z'|^2.
CPoint random_boundary_point(int n, Rng& rng, double radius = 1.0);
CPoint random_point(int n, Rng& rng, double radius = 1.0);
std::vector<CPoint> boundary_samples(int n, int count, std::uint64_t seed, double radius = 1.0);
std::vector<CPoint> samples(int n, int count, std::uint64_t seed, double radius = 1.0);

/// Complexified matrix of J at z in floating point.
std::vector<std::complex<double>> complexified_at(const PolyMatrix& jc, const CPoint& z);

// Floating-point defects of the exact identities, each assembled from the
// building blocks (map values, Jacobian entries, structure entries) rather than
// from the symbolic residual.

/// max |dF J(z) - J'(F(z)) dF| over entries.
class PseudoholomorphicProbe {
 public:
  PseudoholomorphicProbe(const ModelStructure& j, const ModelStructure& jp, const PolyMap& f);
  double operator()(const CPoint& z) const;

 private:
  PolyMap f_;
  PolyMatrix jac_, jc_, jcp_;
};

/// max_j |sum_l Lt_l(F) dF_l/dz_j - 2i conj(dF_n/dzbar_j) - Lt_j(z) conj(dF_n/dz_n)|.
class ComponentSystemProbe {
 public:
  ComponentSystemProbe(const SimpleModelStructure& jb, const PolyMap& f);
  double operator()(const CPoint& z) const;

 private:
  SimpleModelStructure jb_;
  PolyMap f_;
  PolyMatrix jac_;
};

/// |rho(F(z))|, meaningful on Gamma.
double boundary_defect(const PolyMap& f, const CPoint& z);

/// |rho(G(z)) - c rho(z)| at any z.
double automorphism_rho_defect(const Automorphism& g, const CPoint& z);

/// max_j max(|L_j rho|, |J L_j - i L_j|) at z.
double frame_defect(const ModelStructure& j, const TangentFrame& frame, const CPoint& z);

}  // namespace siegel::numeric
