#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "siegel/autgroup.hpp"
#include "siegel/linalg.hpp"
#include "siegel/maps.hpp"

namespace siegel {

struct TermRef {
  int component;  // 1-based
  Monomial monomial;
  ComplexRational value;
};

/// Order-2 Taylor data at 0 of a map fixing the origin:
///   F_j = sum_l A_{jl} z_l + sum_{k,l} quad_holo[j][k][l] z_k z_l + ...         (j < n)
///   F_n = c z_n + sum_k antiholo_lin[k] zbar_k + sum_{k,l} antiholo_quad[k][l] zbar_k zbar_l + ...
/// The quadratic tensors are symmetric: a monomial coefficient m_{kl} (k != l)
/// is split as m_{kl}/2 into both slots.
struct Jet2 {
  int n = 0;
  Matrix a;
  ComplexRational c;
  std::vector<Matrix> quad_holo;   // one (n-1)x(n-1) matrix per component j < n
  std::vector<ComplexRational> antiholo_lin;
  Matrix antiholo_quad;
  /// a^n_{pbar,kbar,lbar}, read as monomial coefficients of zbar^3 terms; only
  /// present when the input is known to order >= 3.
  std::optional<std::vector<TermRef>> antiholo_cubic;
  /// Every other coefficient of total order 1 or 2.
  std::vector<TermRef> residual_terms;
};

Jet2 extract_jet2(const PolyMap& f);

enum class StepStatus { Pass, Fail };

struct TraceStep {
  int step;
  std::string name;
  std::string anchor;  // the identity this step checks
  StepStatus status;
  nlohmann::json data;
};

struct ReconstructionTrace {
  std::vector<TraceStep> steps;
  bool passed() const;
  /// Step number of the first failure, if any.
  std::optional<int> failed_step() const;
};

/// F = Psi_q^{-1} o f o Psi_p, so that F(0) = 0.
PolyMap normalize_basepoints(const PolyMap& f, const Point& p, const Point& q, const SimpleModelStructure& b);

/// Runs the coefficient constraints that force the 2-jet of F to be that of an
/// automorphism; halts at the first failed step.
ReconstructionTrace verify_constraints(const PolyMap& f, const SimpleModelStructure& b);

struct Reconstruction {
  std::optional<Automorphism> g;
  ReconstructionTrace trace;
};

/// G = (A, c, 0) from the 2-jet of F after the constraints pass; the trace gets a
/// final step confirming that the 2-jets of F and G coincide.
Reconstruction reconstruct(const PolyMap& f, const SimpleModelStructure& b);

enum class ExtensionVerdict { Extends, AgreesToOrder, Disagrees };
const char* to_string(ExtensionVerdict v);

struct Disagreement {
  int component;  // 1-based
  Monomial monomial;
  ComplexRational f_value;
  ComplexRational g_value;
};

struct ExtensionReport {
  ExtensionVerdict verdict;
  std::optional<int> order;  // for AgreesToOrder
  std::optional<Disagreement> first_disagreement;  // lowest degree
  std::size_t coefficients_compared = 0;
  std::string note;
};

ExtensionReport verify_extension(const PolyMap& f, const Automorphism& g);

}  // namespace siegel
