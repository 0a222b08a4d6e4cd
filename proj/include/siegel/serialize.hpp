#pragma once

#include <json.hpp>

#include "siegel/autgroup.hpp"
#include "siegel/jets.hpp"
#include "siegel/levi.hpp"
#include "siegel/maps.hpp"
#include "siegel/structures.hpp"

namespace siegel::io {

using nlohmann::json;

// Exact values: rationals as "p/q" strings, complex scalars as [re, im].
json to_json(const mpq_class& q);
json to_json(const ComplexRational& x);
json to_json(const Matrix& m);
json to_json(const Point& p);
json to_json(const Monomial& m);
json to_json(const Poly& p);
json to_json(const PolyMatrix& m);
json to_json(const PolyMap& f);
json to_json(const SimpleModelStructure& s);
json to_json(const ModelStructure& s);
json to_json(const Automorphism& g);
json to_json(const LeviReport& r);
json to_json(const StructureReport& r);
json to_json(const ResidualReport& r);
json to_json(const FormResult& r);
json to_json(const TangentFrame& f);
json to_json(const VectorField& x);
json to_json(const Jet2& j);
json to_json(const TraceStep& s);
json to_json(const ReconstructionTrace& t);
json to_json(const ExtensionReport& r);

mpq_class rational_from_json(const json& j);
ComplexRational complex_from_json(const json& j);
Matrix matrix_from_json(const json& j);
Point point_from_json(const json& j);
Poly poly_from_json(const json& j, int n);
PolyMap polymap_from_json(const json& j);

/// A structure file: simple {n, B}, general {n, Ltilde}, or an explicit
/// complexified matrix {n, Jc} (kept only for verification).
struct StructureFile {
  ModelStructure model;
  std::optional<SimpleModelStructure> simple;
  std::optional<PolyMatrix> explicit_matrix;
};
StructureFile structure_from_json(const json& j);

/// {A, c, zeta}; B comes from the structure argument unless the file carries it.
Automorphism automorphism_from_json(const json& j, const std::optional<SimpleModelStructure>& b);

json read_json_file(const std::string& path);

}  // namespace siegel::io
